#include "flagbundle/kt_cyt.hpp"

#include "flagbundle/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace flagbundle {

CytDatum cyt_datum(const ParabolicDatum& p, long ell) {
    if (ell <= 0) throw DomainError("CYT datum needs ell > 0");
    const long m = static_cast<long>(complement_roots(p).size());
    const long index = fano_index(p);
    const BundleVector q = canonical_fraction_bundle(p, ell);
    CytDatum d{
        .parabolic = p,
        .ell = ell,
        .m = m,
        .I = index,
        .lambda = Rational(index * index, ell * ell * m),
        .omega0_scale = Rational(m * ell * ell, index * index),
        .psi_scale = Rational(index, m * ell),
        .psi_rho_scale = Rational(ell, index),
        .trace_psi = Rational(index, ell),
        .lee_coefficient = Rational(index, m * ell),
        .stated_lee_coefficient = Rational(-index, m * ell),
        .bundle = q,
        .eta = connection_descriptor(q),
    };
    return d;
}

Exponents CytDatum::rho0_exponents() const {
    const Weight w = delta_p(parabolic).weight;
    Exponents e(parabolic.rank(), 0.0);
    for (int i : parabolic.complement()) e[i] = to_double(w.coeffs[i]);
    return e;
}

namespace {

Exponents scaled(Exponents e, const Rational& s) {
    for (double& v : e) v *= to_double(s);
    return e;
}

}  // namespace

Exponents CytDatum::omega0_exponents() const { return scaled(rho0_exponents(), omega0_scale); }

Exponents CytDatum::psi_exponents() const { return scaled(rho0_exponents(), psi_rho_scale); }

Exponents CytDatum::connection_exponents() const { return eta.norm_sq_exponents(parabolic.rank()); }

bool CytDatum::consistent() const {
    return trace_psi * psi_scale == lambda && trace_psi * psi_rho_scale == lambda * omega0_scale &&
           psi_scale * omega0_scale == psi_rho_scale;
}

CytReport cyt_report(const CytDatum& metric_datum, const CytDatum& form_datum,
                     const std::vector<PointZ>& samples, const FiniteDifference& fd) {
    if (!(metric_datum.parabolic == form_datum.parabolic))
        throw DomainError("CYT forms must live on the same flag manifold");
    const BigCellChart chart(metric_datum.parabolic);
    const Exponents e0 = metric_datum.omega0_exponents();
    const Exponents ep = form_datum.psi_exponents();
    CytReport r;
    double sum = 0.0, sum_sq = 0.0;
    for (const PointZ& z : samples) {
        const ComplexMatrix h0 = kahler_form_at(chart, e0, z).matrix;
        const ComplexMatrix hp = kahler_form_at(chart, ep, z).matrix;
        const ComplexMatrix ric = ricci_form_at(chart, e0, z, fd).matrix;
        const double trace = h0.ldlt().solve(hp).trace().real();
        const ComplexMatrix diff = ric - trace * hp;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> ed(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> e_0(0.5 * (h0 + h0.adjoint()), Eigen::EigenvaluesOnly);
        const double res = ed.eigenvalues().cwiseAbs().maxCoeff() / e_0.eigenvalues().cwiseAbs().maxCoeff();
        r.samples.push_back({z, res, trace});
        r.max_residual = std::max(r.max_residual, res);
        sum += trace;
        sum_sq += trace * trace;
    }
    if (!samples.empty()) {
        const double n = static_cast<double>(samples.size());
        r.trace_mean = sum / n;
        r.trace_std = std::sqrt(std::max(0.0, sum_sq / n - r.trace_mean * r.trace_mean));
    }
    return r;
}

double cyt_residual(const CytDatum& d, const std::vector<PointZ>& samples, const FiniteDifference& fd) {
    return cyt_report(d, d, samples, fd).max_residual;
}

namespace {

struct MFrame {
    RealMatrix d_eta;    // (2m+2)^2, zero outside the horizontal block
    RealVector eta;      // (A, 1, 0)
    RealVector d_sigma;  // (0, ..., 0, 1)
};

MFrame m_frame(const CytDatum& d, const PointZ& z) {
    const BigCellChart chart(d.parabolic);
    const int n = 2 * chart.dim();
    MFrame f;
    f.d_eta = RealMatrix::Zero(n + 2, n + 2);
    f.d_eta.topLeftCorner(n, n) = -kahler_form_at(chart, d.connection_exponents(), z).real_two_form();
    f.eta = RealVector::Zero(n + 2);
    f.eta.head(n + 1) = connection_covector_at(chart, d.connection_exponents(), z).real_components();
    f.d_sigma = RealVector::Zero(n + 2);
    f.d_sigma(n + 1) = 1.0;
    return f;
}

RealMatrix wedge1(const RealVector& u, const RealVector& v) { return u * v.transpose() - v * u.transpose(); }

}  // namespace

RealMatrix omega_M_at(const CytDatum& d, const PointZ& z, double /*theta*/, double /*sigma*/) {
    const MFrame f = m_frame(d, z);
    return to_double(Rational(d.m * d.ell, d.I)) * f.d_eta + wedge1(f.eta, f.d_sigma);
}

RealMatrix omega_M_via_base_at(const CytDatum& d, const PointZ& z) {
    const BigCellChart chart(d.parabolic);
    const MFrame f = m_frame(d, z);
    const int n = 2 * chart.dim();
    RealMatrix omega = RealMatrix::Zero(n + 2, n + 2);
    omega.topLeftCorner(n, n) = kahler_form_at(chart, d.omega0_exponents(), z).real_two_form();
    return omega + wedge1(f.eta, f.d_sigma);
}

ThreeForm d_omega_M_at(const CytDatum& d, const PointZ& z) {
    const MFrame f = m_frame(d, z);
    return wedge(f.d_eta, f.d_sigma);
}

double lck_residual_at(const CytDatum& d, const PointZ& z, double lee_coefficient) {
    const MFrame f = m_frame(d, z);
    ThreeForm lhs = wedge(f.d_eta, f.d_sigma);
    lhs -= wedge(omega_M_at(d, z), lee_coefficient * f.d_sigma);
    return lhs.max_abs();
}

double lck_residual_fd_at(const CytDatum& d, const PointZ& z, double lee_coefficient, double h) {
    const BigCellChart chart(d.parabolic);
    const int n = 2 * chart.dim() + 2;
    const RealVector x0 = to_real(z);
    // Omega_M depends only on the base coordinates; theta and sigma slices are zero.
    std::vector<RealMatrix> deriv(n, RealMatrix::Zero(n, n));
    for (int r = 0; r < 2 * chart.dim(); ++r) {
        RealVector xp = x0, xm = x0;
        xp(r) += h;
        xm(r) -= h;
        deriv[r] = (omega_M_at(d, from_real(xp)) - omega_M_at(d, from_real(xm))) / (2.0 * h);
    }
    ThreeForm lhs(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) lhs(i, j, k) = deriv[i](j, k) + deriv[j](k, i) + deriv[k](i, j);
    RealVector theta = RealVector::Zero(n);
    theta(n - 1) = lee_coefficient;
    lhs -= wedge(omega_M_at(d, z), theta);
    return lhs.max_abs();
}

double lck_residual(const CytDatum& d, const std::vector<PointZ>& samples) {
    const double c = to_double(d.lee_coefficient);
    double worst = 0.0;
    for (const PointZ& z : samples) worst = std::max(worst, lck_residual_at(d, z, c));
    return worst;
}

double fitted_lee_coefficient(const CytDatum& d, const PointZ& z) {
    const MFrame f = m_frame(d, z);
    const ThreeForm target = wedge(f.d_eta, f.d_sigma);
    const ThreeForm basis = wedge(omega_M_at(d, z), f.d_sigma);
    double num = 0.0, den = 0.0;
    const int n = target.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                num += target(i, j, k) * basis(i, j, k);
                den += basis(i, j, k) * basis(i, j, k);
            }
    if (den == 0.0) throw NumericalError("degenerate Lee-form fit");
    return num / den;
}

AsthenoLocus astheno_locus(long m1, long m2) {
    if (m1 < 1 || m2 < 1) throw DomainError("astheno locus needs m1, m2 >= 1");
    AsthenoLocus l;
    l.m1 = m1;
    l.m2 = m2;
    l.dimension_warning = m1 + m2 + 1 <= 3;
    const long quad = m2 * (m2 - 1);
    if (quad == 0) {
        l.degenerate = true;
        // m1(m1 - 1) + 2 a m1 m2 = 0.
        l.line_a = Rational(-m1 * (m1 - 1), 2 * m1 * m2);
        l.has_solutions = true;
        return l;
    }
    const Rational shift(m1 * m2, quad);
    l.center_a = -shift;
    l.radius_sq = shift * shift - Rational(m1 * (m1 - 1), quad);
    l.has_solutions = l.radius_sq > 0;
    return l;
}

std::vector<std::pair<double, double>> AsthenoLocus::sample_points(int count) const {
    std::vector<std::pair<double, double>> out;
    if (!has_solutions || count <= 0) return out;
    if (degenerate) {
        const double a = to_double(*line_a);
        for (int k = 0; k < count; ++k) {
            const double b = 0.25 * (k + 1) * (k % 2 == 0 ? 1.0 : -1.0);
            out.emplace_back(a, b);
        }
        return out;
    }
    const double c = to_double(center_a);
    const double r = std::sqrt(to_double(radius_sq));
    for (int k = 0; k < count; ++k) {
        const double t = 2.0 * std::numbers::pi * (k + 0.5) / count;
        out.emplace_back(c + r * std::cos(t), r * std::sin(t));
    }
    return out;
}

double astheno_residual(long m1, long m2, double a, double b) {
    if (b == 0.0) throw DomainError("astheno condition is stated for b != 0");
    const double x1 = static_cast<double>(m1), x2 = static_cast<double>(m2);
    return x1 * (x1 - 1.0) + 2.0 * a * x1 * x2 + x2 * (x2 - 1.0) * (a * a + b * b);
}

Rational astheno_residual_exact(long m1, long m2, const Rational& a, const Rational& b_sq) {
    return Rational(m1 * (m1 - 1)) + 2 * a * Rational(m1 * m2) + Rational(m2 * (m2 - 1)) * (a * a + b_sq);
}

SasakiPairReport sasaki_pair_report(const SasakiDatum& s1, const SasakiDatum& s2, int samples,
                                    std::uint64_t seed) {
    SasakiPairReport r;
    r.m1 = static_cast<long>(complement_roots(s1.base()).size());
    r.m2 = static_cast<long>(complement_roots(s2.base()).size());
    r.locus = astheno_locus(r.m1, r.m2);
    r.solutions = r.locus.sample_points(3);
    if (s1.base().type().family != Family::A || s2.base().type().family != Family::A) return r;

    r.numeric = true;
    if (r.locus.degenerate && *r.locus.line_a == 0) {
        r.a = 0.0;
        r.b = 1.0;
    } else if (!r.solutions.empty()) {
        std::tie(r.a, r.b) = r.solutions.front();
    }
    const ProductPair pair(ContactStructure::from_bundle(s1.euler_bundle()),
                           ContactStructure::from_bundle(s2.euler_bundle()));
    r.real_dim = pair.real_dim();
    std::vector<RealVector> pts = sample_product_points(pair, samples, seed);
    pts.insert(pts.begin(), RealVector::Zero(pair.real_dim()));
    r.witness = dOmega_witness(pair, r.a, r.b, pts);
    const auto [f1, f2] = pair.frames_at(pts.front());
    const ProductStructureAtPoint s = tsukada_J_at(f1, f2, r.a, r.b);
    r.metric_consistency = (s.omega * s.J - s.metric).cwiseAbs().maxCoeff();
    return r;
}

namespace {

Table1Row make_row(const std::string& manifold, const ParabolicDatum& p, long ell) {
    const CytDatum d = cyt_datum(p, ell);
    Table1Row row;
    row.manifold = manifold;
    row.datum = p.to_string();
    row.ell = ell;
    row.m = d.m;
    row.fano = d.I;
    row.euler = d.bundle.ell();
    row.lambda = d.lambda;
    row.omega0_scale = d.omega0_scale;
    row.su_index = d.m + 1;
    row.holonomy = "SU(" + std::to_string(row.su_index) + ")";
    return row;
}

}  // namespace

Table1 table1(const std::vector<LieType>& generic_types) {
    Table1 t;
    t.rows.push_back(make_row("S^3 x S^1", projective_space(1), 1));
    t.rows.push_back(make_row("S^5 x S^1", projective_space(2), 1));
    t.rows.push_back(make_row("X_{1,1} x S^1", full_flag(LieType{Family::A, 2}), 1));
    t.rows.push_back(make_row("V_2(R^6) x S^1", grassmannian(2, 4), 1));

    for (const LieType& g : generic_types) {
        const ParabolicDatum p = full_flag(g);
        // K_{G/T} itself: ell = I.
        Table1Row row = make_row("Q(K_{G/T}) x S^1, G = " + g.name(), p, fano_index(p));
        const long positive = static_cast<long>(p.root_system().positive_roots().size());
        if (row.m != positive) throw DomainError("full flag dimension differs from |Pi^+|");
        t.generic_instances.push_back(std::move(row));
    }
    Table1Row generic;
    generic.manifold = "Q(K_{G/T}) x S^1";
    generic.datum = "G/{}";
    generic.holonomy = "SU(|Pi^+|+1)";
    if (!t.generic_instances.empty()) {
        const Table1Row& first = t.generic_instances.front();
        generic.ell = first.ell;
        generic.fano = first.fano;
    }
    t.rows.push_back(std::move(generic));
    return t;
}

}  // namespace flagbundle
