#include "flagbundle/product_hermitian.hpp"

#include "flagbundle/errors.hpp"

#include <algorithm>
#include <cmath>

namespace flagbundle {

ContactStructure::ContactStructure(BigCellChart chart, Exponents connection, Exponents base_metric)
    : chart_(std::move(chart)), connection_(std::move(connection)), base_metric_(std::move(base_metric)) {
    chart_.check_exponents(connection_);
    chart_.check_exponents(base_metric_);
}

ContactStructure ContactStructure::sasaki(BigCellChart chart, Exponents connection) {
    Exponents base = connection;
    for (double& v : base) v *= -0.5;
    return ContactStructure(std::move(chart), std::move(connection), std::move(base));
}

ContactStructure ContactStructure::from_bundle(const BundleVector& q) {
    if (q.is_trivial()) throw DomainError("trivial bundle carries no contact metric");
    BigCellChart chart(q.base());
    return sasaki(std::move(chart), connection_descriptor(q).norm_sq_exponents(q.base().rank()));
}

namespace {

RealMatrix embed(const RealMatrix& block, int size, int offset) {
    RealMatrix out = RealMatrix::Zero(size, size);
    out.block(offset, offset, block.rows(), block.cols()) = block;
    return out;
}

RealMatrix build_phi(const RealVector& a, Perturbation perturbation) {
    const int n = static_cast<int>(a.size());
    const RealMatrix j0 = standard_complex_structure(n / 2);
    RealMatrix phi = RealMatrix::Zero(n + 1, n + 1);
    phi.topLeftCorner(n, n) = j0;
    const double sign = perturbation == Perturbation::FlipPhiThetaRow ? 1.0 : -1.0;
    phi.block(n, 0, 1, n) = sign * (a.transpose() * j0);
    return phi;
}

}  // namespace

ContactFrameAtPoint contact_frame_at(const ContactStructure& s, const PointZ& z, double theta) {
    const BigCellChart& c = s.chart();
    ContactFrameAtPoint f;
    f.m = c.dim();
    f.z = z;
    f.theta = theta;
    f.eta = connection_covector_at(c, s.connection(), z);
    const RealVector a = f.eta.horizontal_components();
    const int n = 2 * f.m;
    f.eta_real = f.eta.real_components();
    f.xi = RealVector::Zero(n + 1);
    f.xi(n) = 1.0;
    f.phi = build_phi(a, Perturbation::None);

    const HermitianFormAtPoint base = kahler_form_at(c, s.base_metric(), z);
    f.base_metric = base.real_metric();
    f.base_kahler = base.real_two_form();
    f.metric = RealMatrix::Zero(n + 1, n + 1);
    f.metric.topLeftCorner(n, n) = f.base_metric;
    f.metric += f.eta_real * f.eta_real.transpose();

    f.d_eta = RealMatrix::Zero(n + 1, n + 1);
    f.d_eta.topLeftCorner(n, n) = -kahler_form_at(c, s.connection(), z).real_two_form();
    return f;
}

ContactFrameAtPoint contact_frame_at(const BigCellChart& c, const Exponents& connection,
                                     const PointZ& z, double theta) {
    return contact_frame_at(ContactStructure::sasaki(c, connection), z, theta);
}

RealMatrix phi_at(const ContactStructure& s, const PointZ& z) {
    return build_phi(connection_covector_at(s.chart(), s.connection(), z).horizontal_components(),
                     Perturbation::None);
}

ProductLayout layout_of(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2) {
    return {f1.real_dim(), f2.real_dim()};
}

namespace {

RealVector embed_first(const RealVector& v, const ProductLayout& l) {
    RealVector out = RealVector::Zero(l.size());
    out.head(l.n1) = v;
    return out;
}

RealVector embed_second(const RealVector& v, const ProductLayout& l) {
    RealVector out = RealVector::Zero(l.size());
    out.tail(l.n2) = v;
    return out;
}

RealMatrix wedge(const RealVector& u, const RealVector& v) {
    return u * v.transpose() - v * u.transpose();
}

void require_nonzero_b(double b) {
    if (b == 0.0) throw DomainError("Tsukada structure needs b != 0");
}

/// J from the two phi blocks and the coefficients of the Reeb columns:
/// J(xi_1) = c11 xi_1 + c21 xi_2, J(xi_2) = c12 xi_1 + c22 xi_2.
RealMatrix assemble_J(const RealMatrix& phi1, const RealMatrix& phi2, const RealVector& eta1,
                      const RealVector& eta2, double c11, double c12, double c21, double c22) {
    const ProductLayout l{static_cast<int>(phi1.rows()), static_cast<int>(phi2.rows())};
    RealMatrix j = RealMatrix::Zero(l.size(), l.size());
    j.topLeftCorner(l.n1, l.n1) = phi1;
    j.bottomRightCorner(l.n2, l.n2) = phi2;
    const RealVector e1 = embed_first(eta1, l);
    const RealVector e2 = embed_second(eta2, l);
    RealVector x1 = RealVector::Zero(l.size());
    RealVector x2 = RealVector::Zero(l.size());
    x1(l.xi1()) = 1.0;
    x2(l.xi2()) = 1.0;
    // J = phi + xi_1 (x) (c11 eta_1 + c12 eta_2) + xi_2 (x) (c21 eta_1 + c22 eta_2).
    j += x1 * (c11 * e1 + c12 * e2).transpose();
    j += x2 * (c21 * e1 + c22 * e2).transpose();
    return j;
}

RealMatrix tsukada_J_matrix(const RealMatrix& phi1, const RealMatrix& phi2, const RealVector& eta1,
                            const RealVector& eta2, double a, double b) {
    require_nonzero_b(b);
    return assemble_J(phi1, phi2, eta1, eta2, -a / b, -(a * a + b * b) / b, 1.0 / b, a / b);
}

}  // namespace

RealMatrix fundamental_form_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2,
                               double /*a*/, double b) {
    require_nonzero_b(b);
    const ProductLayout l = layout_of(f1, f2);
    RealMatrix omega = 0.5 * (embed(f1.d_eta, l.size(), 0) + embed(f2.d_eta, l.size(), l.n1));
    omega += b * wedge(embed_first(f1.eta_real, l), embed_second(f2.eta_real, l));
    return omega;
}

RealMatrix tsukada_metric_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, double a,
                             double b) {
    require_nonzero_b(b);
    const ProductLayout l = layout_of(f1, f2);
    const RealVector e1 = embed_first(f1.eta_real, l);
    const RealVector e2 = embed_second(f2.eta_real, l);
    RealMatrix g = embed(f1.metric, l.size(), 0) + embed(f2.metric, l.size(), l.n1);
    g += a * (e1 * e2.transpose() + e2 * e1.transpose());
    g += (a * a + b * b - 1.0) * e2 * e2.transpose();
    return g;
}

RealMatrix morimoto_form_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2) {
    const ProductLayout l = layout_of(f1, f2);
    RealMatrix omega = RealMatrix::Zero(l.size(), l.size());
    omega.block(0, 0, 2 * f1.m, 2 * f1.m) = f1.base_kahler;
    omega.block(l.n1, l.n1, 2 * f2.m, 2 * f2.m) = f2.base_kahler;
    omega += wedge(embed_first(f1.eta_real, l), embed_second(f2.eta_real, l));
    return omega;
}

ProductStructureAtPoint tsukada_J_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2,
                                     double a, double b) {
    ProductStructureAtPoint s;
    s.a = a;
    s.b = b;
    s.J = tsukada_J_matrix(f1.phi, f2.phi, f1.eta_real, f2.eta_real, a, b);
    s.omega = fundamental_form_at(f1, f2, a, b);
    s.metric = tsukada_metric_at(f1, f2, a, b);
    return s;
}

RealMatrix manjarin_J_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, Complex tau) {
    const double a = tau.real(), b = tau.imag();
    require_nonzero_b(b);
    // J(xi_1) = -(a/b) xi_1 + ((a^2+b^2)/b) xi_2, J(xi_2) = -(1/b) xi_1 + (a/b) xi_2.
    return assemble_J(f1.phi, f2.phi, f1.eta_real, f2.eta_real, -a / b, -1.0 / b, (a * a + b * b) / b,
                      a / b);
}

std::pair<double, double> tsukada_parameters_of(Complex tau) {
    if (tau.imag() == 0.0) throw DomainError("tau must be non-real");
    const Complex s = 1.0 / std::conj(tau);
    return {s.real(), s.imag()};
}

ComplexVector psi_tau_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, Complex tau) {
    if (tau.imag() == 0.0) throw DomainError("tau must be non-real");
    const ProductLayout l = layout_of(f1, f2);
    const Complex scale = Complex(0.0, 1.0) / (2.0 * tau.imag());
    const ComplexVector e1 = embed_first(f1.eta_real, l).cast<Complex>();
    const ComplexVector e2 = embed_second(f2.eta_real, l).cast<Complex>();
    return scale * (std::conj(tau) * e1 + e2);
}

double ThreeForm::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

double ThreeForm::max_antisymmetry_defect() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) {
                const double v = (*this)(i, j, k);
                d = std::max({d, std::abs(v + (*this)(j, i, k)), std::abs(v + (*this)(i, k, j)),
                              std::abs(v - (*this)(j, k, i))});
            }
    return d;
}

ThreeForm& ThreeForm::operator-=(const ThreeForm& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

ThreeForm& ThreeForm::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

ThreeForm wedge(const RealMatrix& alpha, const RealVector& beta) {
    const int n = static_cast<int>(beta.size());
    ThreeForm t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t(i, j, k) = alpha(i, j) * beta(k) + alpha(j, k) * beta(i) + alpha(k, i) * beta(j);
    return t;
}

ThreeForm d_omega_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, double b) {
    require_nonzero_b(b);
    const ProductLayout l = layout_of(f1, f2);
    ThreeForm t = wedge(embed(f1.d_eta, l.size(), 0), embed_second(f2.eta_real, l));
    t -= wedge(embed(f2.d_eta, l.size(), l.n1), embed_first(f1.eta_real, l));
    t *= b;
    return t;
}

ThreeForm bismut_torsion_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, double a,
                            double b) {
    const ThreeForm d = d_omega_at(f1, f2, b);
    const RealMatrix jm = tsukada_J_matrix(f1.phi, f2.phi, f1.eta_real, f2.eta_real, a, b);
    const int n = d.size();
    // Contract one slot at a time: T_abc = sum d_ijk J_ia J_jb J_kc.
    ThreeForm s1(n), s2(n), t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n; ++c) {
                double v = 0.0;
                for (int k = 0; k < n; ++k) v += d(i, j, k) * jm(k, c);
                s1(i, j, c) = v;
            }
    for (int i = 0; i < n; ++i)
        for (int bb = 0; bb < n; ++bb)
            for (int c = 0; c < n; ++c) {
                double v = 0.0;
                for (int jj = 0; jj < n; ++jj) v += s1(i, jj, c) * jm(jj, bb);
                s2(i, bb, c) = v;
            }
    for (int aa = 0; aa < n; ++aa)
        for (int bb = 0; bb < n; ++bb)
            for (int c = 0; c < n; ++c) {
                double v = 0.0;
                for (int i = 0; i < n; ++i) v += s2(i, bb, c) * jm(i, aa);
                t(aa, bb, c) = v;
            }
    return t;
}

ProductPair::ProductPair(ContactStructure first, ContactStructure second)
    : first_(std::move(first)), second_(std::move(second)) {}

RealVector ProductPair::point(const PointZ& z1, double theta1, const PointZ& z2, double theta2) const {
    if (z1.size() != first_.base_dim() || z2.size() != second_.base_dim())
        throw DomainError("point has wrong dimension for product chart");
    RealVector x(real_dim());
    x << to_real(z1), theta1, to_real(z2), theta2;
    return x;
}

std::pair<ContactFrameAtPoint, ContactFrameAtPoint> ProductPair::frames_at(const RealVector& x) const {
    const int n1 = first_.real_dim();
    const int n2 = second_.real_dim();
    const PointZ z1 = from_real(x.head(n1 - 1));
    const PointZ z2 = from_real(x.segment(n1, n2 - 1));
    return {contact_frame_at(first_, z1, x(n1 - 1)), contact_frame_at(second_, z2, x(n1 + n2 - 1))};
}

std::vector<RealVector> sample_product_points(const ProductPair& pair, int count, std::uint64_t seed,
                                              double radius) {
    const int m1 = pair.first().base_dim();
    const int m2 = pair.second().base_dim();
    const std::vector<PointZ> s = sample_points(m1 + m2, count, seed, radius);
    std::vector<RealVector> out;
    out.reserve(s.size());
    for (const PointZ& z : s) out.push_back(pair.point(z.head(m1), 0.0, z.tail(m2), 0.0));
    return out;
}

RealMatrix tsukada_J_field(const ProductPair& pair, double a, double b, const RealVector& x,
                           Perturbation perturbation) {
    const int n1 = pair.first().real_dim();
    const int n2 = pair.second().real_dim();
    const PointZ z1 = from_real(x.head(n1 - 1));
    const PointZ z2 = from_real(x.segment(n1, n2 - 1));
    const CovectorAtPoint eta1 = connection_covector_at(pair.first().chart(), pair.first().connection(), z1);
    const CovectorAtPoint eta2 = connection_covector_at(pair.second().chart(), pair.second().connection(), z2);
    const RealMatrix phi1 = build_phi(eta1.horizontal_components(), perturbation);
    const RealMatrix phi2 = build_phi(eta2.horizontal_components(), Perturbation::None);
    return tsukada_J_matrix(phi1, phi2, eta1.real_components(), eta2.real_components(), a, b);
}

double nijenhuis_residual_at(const ProductPair& pair, double a, double b, const RealVector& x,
                             const NijenhuisOptions& opts) {
    require_nonzero_b(b);
    const int n = pair.real_dim();
    const double h = opts.step;
    const RealMatrix j = tsukada_J_field(pair, a, b, x, opts.perturbation);
    std::vector<RealMatrix> dj(n);  // dj[r] = d J / d x_r
    for (int r = 0; r < n; ++r) {
        RealVector xp = x, xm = x;
        xp(r) += h;
        xm(r) -= h;
        dj[r] = (tsukada_J_field(pair, a, b, xp, opts.perturbation) -
                 tsukada_J_field(pair, a, b, xm, opts.perturbation)) / (2.0 * h);
    }
    double worst = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            // [J e_p, J e_q] - J[J e_p, e_q] - J[e_p, J e_q] for constant e_p, e_q.
            RealVector bracket = RealVector::Zero(n);
            for (int r = 0; r < n; ++r) bracket += j(r, p) * dj[r].col(q) - j(r, q) * dj[r].col(p);
            const RealVector nij = bracket + j * dj[q].col(p) - j * dj[p].col(q);
            worst = std::max(worst, nij.norm());
        }
    return worst;
}

ThreeForm d_omega_fd(const ProductPair& pair, double a, double b, const RealVector& x, double h) {
    const int n = pair.real_dim();
    std::vector<RealMatrix> d(n);
    for (int r = 0; r < n; ++r) {
        RealVector xp = x, xm = x;
        xp(r) += h;
        xm(r) -= h;
        const auto [p1, p2] = pair.frames_at(xp);
        const auto [m1, m2] = pair.frames_at(xm);
        d[r] = (fundamental_form_at(p1, p2, a, b) - fundamental_form_at(m1, m2, a, b)) / (2.0 * h);
    }
    ThreeForm t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t(i, j, k) = d[i](j, k) + d[j](k, i) + d[k](i, j);
    return t;
}

double dOmega_witness(const ProductPair& pair, double /*a*/, double b,
                      const std::vector<RealVector>& samples) {
    double worst = 0.0;
    for (const RealVector& x : samples) {
        const auto [f1, f2] = pair.frames_at(x);
        worst = std::max(worst, d_omega_at(f1, f2, b).max_abs());
    }
    return worst;
}

}  // namespace flagbundle
