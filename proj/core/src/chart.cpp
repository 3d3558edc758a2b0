#include "flagbundle/chart.hpp"

#include "flagbundle/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace flagbundle {

BigCellChart::BigCellChart(ParabolicDatum p) : p_(std::move(p)) {
    if (p_.type().family != Family::A) throw UnsupportedType(p_.type().name());
    const int n = matrix_size();
    // Entry (r, c) of the negative nilradical belongs to the root
    // alpha_c + ... + alpha_{r-1}; it is free iff that root leaves <Theta>.
    for (int c = 0; c < n; ++c)
        for (int r = c + 1; r < n; ++r) {
            bool free = false;
            for (int i = c; i < r; ++i) free = free || !p_.in_theta(i);
            if (free) positions_.emplace_back(r, c);
        }
}

void BigCellChart::check_exponents(const Exponents& e) const {
    if (static_cast<int>(e.size()) != p_.rank())
        throw DomainError("expected " + std::to_string(p_.rank()) + " exponents, got " +
                          std::to_string(e.size()));
    for (int i : p_.theta())
        if (e[i] != 0.0) throw DomainError("exponent on a Theta node must vanish");
}

GroupElement section_matrix(const BigCellChart& c, const PointZ& z) {
    if (z.size() != c.dim()) throw DomainError("point has wrong dimension for chart");
    ComplexMatrix g = ComplexMatrix::Identity(c.matrix_size(), c.matrix_size());
    for (int p = 0; p < c.dim(); ++p) {
        if (!std::isfinite(z(p).real()) || !std::isfinite(z(p).imag()))
            throw DomainError("non-finite chart coordinate");
        g(c.coord_positions()[p].first, c.coord_positions()[p].second) = z(p);
    }
    return GroupElement(std::move(g));
}

double potential_at(const BigCellChart& c, const Exponents& e, const PointZ& z, Normalization n) {
    c.check_exponents(e);
    const GroupElement g = section_matrix(c, z);
    double phi = 0.0;
    for (int k = 1; k <= c.parabolic().rank(); ++k)
        if (e[k - 1] != 0.0) phi += e[k - 1] * std::log(highest_weight_norm_sq(g, k));
    return n == Normalization::Integral ? kIntegralNormalization * phi : phi;
}

namespace {

/// Per-factor data: N_k, dN_k (holomorphic gradient), and the two pieces of ddbar N_k.
struct FactorJet {
    double norm_sq;
    ComplexVector d_norm;  // sum_I dm_I conj(m_I)
    ComplexMatrix dd_norm; // sum_I dm_I conj(dm_I)^T
};

FactorJet factor_jet(const BigCellChart& c, const GroupElement& g, int k) {
    const MinorJet jet = highest_weight_jet(g, k, c.coord_positions());
    FactorJet f;
    f.norm_sq = jet.value.squaredNorm();
    f.d_norm = jet.gradient.transpose() * jet.value.conjugate();
    f.dd_norm = jet.gradient.transpose() * jet.gradient.conjugate();
    return f;
}

}  // namespace

HermitianFormAtPoint kahler_form_at(const BigCellChart& c, const Exponents& e, const PointZ& z) {
    c.check_exponents(e);
    const GroupElement g = section_matrix(c, z);
    ComplexMatrix h = ComplexMatrix::Zero(c.dim(), c.dim());
    for (int k = 1; k <= c.parabolic().rank(); ++k) {
        if (e[k - 1] == 0.0) continue;
        const FactorJet f = factor_jet(c, g, k);
        if (!(f.norm_sq > 0.0)) throw NumericalError("vanishing highest-weight norm on the big cell");
        const double n = f.norm_sq;
        h += e[k - 1] * (f.dd_norm / n - f.d_norm * f.d_norm.adjoint() / (n * n));
    }
    return {h};
}

ComplexVector potential_gradient_at(const BigCellChart& c, const Exponents& e, const PointZ& z) {
    c.check_exponents(e);
    const GroupElement g = section_matrix(c, z);
    ComplexVector grad = ComplexVector::Zero(c.dim());
    for (int k = 1; k <= c.parabolic().rank(); ++k) {
        if (e[k - 1] == 0.0) continue;
        const FactorJet f = factor_jet(c, g, k);
        grad += e[k - 1] * f.d_norm / f.norm_sq;
    }
    return grad;
}

bool HermitianFormAtPoint::positive_definite() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (matrix + matrix.adjoint()),
                                                   Eigen::EigenvaluesOnly);
    return es.info() == Eigen::Success && es.eigenvalues().minCoeff() > 0.0;
}

RealMatrix HermitianFormAtPoint::real_two_form() const {
    const int m = dim();
    RealMatrix w(2 * m, 2 * m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const Complex h = matrix(p, q);
            w(x_index(p), x_index(q)) = -2.0 * h.imag();
            w(x_index(p), y_index(q)) = 2.0 * h.real();
            w(y_index(p), x_index(q)) = -2.0 * h.real();
            w(y_index(p), y_index(q)) = -2.0 * h.imag();
        }
    return w;
}

RealMatrix HermitianFormAtPoint::real_metric() const {
    const int m = dim();
    RealMatrix g(2 * m, 2 * m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const Complex h = matrix(p, q);
            g(x_index(p), x_index(q)) = 2.0 * h.real();
            g(x_index(p), y_index(q)) = 2.0 * h.imag();
            g(y_index(p), x_index(q)) = -2.0 * h.imag();
            g(y_index(p), y_index(q)) = 2.0 * h.real();
        }
    return g;
}

double FiniteDifference::step_at(const PointZ& z) const {
    return step > 0.0 ? step : 1e-3 * (1.0 + z.norm());
}

PointZ from_real(const RealVector& x) {
    PointZ z(x.size() / 2);
    for (int p = 0; p < z.size(); ++p) z(p) = Complex(x(x_index(p)), x(y_index(p)));
    return z;
}

RealVector to_real(const PointZ& z) {
    RealVector x(2 * z.size());
    for (int p = 0; p < z.size(); ++p) {
        x(x_index(p)) = z(p).real();
        x(y_index(p)) = z(p).imag();
    }
    return x;
}

namespace {

double log_det_metric(const BigCellChart& c, const Exponents& e, const RealVector& x) {
    const HermitianFormAtPoint h = kahler_form_at(c, e, from_real(x));
    Eigen::LLT<ComplexMatrix> llt(0.5 * (h.matrix + h.matrix.adjoint()));
    if (llt.info() != Eigen::Success) throw NumericalError("Kahler form is not positive definite");
    double s = 0.0;
    for (int i = 0; i < h.dim(); ++i) s += std::log(llt.matrixL()(i, i).real());
    return 2.0 * s;
}

ComplexMatrix ricci_with_step(const BigCellChart& c, const Exponents& e, const PointZ& z, double h) {
    const int m = c.dim();
    const int n = 2 * m;
    const RealVector x0 = to_real(z);
    auto f = [&](const RealVector& x) { return log_det_metric(c, e, x); };

    const double f0 = f(x0);
    RealMatrix hess(n, n);
    std::vector<double> plus(n), minus(n);
    for (int a = 0; a < n; ++a) {
        RealVector x = x0;
        x(a) += h;
        plus[a] = f(x);
        x(a) = x0(a) - h;
        minus[a] = f(x);
        hess(a, a) = (plus[a] - 2.0 * f0 + minus[a]) / (h * h);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            RealVector x = x0;
            x(a) += h;
            x(b) += h;
            const double fpp = f(x);
            x(b) = x0(b) - h;
            const double fpm = f(x);
            x(a) = x0(a) - h;
            const double fmm = f(x);
            x(b) = x0(b) + h;
            const double fmp = f(x);
            hess(a, b) = hess(b, a) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
        }

    ComplexMatrix r(m, m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const double re = hess(x_index(p), x_index(q)) + hess(y_index(p), y_index(q));
            const double im = hess(x_index(p), y_index(q)) - hess(y_index(p), x_index(q));
            r(p, q) = -0.25 * Complex(re, im);
        }
    return r;
}

double spectral_norm_hermitian(const ComplexMatrix& a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

HermitianFormAtPoint ricci_form_at(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                   const FiniteDifference& fd) {
    c.check_exponents(e);
    const double h = fd.step_at(z);
    if (!fd.richardson) return {ricci_with_step(c, e, z, h)};
    const ComplexMatrix coarse = ricci_with_step(c, e, z, h);
    const ComplexMatrix fine = ricci_with_step(c, e, z, 0.5 * h);
    return {(4.0 * fine - coarse) / 3.0};
}

double einstein_residual_at(const BigCellChart& c, const Exponents& e, double lambda,
                            const PointZ& z, const FiniteDifference& fd) {
    const HermitianFormAtPoint h = kahler_form_at(c, e, z);
    const HermitianFormAtPoint ric = ricci_form_at(c, e, z, fd);
    return spectral_norm_hermitian(ric.matrix - lambda * h.matrix) / spectral_norm_hermitian(h.matrix);
}

double einstein_residual(const BigCellChart& c, const Exponents& e, double lambda,
                         const std::vector<PointZ>& samples, const FiniteDifference& fd) {
    double worst = 0.0;
    for (const PointZ& z : samples) worst = std::max(worst, einstein_residual_at(c, e, lambda, z, fd));
    return worst;
}

RealVector CovectorAtPoint::horizontal_components() const {
    const int m = static_cast<int>(dz_part.size());
    RealVector a(2 * m);
    for (int p = 0; p < m; ++p) {
        a(x_index(p)) = (dz_part(p) + dzbar_part(p)).real();
        a(y_index(p)) = (Complex(0, 1) * (dz_part(p) - dzbar_part(p))).real();
    }
    return a;
}

RealVector CovectorAtPoint::real_components() const {
    const RealVector a = horizontal_components();
    RealVector out(a.size() + 1);
    out << a, dtheta_part;
    return out;
}

CovectorAtPoint connection_covector_at(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                       double theta_part) {
    const ComplexVector grad = potential_gradient_at(c, e, z);
    CovectorAtPoint eta;
    eta.dz_part = Complex(0.0, 0.5) * grad;
    eta.dzbar_part = eta.dz_part.conjugate();
    eta.dtheta_part = theta_part;
    return eta;
}

RealMatrix connection_curvature_fd(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                   double h) {
    const int n = 2 * c.dim();
    const RealVector x0 = to_real(z);
    RealMatrix jac(n, n);  // jac(b, a) = d A_b / d x_a
    for (int a = 0; a < n; ++a) {
        RealVector x = x0;
        x(a) += h;
        const RealVector ap = connection_covector_at(c, e, from_real(x)).horizontal_components();
        x(a) = x0(a) - h;
        const RealVector am = connection_covector_at(c, e, from_real(x)).horizontal_components();
        jac.col(a) = (ap - am) / (2.0 * h);
    }
    return jac.transpose() - jac;  // (dA)_{ab} = d_a A_b - d_b A_a
}

double curvature_identity_residual(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                   double h) {
    const RealMatrix d_eta = connection_curvature_fd(c, e, z, h);
    // d eta = -i ddbar phi with the sign of eta fixed above.
    const RealMatrix expected = -kahler_form_at(c, e, z).real_two_form();
    return (d_eta - expected).cwiseAbs().maxCoeff();
}

RealMatrix standard_complex_structure(int m) {
    RealMatrix j = RealMatrix::Zero(2 * m, 2 * m);
    for (int p = 0; p < m; ++p) {
        j(y_index(p), x_index(p)) = 1.0;
        j(x_index(p), y_index(p)) = -1.0;
    }
    return j;
}

std::vector<PointZ> sample_points(int dim, int count, std::uint64_t seed, double radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<PointZ> out;
    out.reserve(count);
    for (int s = 0; s < count; ++s) {
        PointZ z(dim);
        for (int p = 0; p < dim; ++p) {
            const double r = radius * std::sqrt(unit(rng));
            const double t = 2.0 * std::numbers::pi * unit(rng);
            z(p) = std::polar(r, t);
        }
        out.push_back(z);
    }
    return out;
}

std::vector<PointZ> sample_ball(int dim, int count, std::uint64_t seed, double radius) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<PointZ> out;
    out.reserve(count);
    for (int s = 0; s < count; ++s) {
        PointZ z(dim);
        for (int p = 0; p < dim; ++p) z(p) = Complex(gauss(rng), gauss(rng));
        const double r = radius * std::pow(unit(rng), 1.0 / (2.0 * dim));
        z *= r / z.norm();
        out.push_back(z);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symbolic minors for potential_string.

namespace {

using Monomial = std::vector<int>;              // exponent per chart coordinate
using Polynomial = std::map<Monomial, long>;    // integer coefficients

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void poly_add(Polynomial& a, const Polynomial& b, long sign) {
    for (const auto& [m, c] : b) a[m] += sign * c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& a) {
    const std::size_t k = a.size();
    if (k == 1) return a[0][0];
    Polynomial out;
    for (std::size_t j = 0; j < k; ++j) {
        if (a[0][j].empty()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t jj = 0; jj < k; ++jj)
                if (jj != j) row.push_back(a[i][jj]);
            sub.push_back(std::move(row));
        }
        poly_add(out, poly_mul(a[0][j], poly_det(sub)), j % 2 == 0 ? 1 : -1);
    }
    return out;
}

std::string monomial_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int r = 0; r < m[i]; ++r) {
            if (!s.empty()) s += '*';
            s += "z" + std::to_string(i + 1);
        }
    return s.empty() ? "1" : s;
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Terms from the highest monomial down; leading sign dropped since only |p|^2 is printed.
std::string poly_string(const Polynomial& p) {
    std::vector<std::pair<Monomial, long>> terms(p.rbegin(), p.rend());
    const long lead_sign = terms.front().second < 0 ? -1 : 1;
    std::string s;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const long c = terms[t].second * lead_sign;
        const long mag = std::labs(c);
        if (t == 0)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        const std::string mono = monomial_string(terms[t].first);
        if (mag != 1)
            s += std::to_string(mag) + (mono == "1" ? "" : "*" + mono);
        else
            s += mono;
    }
    return s;
}

std::string format_exponent(double e) {
    if (e == std::round(e)) return std::to_string(static_cast<long>(e));
    std::string s = std::to_string(e);
    while (!s.empty() && s.back() == '0') s.pop_back();
    return s;
}

}  // namespace

std::string potential_string(const BigCellChart& c, const Exponents& e) {
    c.check_exponents(e);
    const int n = c.matrix_size();
    const int m = c.dim();
    std::vector<std::vector<Polynomial>> g(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i) g[i][i][Monomial(m, 0)] = 1;
    for (int p = 0; p < m; ++p) {
        Monomial mono(m, 0);
        mono[p] = 1;
        g[c.coord_positions()[p].first][c.coord_positions()[p].second][mono] = 1;
    }

    std::vector<std::string> factors;
    for (int k = 1; k < n; ++k) {
        if (e[k - 1] == 0.0) continue;
        std::vector<Polynomial> minors;
        for (const WedgeIndex& rows : wedge_basis(n, k)) {
            std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = g[rows[i]][j];
            Polynomial d = poly_det(sub);
            if (!d.empty()) minors.push_back(std::move(d));
        }
        std::sort(minors.begin(), minors.end(), [](const Polynomial& a, const Polynomial& b) {
            const Monomial& ta = a.rbegin()->first;
            const Monomial& tb = b.rbegin()->first;
            const int da = degree(ta), db = degree(tb);
            if (da != db) return da < db;
            if (a.size() != b.size()) return a.size() < b.size();
            return ta > tb;
        });
        std::string sum;
        for (std::size_t t = 0; t < minors.size(); ++t) {
            if (t) sum += " + ";
            const std::string body = poly_string(minors[t]);
            sum += body == "1" ? "1" : "|" + body + "|^2";
        }
        std::string factor = "(" + sum + ")";
        if (e[k - 1] != 1.0) factor += "^" + format_exponent(e[k - 1]);
        factors.push_back(std::move(factor));
    }
    if (factors.empty()) return "0";
    if (factors.size() == 1 && factors[0].back() == ')')
        return "log" + factors[0];
    std::string s = "log(";
    for (std::size_t t = 0; t < factors.size(); ++t) s += (t ? " * " : "") + factors[t];
    return s + ")";
}

}  // namespace flagbundle
