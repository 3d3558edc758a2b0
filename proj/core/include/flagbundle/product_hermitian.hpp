#pragma once

#include "flagbundle/bundles.hpp"
#include "flagbundle/chart.hpp"

#include <utility>
#include <vector>

namespace flagbundle {

/// Normal almost contact metric data over one big cell. The connection
/// exponents give eta; the base-metric exponents give the Kahler metric
/// pulled back into g_Q.
class ContactStructure {
public:
    ContactStructure(BigCellChart chart, Exponents connection, Exponents base_metric);

    /// Contact metric choice g_base = (1/2) d eta (., J0 .), i.e. base exponents -connection / 2.
    static ContactStructure sasaki(BigCellChart chart, Exponents connection);
    /// Sasaki structure of the bundle's connection; a trivial bundle has no
    /// contact metric and is rejected here.
    static ContactStructure from_bundle(const BundleVector& q);

    const BigCellChart& chart() const { return chart_; }
    const Exponents& connection() const { return connection_; }
    const Exponents& base_metric() const { return base_metric_; }
    int base_dim() const { return chart_.dim(); }
    int real_dim() const { return 2 * chart_.dim() + 1; }

private:
    BigCellChart chart_;
    Exponents connection_;
    Exponents base_metric_;
};

/// (phi, xi, eta, g_Q) in the real frame (x_1, y_1, ..., x_m, y_m, theta).
struct ContactFrameAtPoint {
    int m = 0;
    PointZ z;
    double theta = 0.0;
    CovectorAtPoint eta;
    RealVector eta_real;     // length 2m + 1
    RealVector xi;           // d/dtheta
    RealMatrix phi;          // (2m+1) x (2m+1), column j = phi(e_j)
    RealMatrix metric;       // g_Q = pi^* g_base + eta (x) eta
    RealMatrix base_metric;  // 2m x 2m
    RealMatrix base_kahler;  // base Kahler form of base_metric, 2m x 2m
    RealMatrix d_eta;        // pulled back curvature, (2m+1) x (2m+1)

    int real_dim() const { return 2 * m + 1; }
};

ContactFrameAtPoint contact_frame_at(const ContactStructure& s, const PointZ& z, double theta);
/// Sasaki metric convention.
ContactFrameAtPoint contact_frame_at(const BigCellChart& c, const Exponents& connection,
                                     const PointZ& z, double theta);

/// Only eta and phi; cheap enough for finite-difference sweeps.
RealMatrix phi_at(const ContactStructure& s, const PointZ& z);

struct ProductStructureAtPoint {
    RealMatrix J;
    double a = 0.0;
    double b = 1.0;
    RealMatrix omega;   // Omega_{a,b}
    RealMatrix metric;  // g_{a,b}
};

/// Indices of the two Reeb directions in the product frame.
struct ProductLayout {
    int n1 = 0;  // 2 m1 + 1
    int n2 = 0;
    int size() const { return n1 + n2; }
    int xi1() const { return n1 - 1; }
    int xi2() const { return n1 + n2 - 1; }
};

ProductLayout layout_of(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2);

/// J_{a,b}, Omega_{a,b} and g_{a,b}. Throws DomainError for b = 0.
ProductStructureAtPoint tsukada_J_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2,
                                     double a, double b);

/// The tau-parametrised block form, tau = a + i b.
RealMatrix manjarin_J_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, Complex tau);

/// (a', b') with J_tau = J_{a',b'}: a' + i b' = 1 / conj(tau).
std::pair<double, double> tsukada_parameters_of(Complex tau);

/// (i / (2 Im tau)) (conj(tau) eta_1 + eta_2). Throws DomainError for real tau.
ComplexVector psi_tau_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, Complex tau);

/// Omega_{a,b} = (1/2)(d eta_1 + d eta_2) + b eta_1 ^ eta_2.
RealMatrix fundamental_form_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2,
                               double a, double b);
/// g_{a,b} = g_1 + g_2 + a (eta_1 eta_2 + eta_2 eta_1) + (a^2 + b^2 - 1) eta_2 eta_2.
RealMatrix tsukada_metric_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2,
                             double a, double b);
/// pi_1^* omega_1 + pi_2^* omega_2 + eta_1 ^ eta_2 with the frames' own base Kahler forms.
RealMatrix morimoto_form_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2);

/// Dense antisymmetric 3-tensor.
class ThreeForm {
public:
    explicit ThreeForm(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j, int k) { return c_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k]; }
    double operator()(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    double max_abs() const;
    double max_antisymmetry_defect() const;
    ThreeForm& operator-=(const ThreeForm& o);
    ThreeForm& operator*=(double s);

private:
    int n_;
    std::vector<double> c_;
};

/// (alpha ^ beta)(u, v, w) = alpha(u,v) beta(w) + alpha(v,w) beta(u) + alpha(w,u) beta(v).
ThreeForm wedge(const RealMatrix& two_form, const RealVector& one_form);

/// b (d eta_1 ^ eta_2 - eta_1 ^ d eta_2), assembled from curvature blocks.
ThreeForm d_omega_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, double b);

/// T(X, Y, Z) = dOmega(JX, JY, JZ).
ThreeForm bismut_torsion_at(const ContactFrameAtPoint& f1, const ContactFrameAtPoint& f2, double a,
                            double b);

/// Two contact structures and a point of the product real chart
/// (x_1, y_1, ..., theta_1, x'_1, y'_1, ..., theta_2).
class ProductPair {
public:
    ProductPair(ContactStructure first, ContactStructure second);

    const ContactStructure& first() const { return first_; }
    const ContactStructure& second() const { return second_; }
    int real_dim() const { return first_.real_dim() + second_.real_dim(); }

    RealVector point(const PointZ& z1, double theta1, const PointZ& z2, double theta2) const;
    std::pair<ContactFrameAtPoint, ContactFrameAtPoint> frames_at(const RealVector& x) const;

private:
    ContactStructure first_;
    ContactStructure second_;
};

/// Sample points of the product with both theta coordinates zero.
std::vector<RealVector> sample_product_points(const ProductPair& pair, int count, std::uint64_t seed,
                                              double radius = 2.0);

enum class Perturbation {
    None,
    /// Reverses the sign of the theta row of phi_1 (the horizontal-lift
    /// correction), leaving phi_1 unchanged at the origin of the chart.
    FlipPhiThetaRow,
};

struct NijenhuisOptions {
    double step = 1e-3;
    Perturbation perturbation = Perturbation::None;
};

/// J_{a,b} as a matrix field over the product chart.
RealMatrix tsukada_J_field(const ProductPair& pair, double a, double b, const RealVector& x,
                           Perturbation perturbation = Perturbation::None);

/// max_{p,q} |N_J(e_p, e_q)| for coordinate frame fields.
double nijenhuis_residual_at(const ProductPair& pair, double a, double b, const RealVector& x,
                             const NijenhuisOptions& opts = {});

/// Exterior derivative of the Omega_{a,b} field by central differences.
ThreeForm d_omega_fd(const ProductPair& pair, double a, double b, const RealVector& x, double h);

/// max over samples of the largest |dOmega| component.
double dOmega_witness(const ProductPair& pair, double a, double b, const std::vector<RealVector>& samples);

}  // namespace flagbundle
