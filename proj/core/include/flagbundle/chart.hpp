#pragma once

#include "flagbundle/parabolic.hpp"
#include "flagbundle/typea_reps.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace flagbundle {

using PointZ = ComplexVector;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Exponents on the squared highest-weight norms, one per simple root
/// (0-based). Entries at Theta must be zero.
using Exponents = std::vector<double>;

/// Big cell of SL(n+1)/P_Theta: unipotent lower-triangular matrices whose free
/// entries sit at coord_positions (column-major, 0-based (row, col)).
class BigCellChart {
public:
    /// Throws UnsupportedType for families other than A.
    explicit BigCellChart(ParabolicDatum p);

    const ParabolicDatum& parabolic() const { return p_; }
    int dim() const { return static_cast<int>(positions_.size()); }
    int matrix_size() const { return p_.rank() + 1; }
    const std::vector<std::pair<int, int>>& coord_positions() const { return positions_; }

    /// Throws DomainError if e has the wrong length or touches Theta.
    void check_exponents(const Exponents& e) const;

private:
    ParabolicDatum p_;
    std::vector<std::pair<int, int>> positions_;
};

GroupElement section_matrix(const BigCellChart& c, const PointZ& z);

/// Scalar that turns the unit convention (omega = i ddbar log P) into the
/// 1/(2 pi) convention used for integral classes.
inline constexpr double kIntegralNormalization = 1.0 / (2.0 * std::numbers::pi);

enum class Normalization { Unit, Integral };

/// log composite_norm_sq of the section.
double potential_at(const BigCellChart& c, const Exponents& e, const PointZ& z,
                    Normalization n = Normalization::Unit);

/// H with omega = i sum H_{pq} dz_p ^ dzbar_q, i.e. H_{pq} = d^2 phi / dz_p dzbar_q.
struct HermitianFormAtPoint {
    ComplexMatrix matrix;

    int dim() const { return static_cast<int>(matrix.rows()); }
    double hermitian_defect() const { return (matrix - matrix.adjoint()).norm(); }
    bool positive_definite() const;
    /// Real antisymmetric matrix of the 2-form in the frame (x_1, y_1, ..., x_m, y_m).
    RealMatrix real_two_form() const;
    /// g(u, v) = omega(u, J0 v), same frame.
    RealMatrix real_metric() const;
};

HermitianFormAtPoint kahler_form_at(const BigCellChart& c, const Exponents& e, const PointZ& z);

/// dphi/dz_p for phi = log composite norm.
ComplexVector potential_gradient_at(const BigCellChart& c, const Exponents& e, const PointZ& z);

struct FiniteDifference {
    double step = 0.0;        // <= 0: use 1e-3 (1 + |z|)
    bool richardson = false;  // combine steps h and h/2
    double step_at(const PointZ& z) const;
};

/// -i ddbar log det H by central differences of the exact H.
HermitianFormAtPoint ricci_form_at(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                   const FiniteDifference& fd = {});

/// ||Ric - lambda H|| / ||H|| (spectral norms) at one point.
double einstein_residual_at(const BigCellChart& c, const Exponents& e, double lambda,
                            const PointZ& z, const FiniteDifference& fd = {});
double einstein_residual(const BigCellChart& c, const Exponents& e, double lambda,
                         const std::vector<PointZ>& samples, const FiniteDifference& fd = {});

/// eta = (i/2)(dphi - dbar phi) + dtheta, split into its coefficient arrays.
struct CovectorAtPoint {
    ComplexVector dz_part;
    ComplexVector dzbar_part;
    double dtheta_part = 1.0;

    /// (eta(dx_1), eta(dy_1), ..., eta(dy_m), eta(dtheta)).
    RealVector real_components() const;
    /// Same without the theta slot.
    RealVector horizontal_components() const;
};

CovectorAtPoint connection_covector_at(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                       double theta_part = 1.0);

/// Exterior derivative of the horizontal part of eta by central differences.
RealMatrix connection_curvature_fd(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                   double h);

/// max |d eta (FD) - (-i ddbar phi)| over the real 2-form entries.
double curvature_identity_residual(const BigCellChart& c, const Exponents& e, const PointZ& z,
                                   double h = 1e-4);

/// J0 on (x_1, y_1, ...): d/dx -> d/dy, d/dy -> -d/dx.
RealMatrix standard_complex_structure(int m);

/// Real frame index helpers.
inline int x_index(int p) { return 2 * p; }
inline int y_index(int p) { return 2 * p + 1; }

/// Each coordinate uniform in the complex disk of the given radius.
std::vector<PointZ> sample_points(int dim, int count, std::uint64_t seed, double radius = 2.0);
/// Uniform in the ball ||z|| <= radius of C^dim.
std::vector<PointZ> sample_ball(int dim, int count, std::uint64_t seed, double radius);

PointZ from_real(const RealVector& x);
RealVector to_real(const PointZ& z);

/// "log(1 + |z1|^2 + |z2|^2)" style closed form of the potential, built from
/// symbolic minors of the section matrix.
std::string potential_string(const BigCellChart& c, const Exponents& e);

}  // namespace flagbundle
