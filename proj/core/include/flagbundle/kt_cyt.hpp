#pragma once

#include "flagbundle/bundles.hpp"
#include "flagbundle/chart.hpp"
#include "flagbundle/product_hermitian.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagbundle {

/// Data for M = Q(K^{ell/I}) x U(1) with Omega_M = (m ell / I) d eta + eta ^ d sigma.
struct CytDatum {
    ParabolicDatum parabolic;
    long ell = 1;
    long m = 0;
    long I = 0;
    Rational lambda;              // I^2 / (ell^2 m): Ric(omega_0) = lambda omega_0
    Rational omega0_scale;        // m ell^2 / I^2, as a multiple of rho_0
    Rational psi_scale;           // I / (m ell): psi = psi_scale omega_0
    Rational psi_rho_scale;       // ell / I: psi = psi_rho_scale rho_0
    Rational trace_psi;           // Lambda_{omega_0}(psi) = I / ell
    Rational lee_coefficient;     // theta = lee_coefficient d sigma with dOmega_M = theta ^ Omega_M
    Rational stated_lee_coefficient;  // -I / (m ell), opposite sign convention
    BundleVector bundle;          // canonical fraction Q(K^{ell/I})
    ConnectionDescriptor eta;

    /// Exponents on squared highest-weight norms for each form.
    Exponents rho0_exponents() const;
    Exponents omega0_exponents() const;
    Exponents psi_exponents() const;
    Exponents connection_exponents() const;

    /// Lambda * psi_scale == lambda and Lambda * psi_rho_scale == lambda * omega0_scale.
    bool consistent() const;
};

CytDatum cyt_datum(const ParabolicDatum& p, long ell);

struct CytSample {
    PointZ z;
    double residual = 0.0;
    double trace = 0.0;  // Lambda_{omega_0}(psi) at z
};

struct CytReport {
    double max_residual = 0.0;
    double trace_mean = 0.0;
    double trace_std = 0.0;
    std::vector<CytSample> samples;
};

/// ||Ric(omega_0) - Lambda(psi) psi|| / ||omega_0|| per sample, with omega_0
/// from metric_datum and psi from form_datum (the same datum in normal use).
CytReport cyt_report(const CytDatum& metric_datum, const CytDatum& form_datum,
                     const std::vector<PointZ>& samples, const FiniteDifference& fd = {});
double cyt_residual(const CytDatum& d, const std::vector<PointZ>& samples, const FiniteDifference& fd = {});

/// Frame (x_1, y_1, ..., x_m, y_m, theta, sigma).
RealMatrix omega_M_at(const CytDatum& d, const PointZ& z, double theta = 0.0, double sigma = 0.0);
/// pi^* omega_0 + eta ^ d sigma.
RealMatrix omega_M_via_base_at(const CytDatum& d, const PointZ& z);
/// d eta ^ d sigma.
ThreeForm d_omega_M_at(const CytDatum& d, const PointZ& z);
/// max |dOmega_M - (c d sigma) ^ Omega_M| at z.
double lck_residual_at(const CytDatum& d, const PointZ& z, double lee_coefficient);
/// Same with dOmega_M from central differences of the Omega_M field.
double lck_residual_fd_at(const CytDatum& d, const PointZ& z, double lee_coefficient, double h);
/// Uses d.lee_coefficient.
double lck_residual(const CytDatum& d, const std::vector<PointZ>& samples);
/// Least-squares c with dOmega_M ~ (c d sigma) ^ Omega_M at z.
double fitted_lee_coefficient(const CytDatum& d, const PointZ& z);

/// Solutions of m1(m1-1) + 2 a m1 m2 + m2(m2-1)(a^2 + b^2) = 0, b != 0.
struct AsthenoLocus {
    long m1 = 1;
    long m2 = 1;
    bool degenerate = false;           // m2 = 1: the quadratic term drops out
    Rational center_a;                 // circle case
    Rational radius_sq;                // circle case
    std::optional<Rational> line_a;    // degenerate case
    bool has_solutions = false;        // some point with b != 0
    bool dimension_warning = false;    // m1 + m2 + 1 <= 3

    /// Float points on the locus with b != 0.
    std::vector<std::pair<double, double>> sample_points(int count) const;
};

AsthenoLocus astheno_locus(long m1, long m2);
double astheno_residual(long m1, long m2, double a, double b);
/// Exact value as a function of a and b^2.
Rational astheno_residual_exact(long m1, long m2, const Rational& a, const Rational& b_sq);

struct SasakiPairReport {
    long m1 = 0;
    long m2 = 0;
    AsthenoLocus locus;
    std::vector<std::pair<double, double>> solutions;
    bool numeric = false;
    double a = 0.0;
    double b = 1.0;
    int real_dim = 0;
    double witness = 0.0;
    double metric_consistency = 0.0;  // ||Omega (id (x) J) - g|| at the origin
};

SasakiPairReport sasaki_pair_report(const SasakiDatum& s1, const SasakiDatum& s2, int samples = 8,
                                    std::uint64_t seed = 1);

struct Table1Row {
    std::string manifold;
    std::string datum;
    long ell = 1;
    long m = 0;
    long fano = 0;
    std::vector<long> euler;
    Rational lambda;
    Rational omega0_scale;
    long su_index = 0;
    std::string holonomy;
};

struct Table1 {
    std::vector<Table1Row> rows;              // the five table rows; the last is generic in G
    std::vector<Table1Row> generic_instances; // the last row evaluated for concrete G
};

/// The generic row is evaluated for each type in generic_types.
Table1 table1(const std::vector<LieType>& generic_types);

}  // namespace flagbundle
