#pragma once

#include "flagbundle/parabolic.hpp"

#include <vector>

namespace flagbundle {

/// Principal circle bundle over X_P, stored through its Euler class
/// sum_alpha ell_alpha [Omega_alpha]. ell is indexed like base.complement().
class BundleVector {
public:
    BundleVector(ParabolicDatum base, std::vector<long> ell);
    static BundleVector trivial(const ParabolicDatum& base);

    const ParabolicDatum& base() const { return base_; }
    const std::vector<long>& ell() const { return ell_; }
    bool is_trivial() const;

    /// sum_alpha ell_alpha omega_alpha.
    Weight euler_weight() const;

    BundleVector operator-() const;
    friend BundleVector operator+(const BundleVector& x, const BundleVector& y);
    friend BundleVector operator-(const BundleVector& x, const BundleVector& y) { return x + (-y); }
    friend BundleVector operator*(long k, const BundleVector& x);
    friend bool operator==(const BundleVector&, const BundleVector&) = default;

private:
    ParabolicDatum base_;
    std::vector<long> ell_;
};

BundleVector bundle_sum(const BundleVector& q1, const BundleVector& q2);

/// Q(K^{ell/I}): entries -ell <delta_P, h_alpha^vee> / I over Sigma \ Theta.
BundleVector canonical_fraction_bundle(const ParabolicDatum& p, long ell);

/// Sasaki data over L with L^{-1} ample. Stores the positive coefficients of
/// lambda(L); the Euler vector of the bundle is their negation.
class SasakiDatum {
public:
    SasakiDatum(ParabolicDatum base, std::vector<long> positive_ell);

    const ParabolicDatum& base() const { return positive_.base(); }
    const BundleVector& positive() const { return positive_; }
    BundleVector euler_bundle() const { return -positive_; }
    const Weight& lambda_weight() const { return lambda_; }

private:
    BundleVector positive_;
    Weight lambda_;
};

/// lambda(L); its fundamental coefficients are the pairings <lambda, h_i^vee>.
Weight sasaki_weight(const SasakiDatum& s);

/// One term of eta = (i/2)(d - dbar) log prod ||s v_{omega_alpha}^+||^{norm_exponent} + d theta.
struct ConnectionTerm {
    int simple_index;    // 0-based
    long norm_exponent;  // 2 ell_alpha, on the norm (not its square)
    friend bool operator==(const ConnectionTerm&, const ConnectionTerm&) = default;
};

struct ConnectionDescriptor {
    std::vector<ConnectionTerm> terms;  // zero exponents omitted

    /// Exponents on the squared norms, indexed by simple root (length rank).
    std::vector<double> norm_sq_exponents(int rank) const;
};

ConnectionDescriptor connection_descriptor(const BundleVector& q);

}  // namespace flagbundle
