#pragma once

#include "flagbundle/rootsystem.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flagbundle {

/// Theta subset of the simple roots; the flag manifold is G/P_Theta.
class ParabolicDatum {
public:
    /// theta holds 0-based simple indices. Throws DomainError on Theta = Sigma
    /// or indices out of range.
    ParabolicDatum(RootSystem rs, std::vector<int> theta);
    ParabolicDatum(const LieType& t, std::vector<int> theta)
        : ParabolicDatum(RootSystem(t), std::move(theta)) {}

    /// "A3/{1,3}": type, then Theta as 1-based indices.
    static ParabolicDatum parse(std::string_view text);
    std::string to_string() const;

    const RootSystem& root_system() const { return rs_; }
    const LieType& type() const { return rs_.type(); }
    int rank() const { return rs_.rank(); }
    const std::vector<int>& theta() const { return theta_; }
    bool in_theta(int i) const;

    /// Sigma \ Theta, ascending. Picard coordinates are indexed by this list.
    const std::vector<int>& complement() const { return complement_; }

    friend bool operator==(const ParabolicDatum& x, const ParabolicDatum& y) {
        return x.type() == y.type() && x.theta_ == y.theta_;
    }

private:
    RootSystem rs_;
    std::vector<int> theta_;
    std::vector<int> complement_;
};

struct DeltaP {
    Root root;
    Weight weight;
};

struct FlagInvariants {
    std::vector<Root> complement_pos_roots;
    int m_theta = 0;
    Root delta_p_root;
    Weight delta_p_weight;
    long fano_index = 0;
    int picard_rank = 0;
    /// Weight-only test for every simple index; only entries outside Theta
    /// describe a Picard generator.
    std::vector<bool> minuscule_flags;
};

std::vector<Root> complement_roots(const ParabolicDatum& p);
DeltaP delta_p(const ParabolicDatum& p);
long fano_index(const ParabolicDatum& p);
/// <omega_alpha, h_beta^vee> in {0,1} for all positive beta. alpha is 0-based.
bool is_minuscule(const ParabolicDatum& p, int alpha);
FlagInvariants flag_invariants(const ParabolicDatum& p);

/// Common data: CP^n = A_n with Theta = Sigma \ {alpha_1}, Gr(k, n) and full flags.
ParabolicDatum projective_space(int n);
ParabolicDatum grassmannian(int k, int n);
ParabolicDatum full_flag(const LieType& t);

}  // namespace flagbundle
