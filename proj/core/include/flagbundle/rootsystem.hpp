#pragma once

#include "flagbundle/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flagbundle {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    /// "A3", "g2", " D5 " (case-insensitive). Throws ParseError / DomainError.
    static LieType parse(std::string_view text);

    std::string name() const;
    char letter() const;
    friend bool operator==(const LieType&, const LieType&) = default;
};

/// Throws DomainError unless the rank is allowed for the family.
void validate(const LieType& t);

/// Simple-root coordinates. Indices are 0-based in the API.
using Root = std::vector<int>;

/// Fundamental-weight coordinates.
struct Weight {
    RationalVector coeffs;

    bool is_integral_dominant() const;
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// entries[i][j] = <alpha_j, h_{alpha_i}^vee>, Bourbaki numbering.
///
/// Under this orientation the doubly/triply laced entries are
///   B_n: entries[n-1][n-2] = -2   (alpha_n short)
///   C_n: entries[n-2][n-1] = -2   (alpha_n long)
///   F4:  entries[2][1]     = -2   (alpha_1, alpha_2 long)
///   G2:  entries[0][1]     = -3   (alpha_1 short), i.e. [[2,-3],[-1,2]]
struct CartanMatrix {
    std::vector<std::vector<int>> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    int operator()(int i, int j) const { return entries[i][j]; }
    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

CartanMatrix cartan_matrix(const LieType& t);

class RootSystem {
public:
    explicit RootSystem(const LieType& t);

    const LieType& type() const { return type_; }
    const CartanMatrix& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }

    /// Sorted by height, then by decreasing lexicographic order, so simple roots
    /// come out as alpha_1, ..., alpha_n.
    const std::vector<Root>& positive_roots() const { return roots_; }

    Root simple_root(int i) const;
    Root highest_root() const { return roots_.back(); }
    bool is_positive_root(const Root& r) const;

    /// (alpha_i, alpha_i), normalised so the short simple roots have length 1.
    const std::vector<int>& simple_lengths_sq() const { return lengths_sq_; }

    /// <r, h_{alpha_i}^vee> = sum_j r_j A[i][j].
    Rational pairing(const Root& r, int i) const;
    /// i-th fundamental coefficient.
    Rational pairing(const Weight& w, int i) const;
    /// Same, for rational root-basis coordinates.
    Rational pairing(const RationalVector& root_coords, int i) const;

    Weight root_to_weight_basis(const Root& r) const;
    Weight root_to_weight_basis(const RationalVector& root_coords) const;
    RationalVector weight_to_root_basis(const Weight& w) const;

    /// Invariant form in simple-root coordinates, same normalisation as simple_lengths_sq.
    Rational inner_product(const RationalVector& x, const RationalVector& y) const;

    /// <w, h_beta^vee> = 2 (w, beta) / (beta, beta) for a positive root beta.
    Rational coroot_pairing(const Weight& w, const Root& beta) const;

private:
    LieType type_;
    CartanMatrix cartan_;
    std::vector<Root> roots_;
    std::vector<int> lengths_sq_;
    std::vector<RationalVector> inverse_;  // A^{-1}, rows indexed like A
};

/// Free-function spellings of the RootSystem API.
RootSystem positive_roots(const LieType& t);
Rational pairing(const Root& r, int i, const RootSystem& rs);
Rational pairing(const Weight& w, int i, const RootSystem& rs);
Weight root_to_weight_basis(const Root& r, const RootSystem& rs);

int height(const Root& r);

/// Fundamental weight omega_i.
Weight fundamental_weight(int rank, int i);

/// Classical |Pi^+| for the type, used as a cross-check.
int expected_positive_root_count(const LieType& t);

}  // namespace flagbundle
