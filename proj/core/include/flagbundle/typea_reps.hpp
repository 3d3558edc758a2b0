#pragma once

#include "flagbundle/dual.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace flagbundle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Element of SL(N, C) (or GL for the compound algebra); N = n + 1.
class GroupElement {
public:
    explicit GroupElement(ComplexMatrix entries);
    static GroupElement identity(int size);
    /// Throws DomainError unless |det - 1| <= tol.
    static GroupElement special(ComplexMatrix entries, double tol = 1e-12);

    const ComplexMatrix& entries() const { return m_; }
    int size() const { return static_cast<int>(m_.rows()); }
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return GroupElement(a.m_ * b.m_);
    }

private:
    ComplexMatrix m_;
};

/// Strictly increasing 0-based k-tuple, e.g. {0,2} for e_1 ^ e_3.
using WedgeIndex = std::vector<int>;

struct WedgeVector {
    int k = 1;
    std::map<WedgeIndex, Complex> coords;

    /// e_{i_1} ^ ... ^ e_{i_k} for a strictly increasing index list.
    static WedgeVector basis(const WedgeIndex& idx);
    Complex operator[](const WedgeIndex& idx) const;
};

/// Lexicographic basis of Lambda^k C^dim.
std::vector<WedgeIndex> wedge_basis(int dim, int k);

/// The k-th compound of g: matrix entry (I, J) = det g[I, J], both indexed by wedge_basis.
class CompoundMap {
public:
    CompoundMap(const GroupElement& g, int k);

    int k() const { return k_; }
    const std::vector<WedgeIndex>& basis() const { return basis_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    WedgeVector operator()(const WedgeVector& v) const;

private:
    int k_;
    std::vector<WedgeIndex> basis_;
    ComplexMatrix matrix_;
};

CompoundMap act(const GroupElement& g, int k);

/// det of g[rows, cols]: direct formula up to 2x2, pivoted LU beyond.
Complex minor_det(const ComplexMatrix& g, const WedgeIndex& rows, const WedgeIndex& cols);

/// det of (value + eps * tangent)[rows, cols] as a dual number.
Dual<Complex> dual_minor_det(const ComplexMatrix& value, const ComplexMatrix& tangent,
                             const WedgeIndex& rows, const WedgeIndex& cols);

/// ||g (e_1 ^ ... ^ e_k)||^2 = sum_I |det g[I, {1..k}]|^2.
double highest_weight_norm_sq(const GroupElement& g, int k);

/// prod_k highest_weight_norm_sq(g, k)^{exponents[k-1]}; exponents has length N - 1.
double composite_norm_sq(const GroupElement& g, const std::vector<double>& exponents);

/// Highest-weight orbit coordinates m_I = det g[I, {1..k}] together with
/// their holomorphic derivatives along unit perturbations of g at the given
/// matrix positions: gradient(I, p) = d m_I / d g(directions[p]).
struct MinorJet {
    int k = 1;
    std::vector<WedgeIndex> rows;
    ComplexVector value;
    ComplexMatrix gradient;
};

MinorJet highest_weight_jet(const GroupElement& g, int k,
                            const std::vector<std::pair<int, int>>& directions);

}  // namespace flagbundle
