#include "flagbundle/typea_reps.hpp"

#include "flagbundle/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flagbundle {

GroupElement::GroupElement(ComplexMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) throw DomainError("group element must be square");
}

GroupElement GroupElement::identity(int size) {
    return GroupElement(ComplexMatrix::Identity(size, size));
}

GroupElement GroupElement::special(ComplexMatrix entries, double tol) {
    GroupElement g(std::move(entries));
    const Complex d = g.m_.determinant();
    if (std::abs(d - 1.0) > tol) throw DomainError("matrix is not in SL(N, C)");
    return g;
}

WedgeVector WedgeVector::basis(const WedgeIndex& idx) {
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1]) throw DomainError("wedge index must be strictly increasing");
    WedgeVector v;
    v.k = static_cast<int>(idx.size());
    v.coords[idx] = 1.0;
    return v;
}

Complex WedgeVector::operator[](const WedgeIndex& idx) const {
    auto it = coords.find(idx);
    return it == coords.end() ? Complex(0.0) : it->second;
}

std::vector<WedgeIndex> wedge_basis(int dim, int k) {
    std::vector<WedgeIndex> out;
    if (k < 0 || k > dim) return out;
    WedgeIndex idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == dim - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Complex minor_det(const ComplexMatrix& g, const WedgeIndex& rows, const WedgeIndex& cols) {
    const std::size_t k = rows.size();
    if (cols.size() != k) throw DomainError("minor needs as many rows as columns");
    if (k == 0) return 1.0;
    if (k == 1) return g(rows[0], cols[0]);
    if (k == 2)
        return g(rows[0], cols[0]) * g(rows[1], cols[1]) - g(rows[0], cols[1]) * g(rows[1], cols[0]);
    ComplexMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(rows[i], cols[j]);
    return sub.partialPivLu().determinant();
}

Dual<Complex> dual_minor_det(const ComplexMatrix& value, const ComplexMatrix& tangent,
                             const WedgeIndex& rows, const WedgeIndex& cols) {
    const int k = static_cast<int>(rows.size());
    if (static_cast<int>(cols.size()) != k) throw DomainError("minor needs as many rows as columns");
    using D = Dual<Complex>;
    std::vector<std::vector<D>> a(k, std::vector<D>(k));
    double scale = 1.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            a[i][j] = D(value(rows[i], cols[j]), tangent(rows[i], cols[j]));
            scale = std::max(scale, std::abs(a[i][j].value));
        }
    const double tiny = 1e-14 * scale;

    // Complete pivoting on the value part. Once every remaining value entry
    // vanishes, the leftover s x s block is eps * D with s >= 1, whose
    // determinant is eps * D for s = 1 and zero to first order otherwise.
    D det(1.0);
    for (int step = 0; step < k; ++step) {
        int pr = step, pc = step;
        double best = -1.0;
        for (int i = step; i < k; ++i)
            for (int j = step; j < k; ++j)
                if (std::abs(a[i][j].value) > best) {
                    best = std::abs(a[i][j].value);
                    pr = i;
                    pc = j;
                }
        if (best <= tiny) {
            if (k - step == 1) return D(0.0, det.value * a[step][step].eps);
            return D(0.0, 0.0);
        }
        if (pr != step) {
            std::swap(a[pr], a[step]);
            det = -det;
        }
        if (pc != step) {
            for (int i = 0; i < k; ++i) std::swap(a[i][pc], a[i][step]);
            det = -det;
        }
        const D pivot = a[step][step];
        det *= pivot;
        for (int i = step + 1; i < k; ++i) {
            const D f = a[i][step] / pivot;
            for (int j = step + 1; j < k; ++j) a[i][j] -= f * a[step][j];
        }
    }
    return det;
}

CompoundMap::CompoundMap(const GroupElement& g, int k) : k_(k) {
    const int dim = g.size();
    if (k < 1 || k > dim - 1)
        throw DomainError("compound degree k must lie in 1.." + std::to_string(dim - 1));
    basis_ = wedge_basis(dim, k);
    const int b = static_cast<int>(basis_.size());
    matrix_.resize(b, b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) matrix_(i, j) = minor_det(g.entries(), basis_[i], basis_[j]);
}

WedgeVector CompoundMap::operator()(const WedgeVector& v) const {
    if (v.k != k_) throw DomainError("wedge degree mismatch");
    WedgeVector out;
    out.k = k_;
    for (const auto& [idx, c] : v.coords) {
        const auto it = std::lower_bound(basis_.begin(), basis_.end(), idx);
        if (it == basis_.end() || *it != idx) throw DomainError("wedge index out of range");
        const auto col = static_cast<int>(it - basis_.begin());
        for (int row = 0; row < matrix_.rows(); ++row) {
            const Complex x = matrix_(row, col) * c;
            if (x != Complex(0.0)) out.coords[basis_[row]] += x;
        }
    }
    return out;
}

CompoundMap act(const GroupElement& g, int k) { return CompoundMap(g, k); }

double highest_weight_norm_sq(const GroupElement& g, int k) {
    const int dim = g.size();
    if (k < 1 || k > dim - 1)
        throw DomainError("compound degree k must lie in 1.." + std::to_string(dim - 1));
    WedgeIndex cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    double s = 0.0;
    for (const WedgeIndex& rows : wedge_basis(dim, k)) s += std::norm(minor_det(g.entries(), rows, cols));
    return s;
}

double composite_norm_sq(const GroupElement& g, const std::vector<double>& exponents) {
    if (static_cast<int>(exponents.size()) != g.size() - 1)
        throw DomainError("composite norm needs one exponent per fundamental weight");
    double log_total = 0.0;
    for (int k = 1; k <= g.size() - 1; ++k)
        if (exponents[k - 1] != 0.0) log_total += exponents[k - 1] * std::log(highest_weight_norm_sq(g, k));
    return std::exp(log_total);
}

MinorJet highest_weight_jet(const GroupElement& g, int k,
                            const std::vector<std::pair<int, int>>& directions) {
    const int dim = g.size();
    if (k < 1 || k > dim - 1)
        throw DomainError("compound degree k must lie in 1.." + std::to_string(dim - 1));
    MinorJet jet;
    jet.k = k;
    jet.rows = wedge_basis(dim, k);
    WedgeIndex cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    const int count = static_cast<int>(jet.rows.size());
    const int m = static_cast<int>(directions.size());
    jet.value.resize(count);
    jet.gradient = ComplexMatrix::Zero(count, m);
    for (int i = 0; i < count; ++i) jet.value(i) = minor_det(g.entries(), jet.rows[i], cols);

    ComplexMatrix tangent = ComplexMatrix::Zero(dim, dim);
    for (int p = 0; p < m; ++p) {
        const auto [r, c] = directions[p];
        if (c >= k) continue;  // outside the first k columns
        tangent(r, c) = 1.0;
        for (int i = 0; i < count; ++i) {
            if (!std::binary_search(jet.rows[i].begin(), jet.rows[i].end(), r)) continue;
            jet.gradient(i, p) = dual_minor_det(g.entries(), tangent, jet.rows[i], cols).eps;
        }
        tangent(r, c) = 0.0;
    }
    return jet;
}

}  // namespace flagbundle
