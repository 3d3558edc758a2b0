// Reference computations used only by the tests. They deliberately avoid the
// library's own algorithms.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Positive roots as the Weyl orbit of the simple roots, in simple-root coordinates.
inline std::set<std::vector<int>> reflection_closure(const std::vector<std::vector<int>>& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> todo;
    for (int i = 0; i < n; ++i) {
        std::vector<int> r(n, 0);
        r[i] = 1;
        all.insert(r);
        todo.push_back(r);
    }
    while (!todo.empty()) {
        const std::vector<int> beta = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            int pair = 0;
            for (int j = 0; j < n; ++j) pair += beta[j] * cartan[i][j];
            std::vector<int> s = beta;
            s[i] -= pair;
            if (all.insert(s).second) todo.push_back(s);
        }
    }
    std::set<std::vector<int>> positive;
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.insert(r);
    return positive;
}

/// Leibniz expansion of a square complex matrix.
inline Complex leibniz_det(const Eigen::MatrixXcd& a) {
    const int k = static_cast<int>(a.rows());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0.0;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Complex term = inversions % 2 ? -1.0 : 1.0;
        for (int i = 0; i < k; ++i) term *= a(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& g, const std::vector<int>& rows,
                                  const std::vector<int>& cols) {
    Eigen::MatrixXcd s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = g(rows[i], cols[j]);
    return s;
}

/// d det(g[rows, cols]) / d g(r, c) by cofactor expansion with Leibniz minors.
inline Complex leibniz_minor_derivative(const Eigen::MatrixXcd& g, const std::vector<int>& rows,
                                        const std::vector<int>& cols, int r, int c) {
    const auto ri = std::find(rows.begin(), rows.end(), r);
    const auto ci = std::find(cols.begin(), cols.end(), c);
    if (ri == rows.end() || ci == cols.end()) return 0.0;
    const int i = static_cast<int>(ri - rows.begin());
    const int j = static_cast<int>(ci - cols.begin());
    std::vector<int> rr, cc;
    for (std::size_t t = 0; t < rows.size(); ++t)
        if (static_cast<int>(t) != i) rr.push_back(rows[t]);
    for (std::size_t t = 0; t < cols.size(); ++t)
        if (static_cast<int>(t) != j) cc.push_back(cols[t]);
    const Complex cof = rr.empty() ? Complex(1.0) : leibniz_det(submatrix(g, rr, cc));
    return ((i + j) % 2 ? -1.0 : 1.0) * cof;
}

/// Complex Hessian d^2 f / dz_p dzbar_q by central differences of a real function.
template <typename F>
Eigen::MatrixXcd fd_complex_hessian(F f, const Eigen::VectorXcd& z, double h) {
    const int m = static_cast<int>(z.size());
    const int n = 2 * m;
    auto at = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXcd w(m);
        for (int p = 0; p < m; ++p) w(p) = Complex(x(2 * p), x(2 * p + 1));
        return f(w);
    };
    Eigen::VectorXd x0(n);
    for (int p = 0; p < m; ++p) {
        x0(2 * p) = z(p).real();
        x0(2 * p + 1) = z(p).imag();
    }
    Eigen::MatrixXd hess(n, n);
    const double f0 = at(x0);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            if (a == b) {
                Eigen::VectorXd xp = x0, xm = x0;
                xp(a) += h;
                xm(a) -= h;
                hess(a, a) = (at(xp) - 2 * f0 + at(xm)) / (h * h);
                continue;
            }
            Eigen::VectorXd pp = x0, pm = x0, mp = x0, mm = x0;
            pp(a) += h; pp(b) += h;
            pm(a) += h; pm(b) -= h;
            mp(a) -= h; mp(b) += h;
            mm(a) -= h; mm(b) -= h;
            hess(a, b) = hess(b, a) = (at(pp) - at(pm) - at(mp) + at(mm)) / (4 * h * h);
        }
    Eigen::MatrixXcd out(m, m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            out(p, q) = 0.25 * Complex(hess(2 * p, 2 * q) + hess(2 * p + 1, 2 * q + 1),
                                       hess(2 * p, 2 * q + 1) - hess(2 * p + 1, 2 * q));
    return out;
}

}  // namespace oracle
