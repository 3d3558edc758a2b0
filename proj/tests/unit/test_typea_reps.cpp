#include "oracles.hpp"

#include <flagbundle/errors.hpp>
#include <flagbundle/typea_reps.hpp>

#include <doctest.h>

#include <random>

using namespace flagbundle;

namespace {

ComplexMatrix random_unipotent(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m = ComplexMatrix::Identity(n, n);
    for (int r = 1; r < n; ++r)
        for (int c = 0; c < r; ++c) m(r, c) = Complex(g(rng), g(rng));
    return m;
}

ComplexMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
    return m;
}

/// Special unitary from the QR factor of a Gaussian matrix.
ComplexMatrix random_special_unitary(int n, std::mt19937_64& rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(n, rng));
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const Complex d = q.determinant();
    q.col(0) /= d;
    return q;
}

}  // namespace

TEST_CASE("wedge basis is lexicographic") {
    CHECK(wedge_basis(4, 2) == std::vector<WedgeIndex>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(wedge_basis(5, 3).size() == 10);
    CHECK(wedge_basis(3, 3) == std::vector<WedgeIndex>{{0, 1, 2}});
}

TEST_CASE("group elements") {
    CHECK_NOTHROW(GroupElement::special(ComplexMatrix::Identity(3, 3)));
    ComplexMatrix d = ComplexMatrix::Identity(2, 2);
    d(0, 0) = 2.0;
    CHECK_THROWS_AS(GroupElement::special(d), DomainError);
    d(1, 1) = 0.5;
    CHECK_NOTHROW(GroupElement::special(d));
}

TEST_CASE("minors against the Leibniz expansion") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 6; ++n) {
        const ComplexMatrix g = random_matrix(n, rng);
        for (int k = 1; k <= n; ++k)
            for (const WedgeIndex& rows : wedge_basis(n, k))
                for (const WedgeIndex& cols : {wedge_basis(n, k).front(), wedge_basis(n, k).back()}) {
                    const Complex expected = oracle::leibniz_det(oracle::submatrix(g, rows, cols));
                    CHECK(std::abs(minor_det(g, rows, cols) - expected) <= 1e-10 * (1 + std::abs(expected)));
                }
    }
}

TEST_CASE("dual minors carry the directional derivative") {
    std::mt19937_64 rng(12);
    for (int n = 2; n <= 5; ++n) {
        ComplexMatrix g = random_unipotent(n, rng);
        for (int trial = 0; trial < 2; ++trial) {
            if (trial == 1) g = ComplexMatrix::Identity(n, n);  // singular sub-minors at the origin
            for (int k = 1; k < n; ++k) {
                const WedgeIndex cols = wedge_basis(n, k).front();
                for (const WedgeIndex& rows : wedge_basis(n, k))
                    for (int r = 1; r < n; ++r)
                        for (int c = 0; c < r; ++c) {
                            ComplexMatrix t = ComplexMatrix::Zero(n, n);
                            t(r, c) = 1.0;
                            const Dual<Complex> d = dual_minor_det(g, t, rows, cols);
                            const Complex v = oracle::leibniz_det(oracle::submatrix(g, rows, cols));
                            const Complex dv = oracle::leibniz_minor_derivative(g, rows, cols, r, c);
                            CHECK(std::abs(d.value - v) <= 1e-10 * (1 + std::abs(v)));
                            CHECK(std::abs(d.eps - dv) <= 1e-10 * (1 + std::abs(dv)));
                        }
            }
        }
    }
}

TEST_CASE("dual minors along a general tangent") {
    std::mt19937_64 rng(13);
    for (int n = 2; n <= 5; ++n) {
        const ComplexMatrix g = random_matrix(n, rng);
        const ComplexMatrix t = random_matrix(n, rng);
        const WedgeIndex all = wedge_basis(n, n).front();
        const Dual<Complex> d = dual_minor_det(g, t, all, all);
        // d/de det(g + e t) = tr(adj(g) t) = det(g) tr(g^{-1} t).
        const Complex expected = g.determinant() * (g.inverse() * t).trace();
        CHECK(std::abs(d.eps - expected) <= 1e-9 * (1 + std::abs(expected)));
    }
}

TEST_CASE("compound action") {
    const GroupElement id = GroupElement::identity(4);
    for (int k = 1; k <= 3; ++k) {
        const CompoundMap a = act(id, k);
        CHECK(a.matrix().isApprox(ComplexMatrix::Identity(a.matrix().rows(), a.matrix().cols())));
    }
    ComplexMatrix t = ComplexMatrix::Identity(2, 2);
    t(0, 0) = Complex(3.0, 1.0);
    t(1, 1) = 1.0 / Complex(3.0, 1.0);
    const WedgeVector e1 = act(GroupElement(t), 1)(WedgeVector::basis({0}));
    CHECK(std::abs(e1[{0}] - Complex(3.0, 1.0)) < 1e-14);
    CHECK(std::abs(e1[{1}]) < 1e-14);

    // The unipotent of the Gr(2,4) big cell: columns (1,0,z1,z2), (0,1,z3,z4).
    const Complex z1(0.3, 0.1), z2(-0.7, 0.4), z3(1.1, -0.2), z4(0.5, 0.9);
    ComplexMatrix n = ComplexMatrix::Identity(4, 4);
    n(2, 0) = z1;
    n(3, 0) = z2;
    n(2, 1) = z3;
    n(3, 1) = z4;
    const WedgeVector v = act(GroupElement(n), 2)(WedgeVector::basis({0, 1}));
    CHECK(std::abs(v[{0, 1}] - 1.0) < 1e-14);
    CHECK(std::abs(v[{0, 2}] - z3) < 1e-14);
    CHECK(std::abs(v[{0, 3}] - z4) < 1e-14);
    CHECK(std::abs(v[{1, 2}] + z1) < 1e-14);
    CHECK(std::abs(v[{1, 3}] + z2) < 1e-14);
    CHECK(std::abs(v[{2, 3}] - (z1 * z4 - z2 * z3)) < 1e-14);
    CHECK_THROWS_AS(act(GroupElement(n), 4), DomainError);
    CHECK_THROWS_AS(act(GroupElement(n), 0), DomainError);
}

TEST_CASE("compounds are multiplicative") {
    std::mt19937_64 rng(14);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            const GroupElement g(random_unipotent(n, rng)), h(random_unipotent(n, rng));
            for (int k = 1; k < n; ++k) {
                const ComplexMatrix lhs = act(g * h, k).matrix();
                const ComplexMatrix rhs = act(g, k).matrix() * act(h, k).matrix();
                CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10 * (1 + rhs.cwiseAbs().maxCoeff()));
            }
        }
}

TEST_CASE("highest weight norms") {
    for (int k = 1; k <= 3; ++k) CHECK(highest_weight_norm_sq(GroupElement::identity(4), k) == 1.0);

    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex z(u(rng), u(rng));
        ComplexMatrix s = ComplexMatrix::Identity(2, 2);
        s(1, 0) = z;
        CHECK(highest_weight_norm_sq(GroupElement(s), 1) == doctest::Approx(1 + std::norm(z)).epsilon(1e-14));
        CHECK(composite_norm_sq(GroupElement(s), {2.0}) ==
              doctest::Approx(std::pow(1 + std::norm(z), 2)).epsilon(1e-13));

        // W6 section [[1,0,0],[w1,1,0],[w2,w3,1]].
        const Complex w1(u(rng), u(rng)), w2(u(rng), u(rng)), w3(u(rng), u(rng));
        ComplexMatrix w = ComplexMatrix::Identity(3, 3);
        w(1, 0) = w1;
        w(2, 0) = w2;
        w(2, 1) = w3;
        const double closed = (1 + std::norm(w1) + std::norm(w2)) *
                              (1 + std::norm(w3) + std::norm(w1 * w3 - w2));
        CHECK(composite_norm_sq(GroupElement(w), {1.0, 1.0}) == doctest::Approx(closed).epsilon(1e-13));
    }
    CHECK(composite_norm_sq(GroupElement::identity(3), {1.0, 1.0}) == 1.0);
    CHECK_THROWS_AS(composite_norm_sq(GroupElement::identity(3), {1.0}), DomainError);
}

TEST_CASE("highest weight norms: invariance, lower bound and Cauchy-Binet") {
    std::mt19937_64 rng(16);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            const ComplexMatrix g = random_unipotent(n, rng);
            const ComplexMatrix u = random_special_unitary(n, rng);
            CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
            for (int k = 1; k < n; ++k) {
                const double base = highest_weight_norm_sq(GroupElement(g), k);
                CHECK(base >= 1.0);
                const double rotated = highest_weight_norm_sq(GroupElement(u * g), k);
                CHECK(std::abs(rotated - base) <= 1e-10 * base);
                const ComplexMatrix cols = g.leftCols(k);
                const double gram = (cols.adjoint() * cols).determinant().real();
                CHECK(std::abs(gram - base) <= 1e-10 * base);
            }
        }
}

TEST_CASE("highest weight jets match cofactor derivatives") {
    std::mt19937_64 rng(17);
    const int n = 4;
    const ComplexMatrix g = random_unipotent(n, rng);
    std::vector<std::pair<int, int>> dirs;
    for (int c = 0; c < n; ++c)
        for (int r = c + 1; r < n; ++r) dirs.emplace_back(r, c);
    for (int k = 1; k < n; ++k) {
        const MinorJet jet = highest_weight_jet(GroupElement(g), k, dirs);
        CHECK(jet.rows == wedge_basis(n, k));
        const WedgeIndex cols = wedge_basis(n, k).front();
        for (std::size_t i = 0; i < jet.rows.size(); ++i) {
            const Complex v = oracle::leibniz_det(oracle::submatrix(g, jet.rows[i], cols));
            CHECK(std::abs(jet.value(i) - v) < 1e-10 * (1 + std::abs(v)));
            for (std::size_t p = 0; p < dirs.size(); ++p) {
                const Complex dv =
                    oracle::leibniz_minor_derivative(g, jet.rows[i], cols, dirs[p].first, dirs[p].second);
                CHECK(std::abs(jet.gradient(i, p) - dv) < 1e-10 * (1 + std::abs(dv)));
            }
        }
    }
}
