#include "oracles.hpp"

#include <flagbundle/errors.hpp>
#include <flagbundle/rootsystem.hpp>

#include <doctest.h>

#include <random>

using namespace flagbundle;

namespace {

std::vector<LieType> all_types_up_to_rank8() {
    std::vector<LieType> out;
    for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= 8; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= 8; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

}  // namespace

TEST_CASE("Lie type parsing") {
    CHECK(LieType::parse("A3") == LieType{Family::A, 3});
    CHECK(LieType::parse(" g2 ") == LieType{Family::G, 2});
    CHECK(LieType::parse("e8").name() == "E8");
    CHECK_THROWS_AS(LieType::parse("X3"), ParseError);
    CHECK_THROWS_AS(LieType::parse("A"), ParseError);
    CHECK_THROWS_AS(LieType::parse("A3x"), ParseError);
    CHECK_THROWS_AS(LieType::parse("E9"), DomainError);
    CHECK_THROWS_AS(LieType::parse("B1"), DomainError);
    CHECK_THROWS_AS(LieType::parse("D2"), DomainError);
    CHECK_THROWS_AS(LieType::parse("F3"), DomainError);
    CHECK_NOTHROW(LieType::parse("C2"));
    try {
        LieType::parse("A3?");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("Cartan matrices") {
    CHECK(cartan_matrix({Family::A, 1}).entries == std::vector<std::vector<int>>{{2}});
    CHECK(cartan_matrix({Family::A, 3}).entries ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    // alpha_1 short: <alpha_2, h_1^vee> = -3.
    CHECK(cartan_matrix({Family::G, 2}).entries == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
    CHECK(cartan_matrix({Family::B, 2}).entries == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(cartan_matrix({Family::C, 3}).entries ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
    CHECK(cartan_matrix({Family::F, 4}).entries ==
          std::vector<std::vector<int>>{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
    const CartanMatrix d4 = cartan_matrix({Family::D, 4});
    CHECK(d4(1, 2) == -1);
    CHECK(d4(1, 3) == -1);
    CHECK(d4(2, 3) == 0);
    const CartanMatrix e6 = cartan_matrix({Family::E, 6});
    CHECK(e6(1, 3) == -1);
    CHECK(e6(0, 2) == -1);
    CHECK(e6(1, 2) == 0);

    for (const LieType& t : all_types_up_to_rank8()) {
        CAPTURE(t.name());
        const CartanMatrix a = cartan_matrix(t);
        for (int i = 0; i < a.rank(); ++i) {
            CHECK(a(i, i) == 2);
            for (int j = 0; j < a.rank(); ++j) {
                if (i == j) continue;
                CHECK(a(i, j) <= 0);
                CHECK(a(i, j) >= -3);
                CHECK((a(i, j) == 0) == (a(j, i) == 0));
            }
        }
    }
}

TEST_CASE("positive roots: counts, ordering and reflection-orbit oracle") {
    for (const LieType& t : all_types_up_to_rank8()) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        const auto& roots = rs.positive_roots();
        CHECK(static_cast<int>(roots.size()) == expected_positive_root_count(t));

        const auto oracle_set = oracle::reflection_closure(rs.cartan().entries);
        CHECK(std::set<Root>(roots.begin(), roots.end()) == oracle_set);

        for (std::size_t k = 1; k < roots.size(); ++k) {
            const int h0 = height(roots[k - 1]), h1 = height(roots[k]);
            CHECK((h0 < h1 || (h0 == h1 && roots[k - 1] > roots[k])));
            if (k < static_cast<std::size_t>(rs.rank())) CHECK(roots[k - 1] == rs.simple_root(static_cast<int>(k) - 1));
        }
        int simple = 0;
        for (const Root& r : roots) simple += height(r) == 1;
        CHECK(simple == rs.rank());

        // Every non-simple root is a positive root plus a simple root.
        for (const Root& r : roots) {
            if (height(r) == 1) continue;
            bool found = false;
            for (int i = 0; i < rs.rank() && !found; ++i) {
                Root s = r;
                --s[i];
                found = s[i] >= 0 && rs.is_positive_root(s);
            }
            CHECK(found);
        }
    }
}

TEST_CASE("positive roots: worked examples A2 A3 G2") {
    const RootSystem a2({Family::A, 2});
    CHECK(a2.positive_roots() == std::vector<Root>{{1, 0}, {0, 1}, {1, 1}});
    const RootSystem a3({Family::A, 3});
    CHECK(a3.positive_roots().size() == 6);
    CHECK(a3.highest_root() == Root{1, 1, 1});
    const RootSystem g2({Family::G, 2});
    CHECK(g2.positive_roots() == std::vector<Root>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
}

TEST_CASE("pairings and basis changes") {
    const RootSystem a2({Family::A, 2});
    CHECK(a2.pairing(fundamental_weight(2, 0), 0) == 1);
    CHECK(a2.pairing(fundamental_weight(2, 0), 1) == 0);
    CHECK(a2.root_to_weight_basis(Root{2, 2}).coeffs == RationalVector{2, 2});

    const RootSystem a1({Family::A, 1});
    CHECK(a1.root_to_weight_basis(Root{1}).coeffs == RationalVector{2});

    const RootSystem a3({Family::A, 3});
    CHECK(pairing(Root{2, 4, 2}, 1, a3) == 4);

    for (const LieType& t : all_types_up_to_rank8()) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        Root two_rho(rs.rank(), 0);
        for (const Root& r : rs.positive_roots())
            for (int i = 0; i < rs.rank(); ++i) two_rho[i] += r[i];
        const Weight w = rs.root_to_weight_basis(two_rho);
        CHECK(w.coeffs == RationalVector(rs.rank(), Rational(2)));

        for (const Root& r : rs.positive_roots()) {
            const RationalVector back = rs.weight_to_root_basis(rs.root_to_weight_basis(r));
            CHECK(back == RationalVector(r.begin(), r.end()));
        }
        for (int i = 0; i < rs.rank(); ++i) {
            // weight_to_root_basis(omega_i) pairs back to delta_ij: A * A^{-1} = I.
            const RationalVector x = rs.weight_to_root_basis(fundamental_weight(rs.rank(), i));
            for (int j = 0; j < rs.rank(); ++j) CHECK(rs.pairing(x, j) == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("pairing is linear over rational combinations") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (const LieType t : {LieType{Family::B, 3}, LieType{Family::G, 2}, LieType{Family::E, 6}}) {
        const RootSystem rs(t);
        const auto& roots = rs.positive_roots();
        for (int trial = 0; trial < 20; ++trial) {
            const Rational p(num(rng), den(rng)), q(num(rng), den(rng));
            const Root& r1 = roots[trial % roots.size()];
            const Root& r2 = roots[(3 * trial + 1) % roots.size()];
            RationalVector combo(rs.rank());
            for (int i = 0; i < rs.rank(); ++i) combo[i] = p * r1[i] + q * r2[i];
            for (int i = 0; i < rs.rank(); ++i)
                CHECK(rs.pairing(combo, i) == p * rs.pairing(r1, i) + q * rs.pairing(r2, i));
        }
    }
}

TEST_CASE("invariant form lengths") {
    CHECK(RootSystem({Family::B, 2}).simple_lengths_sq() == std::vector<int>{2, 1});
    CHECK(RootSystem({Family::C, 3}).simple_lengths_sq() == std::vector<int>{1, 1, 2});
    CHECK(RootSystem({Family::G, 2}).simple_lengths_sq() == std::vector<int>{1, 3});
    CHECK(RootSystem({Family::F, 4}).simple_lengths_sq() == std::vector<int>{2, 2, 1, 1});
    // <beta, h_beta^vee> = 2 for every positive root.
    for (const LieType& t : all_types_up_to_rank8()) {
        const RootSystem rs(t);
        for (const Root& r : rs.positive_roots()) {
            const Weight w = rs.root_to_weight_basis(r);
            CHECK(rs.coroot_pairing(w, r) == 2);
        }
    }
}
