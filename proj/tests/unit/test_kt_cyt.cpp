#include <flagbundle/errors.hpp>
#include <flagbundle/kt_cyt.hpp>

#include <doctest.h>

#include <cmath>

using namespace flagbundle;

namespace {

std::vector<ParabolicDatum> type_a_data(int max_rank) {
    std::vector<ParabolicDatum> out;
    for (int n = 1; n <= max_rank; ++n)
        for (int mask = 0; mask < (1 << n) - 1; ++mask) {
            std::vector<int> theta;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) theta.push_back(i);
            out.emplace_back(LieType{Family::A, n}, theta);
        }
    return out;
}

double max_abs(const RealMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("CYT data") {
    const CytDatum p1 = cyt_datum(projective_space(1), 1);
    CHECK(p1.m == 1);
    CHECK(p1.I == 2);
    CHECK(p1.lambda == 4);
    CHECK(p1.omega0_scale == Rational(1, 4));
    CHECK(p1.psi_scale == 2);
    CHECK(p1.bundle.ell() == std::vector<long>{-1});

    const CytDatum gr = cyt_datum(grassmannian(2, 4), 1);
    CHECK(gr.m == 4);
    CHECK(gr.I == 4);
    CHECK(gr.lambda == 4);
    CHECK(gr.omega0_scale == Rational(1, 4));
    CHECK(gr.psi_scale == 1);

    const CytDatum w6 = cyt_datum(ParabolicDatum::parse("A2/{}"), 1);
    CHECK(w6.m == 3);
    CHECK(w6.I == 2);
    CHECK(w6.lambda == Rational(4, 3));
    CHECK(w6.omega0_scale == Rational(3, 4));
    CHECK(w6.psi_scale == Rational(2, 3));
    CHECK(w6.bundle.ell() == std::vector<long>{-1, -1});
    CHECK(w6.connection_exponents() == Exponents{-1.0, -1.0});

    CHECK_THROWS_AS(cyt_datum(projective_space(1), 0), DomainError);
}

TEST_CASE("CYT rationals are consistent") {
    for (const ParabolicDatum& p : type_a_data(4))
        for (long ell = 1; ell <= 3; ++ell) {
            CAPTURE(p.to_string());
            const CytDatum d = cyt_datum(p, ell);
            CHECK(d.consistent());
            CHECK(d.lambda * d.omega0_scale == d.trace_psi * d.psi_rho_scale);
            CHECK(d.lambda == Rational(d.I * d.I, ell * ell * d.m));
            CHECK(d.lee_coefficient == -d.stated_lee_coefficient);
            // The curvature of eta is psi.
            for (std::size_t i = 0; i < d.connection_exponents().size(); ++i)
                CHECK(-d.connection_exponents()[i] == doctest::Approx(d.psi_exponents()[i]));
        }
}

TEST_CASE("CYT balance") {
    for (const char* text : {"A1/{}", "A3/{2,3}", "A3/{1,3}", "A2/{}"}) {
        CAPTURE(text);
        const CytDatum d = cyt_datum(ParabolicDatum::parse(text), 1);
        const auto samples = sample_points(BigCellChart(d.parabolic).dim(), 8, 21);
        const CytReport r = cyt_report(d, d, samples);
        CHECK(r.max_residual <= 1e-3);
        CHECK(r.trace_mean == doctest::Approx(to_double(d.trace_psi)).epsilon(1e-9));
        CHECK(r.trace_std <= 1e-6);
        CHECK(r.samples.size() == samples.size());
    }
    const CytDatum p1 = cyt_datum(projective_space(1), 1);
    CHECK(cyt_residual(p1, sample_points(1, 10, 22)) <= 1e-4);

    const CytDatum p1_2 = cyt_datum(projective_space(1), 2);
    CHECK(cyt_residual(p1_2, sample_points(1, 5, 23)) <= 1e-3);
    CHECK(cyt_report(p1, p1_2, sample_points(1, 5, 23)).max_residual > 0.1);
    CHECK_THROWS_AS(cyt_report(p1, cyt_datum(projective_space(2), 1), {}), DomainError);
}

TEST_CASE("the CYT fundamental form") {
    const CytDatum p1 = cyt_datum(projective_space(1), 1);
    RealMatrix hopf = RealMatrix::Zero(4, 4);
    hopf(0, 1) = 1.0;
    hopf(1, 0) = -1.0;
    hopf(2, 3) = 1.0;
    hopf(3, 2) = -1.0;
    CHECK(max_abs(omega_M_at(p1, PointZ::Zero(1)) - hopf) <= 1e-15);

    for (const char* text : {"A1/{}", "A2/{}", "A3/{1,3}"}) {
        const CytDatum d = cyt_datum(ParabolicDatum::parse(text), 1);
        const BigCellChart c(d.parabolic);
        const int n = 2 * c.dim();
        for (const PointZ& z : sample_points(c.dim(), 5, 24)) {
            const RealMatrix omega = omega_M_at(d, z);
            CHECK(omega(n, n + 1) == 1.0);
            CHECK(max_abs(omega - omega_M_via_base_at(d, z)) <= 1e-12);
            const RealMatrix psi = kahler_form_at(c, d.psi_exponents(), z).real_two_form();
            const RealMatrix horizontal = omega.topLeftCorner(n, n);
            CHECK(max_abs(horizontal - to_double(Rational(d.m * d.ell, d.I)) * psi) <= 1e-12);
            // Non-degenerate: g = Omega(id, J) is positive for the standard J of M.
            CHECK(std::abs(omega.determinant()) > 0.0);
        }
    }
}

TEST_CASE("Lee form") {
    for (const char* text : {"A1/{}", "A3/{2,3}", "A3/{1,3}", "A2/{}"}) {
        CAPTURE(text);
        const CytDatum d = cyt_datum(ParabolicDatum::parse(text), 1);
        const BigCellChart c(d.parabolic);
        CHECK(lck_residual(d, {PointZ::Zero(c.dim())}) <= 1e-12);
        const auto samples = sample_points(c.dim(), 5, 25);
        CHECK(lck_residual(d, samples) <= 1e-6);
        for (const PointZ& z : samples) {
            CHECK(fitted_lee_coefficient(d, z) == doctest::Approx(to_double(d.lee_coefficient)).epsilon(1e-10));
            CHECK(lck_residual_fd_at(d, z, to_double(d.lee_coefficient), 1e-4) <= 1e-6);
            CHECK(lck_residual_at(d, z, 1.1 * to_double(d.lee_coefficient)) > 1e-2);
        }
        // The negated coefficient does not satisfy the identity.
        CHECK(lck_residual_at(d, samples[0], to_double(d.stated_lee_coefficient)) > 1e-2);
    }
    const CytDatum w6 = cyt_datum(ParabolicDatum::parse("A2/{}"), 2);
    const PointZ z = sample_points(3, 1, 26)[0];
    ThreeForm d = d_omega_M_at(w6, z);
    CHECK(d.max_antisymmetry_defect() == 0.0);
    CHECK(d.max_abs() > 0.0);
}

TEST_CASE("astheno locus examples") {
    const AsthenoLocus l11 = astheno_locus(1, 1);
    CHECK(l11.degenerate);
    CHECK(*l11.line_a == 0);
    CHECK(l11.dimension_warning);

    const AsthenoLocus l12 = astheno_locus(1, 2);
    CHECK_FALSE(l12.degenerate);
    CHECK(l12.center_a == -1);
    CHECK(l12.radius_sq == 1);
    CHECK(astheno_residual_exact(1, 2, Rational(-1), Rational(1)) == 0);

    const AsthenoLocus l22 = astheno_locus(2, 2);
    CHECK(l22.center_a == -2);
    CHECK(l22.radius_sq == 3);
    CHECK(astheno_residual_exact(2, 2, Rational(-2), Rational(3)) == 0);
    CHECK_FALSE(l22.dimension_warning);

    const AsthenoLocus l43 = astheno_locus(4, 3);
    CHECK(l43.center_a == -2);
    CHECK(l43.radius_sq == 2);
    CHECK(l43.has_solutions);

    const AsthenoLocus l21 = astheno_locus(2, 1);
    CHECK(l21.degenerate);
    CHECK(*l21.line_a == Rational(-1, 2));

    CHECK(astheno_residual(1, 1, 0.0, 1.0) == 0.0);
    CHECK(astheno_residual(2, 1, -0.5, 3.7) == 0.0);
    CHECK(astheno_residual(2, 2, 0.0, 1.0) == 4.0);
    CHECK_THROWS_AS(astheno_residual(1, 2, -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(astheno_locus(0, 2), DomainError);

    // Swapping the factors changes the condition.
    CHECK(astheno_residual(1, 2, -1.0, 1.0) == 0.0);
    CHECK(astheno_residual(2, 1, -1.0, 1.0) != 0.0);
}

TEST_CASE("astheno circles: sampled points solve the condition") {
    for (long m1 = 1; m1 <= 8; ++m1)
        for (long m2 = 1; m2 <= 8; ++m2) {
            const AsthenoLocus l = astheno_locus(m1, m2);
            if (!l.has_solutions) {
                CHECK(l.radius_sq <= 0);
                CHECK(l.sample_points(10).empty());
                continue;
            }
            const auto pts = l.sample_points(50);
            CHECK(pts.size() == 50);
            for (const auto& [a, b] : pts) {
                CHECK(b != 0.0);
                CHECK(std::abs(astheno_residual(m1, m2, a, b)) <= 1e-10 * (1 + m1 * m1 + m2 * m2));
            }
            if (!l.degenerate) {
                // Top of the circle: a = center, b^2 = r^2.
                CHECK(astheno_residual_exact(m1, m2, l.center_a, l.radius_sq) == 0);
            }
        }
}

TEST_CASE("Sasaki pair reports") {
    const SasakiDatum s3(projective_space(1), {1});
    const SasakiDatum s5(projective_space(2), {1});
    const SasakiPairReport a = sasaki_pair_report(s3, s3);
    CHECK(a.m1 == 1);
    CHECK(a.m2 == 1);
    CHECK(*a.locus.line_a == 0);
    CHECK(a.numeric);
    CHECK(a.a == 0.0);
    CHECK(a.b == 1.0);
    CHECK(a.witness > 0.1);
    CHECK(a.metric_consistency <= 1e-9);

    const SasakiPairReport b = sasaki_pair_report(s5, s3);
    CHECK(b.m1 == 2);
    CHECK(b.m2 == 1);
    CHECK(*b.locus.line_a == Rational(-1, 2));
    CHECK(b.a == -0.5);

    const SasakiPairReport c =
        sasaki_pair_report(SasakiDatum(grassmannian(2, 4), {1}), SasakiDatum(ParabolicDatum::parse("A2/{}"), {1, 1}));
    CHECK(c.m1 == 4);
    CHECK(c.m2 == 3);
    CHECK(c.locus.center_a == -2);
    CHECK(c.locus.radius_sq == 2);
    CHECK(std::abs(astheno_residual(4, 3, c.a, c.b)) <= 1e-12);
    CHECK(c.metric_consistency <= 1e-9);

    const SasakiPairReport g = sasaki_pair_report(SasakiDatum(full_flag({Family::G, 2}), {1, 1}), s3);
    CHECK_FALSE(g.numeric);
    CHECK(g.m1 == 6);
}

TEST_CASE("Table 1") {
    const Table1 t = table1({LieType{Family::A, 3}, LieType{Family::G, 2}, LieType{Family::E, 6}});
    REQUIRE(t.rows.size() == 5);
    std::vector<long> su;
    for (std::size_t k = 0; k < 4; ++k) su.push_back(t.rows[k].su_index);
    CHECK(su == std::vector<long>{2, 3, 4, 5});
    CHECK(t.rows[2].euler == std::vector<long>{-1, -1});
    REQUIRE(t.generic_instances.size() == 3);
    for (const Table1Row& r : t.generic_instances) {
        CHECK(r.fano == 2);
        CHECK(r.ell == 2);
        CHECK(r.lambda == Rational(1, r.m));
    }
    CHECK(t.generic_instances[0].su_index == 7);
    CHECK(t.generic_instances[1].su_index == 7);
    CHECK(t.generic_instances[2].su_index == 37);
    for (const Table1Row& r : t.rows) CHECK(r.holonomy.rfind("SU(", 0) == 0);
}
