#include "helpers.hpp"

using namespace gz;
using gztest::hermitian_from_rows;
using gztest::skew_from_rows;

TEST_CASE("gz_map on pinned examples") {
    SECTION("descending diagonal") {
        const auto p = gz_map(HermitianMatrix::diagonal({3, 2, 1}));
        REQUIRE(p.rows == std::vector<std::vector<double>>{{3}, {3, 2}, {3, 2, 1}});
    }
    SECTION("[[1,1],[1,1]]") {
        const auto p = gz_map(hermitian_from_rows({{1, 1}, {1, 1}}));
        REQUIRE_THAT(p.rows[0][0], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(p.rows[1][0], Catch::Matchers::WithinAbs(2.0, 1e-12));
        REQUIRE_THAT(p.rows[1][1], Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
    SECTION("block matrix with internal tie") {
        const auto p = gz_map(hermitian_from_rows({{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}));
        REQUIRE_THAT(p.rows[0][0], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(p.rows[1][0], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(p.rows[1][1], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(p.rows[2][0], Catch::Matchers::WithinAbs(2.0, 1e-12));
        REQUIRE_THAT(p.rows[2][1], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(p.rows[2][2], Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
    SECTION("U(n) pattern has n(n+1)/2 entries") {
        Rng rng(4);
        const auto a = sample_gaussian_hermitian(5, rng);
        REQUIRE(gz_map(a).entry_count() == 15);
    }
    SECTION("SO pattern shape") {
        const auto s = sample_orbit_point_so(Spectrum({2.0, 1.0}), 5, 9);
        const auto p = gz_map(s);
        int expected = 0;
        for (int k = 2; k <= 5; ++k) expected += k / 2;
        REQUIRE(p.entry_count() == expected);
        REQUIRE(check_interlacing(p, 1e-9).empty());
    }
}

TEST_CASE("check_interlacing") {
    SECTION("valid pattern is clean") {
        const auto p = gz_map(HermitianMatrix::diagonal({3, 2, 1}));
        REQUIRE(check_interlacing(p, 1e-9).empty());
    }
    SECTION("upper violation is reported") {
        GZPattern p;
        p.group = GroupKind::U;
        p.n = 2;
        p.rows = {{5}, {2, 0}};
        const auto report = check_interlacing(p, 1e-9);
        REQUIRE(report.size() == 1);
        REQUIRE(report[0].upper);
        REQUIRE(report[0].level == 1);
        REQUIRE_THAT(report[0].amount, Catch::Matchers::WithinAbs(3.0, 1e-12));
    }
    SECTION("1000 mapped Hermitian matrices all pass") {
        Rng rng(777);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(5));
            const auto a = sample_gaussian_hermitian(n, rng);
            REQUIRE(check_interlacing(gz_map(a), 1e-9).empty());
        }
    }
    SECTION("shape mismatch raises") {
        GZPattern p;
        p.group = GroupKind::U;
        p.n = 2;
        p.rows = {{1, 2}, {3}};
        REQUIRE_THROWS_AS(check_interlacing(p, 1e-9), ArgumentError);
    }
    SECTION("SO nonnegativity enforced through the zero padding") {
        GZPattern p;
        p.group = GroupKind::SO;
        p.n = 3;
        p.rows = {{-0.5}, {1.0}};
        const auto report = check_interlacing(p, 1e-9);
        REQUIRE(report.size() == 1);
        REQUIRE_FALSE(report[0].upper);
    }
}

TEST_CASE("polytope spec") {
    SECTION("inequality counts") {
        REQUIRE(polytope_spec(Spectrum({2, 1, 0}), GroupKind::U).inequalities.size() == 6);
        REQUIRE(polytope_spec(Spectrum({1.0}), GroupKind::U).inequalities.empty());
        const auto two = polytope_spec(Spectrum({1, 0}), GroupKind::U);
        REQUIRE(two.inequalities.size() == 2);
    }
    SECTION("n=2 bounds are 1 >= x >= 0") {
        const auto spec = polytope_spec(Spectrum({1, 0}), GroupKind::U);
        GZPattern inside{GroupKind::U, 2, {{0.25}, {1, 0}}};
        GZPattern outside{GroupKind::U, 2, {{1.25}, {1, 0}}};
        REQUIRE(membership_margin(spec, inside) >= 0.0);
        REQUIRE(membership_margin(spec, outside) < -0.2);
    }
    SECTION("membership of mapped matrices, Monte Carlo") {
        Rng rng(31337);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(4));
            const auto a = sample_gaussian_hermitian(n, rng);
            const auto p = gz_map(a);
            const auto spec = polytope_spec(p.top_row(), GroupKind::U);
            REQUIRE(membership_margin(spec, p) >= -1e-9);
        }
    }
    SECTION("count for U equals sum of 2k") {
        for (int n = 2; n <= 6; ++n) {
            std::vector<double> lambda;
            for (int i = 0; i < n; ++i) lambda.push_back(n - i);
            const auto spec = polytope_spec(Spectrum(lambda), GroupKind::U);
            REQUIRE(static_cast<int>(spec.inequalities.size()) == n * (n - 1));
        }
    }
}

TEST_CASE("pattern sampling") {
    SECTION("scalar spectrum yields the unique constant pattern") {
        const auto p = sample_pattern(Spectrum({2, 2, 2}), 1);
        for (const auto& row : p.rows)
            for (double v : row) REQUIRE(v == 2.0);
    }
    SECTION("samples satisfy interlacing at zero tolerance") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto p = sample_pattern(Spectrum({2, 1, 0}), seed);
            REQUIRE(check_interlacing(p, 0.0).empty());
        }
    }
    SECTION("uniform interval statistics for lambda = (1,0)") {
        double sum = 0.0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const auto p = sample_pattern(Spectrum({1, 0}), seed);
            const double x = p.rows[0][0];
            REQUIRE(x >= 0.0);
            REQUIRE(x <= 1.0);
            sum += x;
        }
        REQUIRE_THAT(sum / 100.0, Catch::Matchers::WithinAbs(0.5, 0.1));
    }
    SECTION("boundary-biased sampling produces ties and stays valid") {
        Rng rng(41);
        int tight_total = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto p = sample_pattern_boundary_biased(Spectrum({2, 1, 0}), rng);
            REQUIRE(check_interlacing(p, 0.0).empty());
            tight_total += count_tight_inequalities(p);
        }
        REQUIRE(tight_total > 50);
    }
    SECTION("SO sampling by the same interval construction") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto p = sample_pattern(Spectrum({2, 1}), seed, GroupKind::SO, 5);
            REQUIRE(check_interlacing(p, 0.0).empty());
        }
    }
}

TEST_CASE("strict interlacing predicate") {
    GZPattern strict{GroupKind::U, 3, {{1.0}, {1.5, 0.5}, {2, 1, 0}}};
    GZPattern snapped{GroupKind::U, 3, {{1.0}, {1.0, 1.0}, {2, 1, 0}}};
    REQUIRE(strictly_interlacing(strict, 1e-9));
    REQUIRE_FALSE(strictly_interlacing(snapped, 1e-9));
    REQUIRE(count_tight_inequalities(snapped) == 4);
}

TEST_CASE("pattern JSON") {
    const auto p = gz_map(HermitianMatrix::diagonal({3, 2, 1}));
    const auto j = to_json(p);
    REQUIRE(j["group"] == "U");
    REQUIRE(j["n"] == 3);
    const auto q = pattern_from_json(j);
    REQUIRE(gztest::pattern_distance(p, q) == 0.0);

    SECTION("bare rows array parses as U") {
        const auto r = pattern_from_json(nlohmann::json::parse("[[1.0],[1.0,1.0],[2.0,1.0,0.0]]"));
        REQUIRE(r.group == GroupKind::U);
        REQUIRE(r.n == 3);
    }
}
