#include "helpers.hpp"

using namespace gz;
using gztest::hermitian_from_rows;
using gztest::skew_from_rows;

TEST_CASE("principal submatrix reads the top-left block") {
    const auto a = HermitianMatrix::diagonal({3, 2, 1});
    const auto b = principal_submatrix(a, 2);
    REQUIRE(b.size() == 2);
    REQUIRE(b(0, 0) == cd(3.0, 0.0));
    REQUIRE(b(1, 1) == cd(2.0, 0.0));
    REQUIRE(b(0, 1) == cd(0.0, 0.0));

    SECTION("k = n returns the matrix itself") {
        const auto c = principal_submatrix(a, 3);
        REQUIRE(gztest::entry_distance(a, c) == 0.0);
    }

    SECTION("embedded block reads off") {
        const auto m = hermitian_from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
        const auto top = principal_submatrix(m, 2);
        REQUIRE(top(0, 0) == cd(1.0, 0.0));
        REQUIRE(top(0, 1) == cd(1.0, 0.0));
        REQUIRE(top(1, 0) == cd(1.0, 0.0));
        REQUIRE(top(1, 1) == cd(1.0, 0.0));
    }

    SECTION("out-of-range k") {
        REQUIRE_THROWS_AS(principal_submatrix(a, 0), ArgumentError);
        REQUIRE_THROWS_AS(principal_submatrix(a, 4), ArgumentError);
    }
}

TEST_CASE("spectrum sorts descending") {
    const Spectrum s({1.0, 3.0, 2.0});
    REQUIRE(s[0] == 3.0);
    REQUIRE(s[1] == 2.0);
    REQUIRE(s[2] == 1.0);
}

TEST_CASE("matrix JSON round trip") {
    auto a = hermitian_from_rows({{cd(1, 0), cd(0.5, -0.25)}, {cd(0.5, 0.25), cd(2, 0)}});
    const auto j = to_json(a);
    const auto b = hermitian_from_json(j);
    REQUIRE(gztest::entry_distance(a, b) == 0.0);

    SECTION("hermiticity violations are rejected") {
        auto bad = j;
        bad["re"][0][1] = 0.9; // breaks conjugate symmetry
        REQUIRE_THROWS_AS(hermitian_from_json(bad), ValidationError);
    }

    SECTION("im omitted means real symmetric") {
        nlohmann::json sym{{"kind", "hermitian"}, {"n", 2}, {"re", {{1.0, 2.0}, {2.0, 3.0}}}};
        const auto c = hermitian_from_json(sym);
        REQUIRE(c(0, 1) == cd(2.0, 0.0));
    }
}

TEST_CASE("skew JSON validation") {
    const auto s = skew_from_rows({{0, 1}, {-1, 0}});
    const auto j = to_json(s);
    const auto t = skew_from_json(j);
    REQUIRE(gztest::entry_distance(s, t) == 0.0);

    SECTION("nonzero diagonal rejected") {
        auto bad = j;
        bad["re"][0][0] = 1e-14;
        REQUIRE_THROWS_AS(skew_from_json(bad), ValidationError);
    }
    SECTION("asymmetry rejected") {
        auto bad = j;
        bad["re"][1][0] = -0.5;
        REQUIRE_THROWS_AS(skew_from_json(bad), ValidationError);
    }
}
