#include "helpers.hpp"

using namespace gz;
using gztest::hermitian_from_rows;

TEST_CASE("corner-entry flow on u(2) is 2-pi periodic") {
    const auto f = eigenvalue_field(1, 1);
    const auto a0 = hermitian_from_rows({{1, 1}, {1, 1}});
    const double two_pi = 2.0 * 3.14159265358979323846;
    const auto trace = lax_flow(f, a0, two_pi, 1e-3);
    REQUIRE(gztest::entry_distance(trace.states.back(), a0) < 1e-6);
    REQUIRE(trace.spectrum_drift <= 1e-7);
    // f itself is conserved along its own flow.
    double fmax = 0.0;
    for (double v : trace.f_values) fmax = std::max(fmax, std::abs(v - trace.f_values.front()));
    REQUIRE(fmax <= 1e-7);
}

TEST_CASE("Casimir flow fixes diagonal points") {
    const auto f = power_trace_field(2);
    const auto a0 = HermitianMatrix::diagonal({2, 1});
    const auto trace = lax_flow(f, a0, 1.0, 1e-2);
    REQUIRE(gztest::entry_distance(trace.states.back(), a0) <= 1e-12);
    REQUIRE_THAT(trace.f_values.back(), Catch::Matchers::WithinAbs(trace.f_values.front(), 1e-12));
}

TEST_CASE("zero-length flow returns the initial state only") {
    const auto f = eigenvalue_field(1, 1);
    const auto a0 = hermitian_from_rows({{1, 1}, {1, 1}});
    const auto trace = lax_flow(f, a0, 0.0, 1e-3);
    REQUIRE(trace.states.size() == 1);
    REQUIRE(trace.times == std::vector<double>{0.0});
    REQUIRE(gztest::entry_distance(trace.states.front(), a0) == 0.0);
}

TEST_CASE("flows preserve the spectrum along the way") {
    const auto f = eigenvalue_field(2, 1);
    const auto a0 = sample_orbit_point(Spectrum({2, 1, 0}), 5);
    const auto trace = lax_flow(f, a0, 1.0, 1e-3);
    REQUIRE(trace.spectrum_drift <= 1e-7 * (1.0 + a0.frobenius()));
}

TEST_CASE("SO flow conserves moduli and the Hamiltonian") {
    const auto f = eigenvalue_field_so(3, 1);
    const auto a0 = sample_orbit_point_so(Spectrum({2.0, 0.5}), 4, 21);
    const auto trace = lax_flow(f, a0, 1.0, 1e-3);
    REQUIRE(trace.spectrum_drift <= 1e-7 * (1.0 + a0.frobenius()));
    double fmax = 0.0;
    for (double v : trace.f_values) fmax = std::max(fmax, std::abs(v - trace.f_values.front()));
    REQUIRE(fmax <= 1e-7);
}

TEST_CASE("flow through a degeneracy raises with the failure time") {
    // lambda_1 of the full 2x2 matrix: driving A_11 towards the gap closure.
    const auto f = eigenvalue_field(2, 1);
    const auto a0 = HermitianMatrix::diagonal({1.0, 1.0 + 1e-10});
    REQUIRE_THROWS_AS(lax_flow(f, a0, 1.0, 1e-3), DegeneracyError);
}

TEST_CASE("invalid step arguments") {
    const auto f = eigenvalue_field(1, 1);
    const auto a0 = HermitianMatrix::diagonal({1, 0});
    REQUIRE_THROWS_AS(lax_flow(f, a0, 1.0, 0.0), ArgumentError);
    REQUIRE_THROWS_AS(lax_flow(f, a0, -1.0, 1e-3), ArgumentError);
}

TEST_CASE("flow trace serialization") {
    const auto f = eigenvalue_field(1, 1);
    const auto a0 = hermitian_from_rows({{1, 1}, {1, 1}});
    const auto trace = lax_flow(f, a0, 0.01, 1e-3);

    const auto j = to_json(trace);
    REQUIRE(j["times"].size() == trace.times.size());
    REQUIRE(j["states"].size() == trace.states.size());
    REQUIRE(j["hamiltonian"] == "lambda[1,1]");

    std::ostringstream csv;
    write_csv(csv, trace);
    const std::string s = csv.str();
    REQUIRE(s.rfind("t,re_0_0,im_0_0", 0) == 0);
    // one header plus one row per state
    REQUIRE(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')) == trace.states.size() + 1);
}
