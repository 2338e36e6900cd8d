#include "helpers.hpp"

using namespace gz;
using gztest::hermitian_from_rows;

namespace {

ScalarField<HermitianMatrix> entry_re(int i, int j) {
    ScalarField<HermitianMatrix> f;
    f.label = "Re A" + std::to_string(i) + std::to_string(j);
    f.eval = [i, j](const HermitianMatrix& a) { return a(i, j).real(); };
    return f;
}

ScalarField<HermitianMatrix> entry_im(int i, int j) {
    ScalarField<HermitianMatrix> f;
    f.label = "Im A" + std::to_string(i) + std::to_string(j);
    f.eval = [i, j](const HermitianMatrix& a) { return a(i, j).imag(); };
    return f;
}

} // namespace

TEST_CASE("finite-difference gradients recover linear and quadratic fields") {
    const auto a = hermitian_from_rows({{cd(1.2, 0), cd(0.3, -0.4)}, {cd(0.3, 0.4), cd(-0.7, 0)}});

    SECTION("f = A_11 has gradient E_11") {
        ScalarField<HermitianMatrix> f;
        f.label = "A11";
        f.eval = [](const HermitianMatrix& m) { return m(0, 0).real(); };
        const auto g = gradient(f, a);
        REQUIRE_THAT(g(0, 0).real(), Catch::Matchers::WithinAbs(1.0, 1e-8));
        REQUIRE(std::abs(g(0, 1)) <= 1e-8);
        REQUIRE(std::abs(g(1, 1)) <= 1e-8);
    }
    SECTION("f = tr(A^2)/2 has gradient A") {
        ScalarField<HermitianMatrix> f;
        f.label = "tr2half";
        f.eval = [](const HermitianMatrix& m) { return trace(m.mat() * m.mat()).real() / 2.0; };
        const auto g = gradient(f, a);
        REQUIRE(gztest::entry_distance(g, a) <= 1e-7);
    }
    SECTION("eigenvalue gradient is the eigenprojector (Hellmann-Feynman)") {
        const auto f = eigenvalue_field(2, 1);
        const auto g = f.grad(HermitianMatrix::diagonal({2, 1}));
        REQUIRE_THAT(g(0, 0).real(), Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE(std::abs(g(0, 1)) <= 1e-12);
        REQUIRE(std::abs(g(1, 1)) <= 1e-12);
    }
    SECTION("analytic eigenvalue gradients agree with finite differences") {
        for (int trial = 0; trial < 10; ++trial) {
            const auto m = sample_orbit_point(Spectrum({3, 1, 0}), child_seed(808, trial));
            for (int k = 1; k <= 3; ++k)
                for (int i = 1; i <= k; ++i) {
                    const auto f = eigenvalue_field(k, i);
                    const auto analytic = f.grad(m);
                    ScalarField<HermitianMatrix> fd = f;
                    fd.grad = nullptr;
                    const auto numeric = gradient(fd, m, 1e-5);
                    REQUIRE(gztest::entry_distance(analytic, numeric) <= 1e-6 * (1.0 + analytic.frobenius()));
                }
        }
    }
    SECTION("SO eigenvalue gradients agree with finite differences") {
        for (int trial = 0; trial < 5; ++trial) {
            const auto m = sample_orbit_point_so(Spectrum({2.0, 0.5}), 5, child_seed(11, trial));
            for (int k = 2; k <= 5; ++k)
                for (int i = 1; i <= k / 2; ++i) {
                    const auto f = eigenvalue_field_so(k, i);
                    const auto analytic = f.grad(m);
                    ScalarField<SkewSymmetricMatrix> fd = f;
                    fd.grad = nullptr;
                    const auto numeric = gradient(fd, m, 1e-5);
                    REQUIRE(gztest::entry_distance(analytic, numeric) <= 1e-6 * (1.0 + analytic.frobenius()));
                }
        }
    }
    SECTION("degenerate eigenvalue gradient raises") {
        const auto f = eigenvalue_field(2, 1);
        REQUIRE_THROWS_AS(f.grad(HermitianMatrix::diagonal({1, 1})), DegeneracyError);
        REQUIRE(f.eval(HermitianMatrix::diagonal({1, 1})) == 1.0); // value still fine
    }
}

TEST_CASE("bracket structure constants") {
    // f = Re A_12, g = Im A_12 at diag(1,0): |{f,g}| = 1/2.
    const auto a = HermitianMatrix::diagonal({1, 0});
    const double b = lie_poisson_bracket(entry_re(0, 1), entry_im(0, 1), a);
    REQUIRE_THAT(std::abs(b), Catch::Matchers::WithinAbs(0.5, 1e-7));
}

TEST_CASE("bracket antisymmetry is exact") {
    Rng rng(17);
    const auto a = sample_gaussian_hermitian(3, rng);
    const auto f = entry_re(0, 1);
    const auto g = entry_im(1, 2);
    REQUIRE(lie_poisson_bracket(f, g, a) == -lie_poisson_bracket(g, f, a));
    REQUIRE(lie_poisson_bracket(f, f, a) == 0.0);
}

TEST_CASE("Leibniz rule") {
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = sample_gaussian_hermitian(3, rng);
        const auto f = entry_re(0, 1);
        const auto g = entry_re(1, 2);
        const auto h = entry_im(0, 2);
        const double lhs = lie_poisson_bracket(product_field(f, g), h, a);
        const double rhs = f.eval(a) * lie_poisson_bracket(g, h, a) + g.eval(a) * lie_poisson_bracket(f, h, a);
        REQUIRE_THAT(lhs, Catch::Matchers::WithinAbs(rhs, 1e-5));
    }
}

TEST_CASE("Jacobi identity on linear fields") {
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = sample_gaussian_hermitian(3, rng);
        const auto bmat = sample_gaussian_hermitian(3, rng);
        const auto cmat = sample_gaussian_hermitian(3, rng);
        const auto dmat = sample_gaussian_hermitian(3, rng);
        const auto fb = linear_field(bmat, "fb");
        const auto fc = linear_field(cmat, "fc");
        const auto fd = linear_field(dmat, "fd");

        // {f, g} of linear fields is again linear with matrix i[B, C].
        const auto bc = linear_field(HermitianMatrix(cd(0, 1) * commutator(bmat.mat(), cmat.mat())), "bc");
        const auto cdf = linear_field(HermitianMatrix(cd(0, 1) * commutator(cmat.mat(), dmat.mat())), "cd");
        const auto db = linear_field(HermitianMatrix(cd(0, 1) * commutator(dmat.mat(), bmat.mat())), "db");

        const double cyc =
            lie_poisson_bracket(bc, fd, a) + lie_poisson_bracket(cdf, fb, a) + lie_poisson_bracket(db, fc, a);
        REQUIRE_THAT(cyc, Catch::Matchers::WithinAbs(0.0, 1e-4));
    }
}

TEST_CASE("power traces are Casimirs") {
    Rng rng(31);
    for (int p : {2, 3}) {
        const auto cas = power_trace_field(p);
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = sample_gaussian_hermitian(4, rng);
            const auto f = entry_re(0, 2);
            REQUIRE_THAT(lie_poisson_bracket(cas, f, a), Catch::Matchers::WithinAbs(0.0, 1e-6));
            const auto g = eigenvalue_field(3, 1);
            REQUIRE_THAT(lie_poisson_bracket(cas, g, a), Catch::Matchers::WithinAbs(0.0, 1e-6));
        }
    }
}

TEST_CASE("chain components commute (small case)") {
    // A level-1 component against a full-level one on a generic orbit point.
    const auto f = eigenvalue_field(1, 1);
    const auto g = eigenvalue_field(3, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = sample_orbit_point(Spectrum({3, 1, 0}), child_seed(1000, trial));
        REQUIRE_THAT(lie_poisson_bracket(f, g, a), Catch::Matchers::WithinAbs(0.0, 1e-6));
    }
}

TEST_CASE("full involution at regular points") {
    const auto fields = gz_fields(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = sample_orbit_point(Spectrum({3, 1, 0}), child_seed(2000, trial));
        for (std::size_t i = 0; i < fields.size(); ++i)
            for (std::size_t j = i + 1; j < fields.size(); ++j)
                REQUIRE_THAT(lie_poisson_bracket(fields[i], fields[j], a), Catch::Matchers::WithinAbs(0.0, 1e-6));
    }
}

TEST_CASE("SO involution at regular points") {
    const auto fields = gz_fields_so(4);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = sample_orbit_point_so(Spectrum({2.0, 0.5}), 4, child_seed(3000, trial));
        for (std::size_t i = 0; i < fields.size(); ++i)
            for (std::size_t j = i + 1; j < fields.size(); ++j)
                REQUIRE_THAT(lie_poisson_bracket(fields[i], fields[j], a), Catch::Matchers::WithinAbs(0.0, 1e-6));
    }
}

TEST_CASE("eigenvalue field values on pinned examples") {
    SECTION("(k=1,i=1) is the corner entry") {
        const auto f = eigenvalue_field(1, 1);
        const auto a = hermitian_from_rows({{cd(1.5, 0), cd(2, 1)}, {cd(2, -1), cd(0, 0)}});
        REQUIRE(f.eval(a) == 1.5);
    }
    SECTION("(k=2,i=1) on an embedded block") {
        const auto f = eigenvalue_field(2, 1);
        const auto a = hermitian_from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 5}});
        REQUIRE_THAT(f.eval(a), Catch::Matchers::WithinAbs(2.0, 1e-12));
    }
    SECTION("SO (k=2,i=1) on the rotation generator") {
        const auto f = eigenvalue_field_so(2, 1);
        const auto s = gztest::skew_from_rows({{0, 1}, {-1, 0}});
        REQUIRE_THAT(f.eval(s), Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
}
