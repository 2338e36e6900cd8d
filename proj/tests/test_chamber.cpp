#include "helpers.hpp"

using namespace gz;
using gztest::hermitian_from_rows;
using gztest::skew_from_rows;

TEST_CASE("stratum_of clusters multiplicities and fills Levi dimensions") {
    SECTION("regular spectrum") {
        const auto s = stratum_of(Spectrum({2, 1, 0}), 1e-9);
        REQUIRE(s.multiplicities == std::vector<int>{1, 1, 1});
        REQUIRE(s.dim_levi == 3);
        REQUIRE(s.dim_levi_commutator == 0);
        REQUIRE(s.regular());
    }
    SECTION("one double cluster") {
        const auto s = stratum_of(Spectrum({1, 1, 0}), 1e-9);
        REQUIRE(s.multiplicities == std::vector<int>{2, 1});
        REQUIRE(s.dim_levi == 5);
        REQUIRE(s.dim_levi_commutator == 3);
        REQUIRE_FALSE(s.regular());
    }
    SECTION("near ties cluster under the relative tolerance") {
        const auto s = stratum_of(Spectrum({1.0, 1.0 + 1e-12, 0.0}), 1e-9);
        REQUIRE(s.multiplicities == std::vector<int>{2, 1});
    }
    SECTION("dimension identities hold for random clusterings") {
        Rng rng(314);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(6));
            std::vector<double> vals;
            double v = 5.0;
            for (int i = 0; i < n; ++i) {
                if (rng.coin()) v -= 1.0 + rng.uniform();
                vals.push_back(v);
            }
            const auto s = stratum_of(Spectrum(vals), 1e-9);
            int total = 0, levi = 0, comm = 0;
            for (int m : s.multiplicities) {
                total += m;
                levi += m * m;
                comm += m * m - 1;
            }
            REQUIRE(total == n);
            REQUIRE(s.dim_levi == levi);
            REQUIRE(s.dim_levi_commutator == comm);
            REQUIRE((s.dim_levi_commutator == 0) == (static_cast<int>(s.multiplicities.size()) == n));
        }
    }
}

TEST_CASE("SO strata track the zero cluster") {
    SECTION("generic moduli, even level") {
        const auto s = stratum_of_so(Spectrum({2, 1}), 4, 1e-9);
        REQUIRE(s.multiplicities == std::vector<int>{1, 1});
        REQUIRE_FALSE(s.zero_cluster);
        REQUIRE(s.dim_levi == 2); // U(1) x U(1)
        REQUIRE(s.dim_levi_commutator == 0);
    }
    SECTION("zero modulus, odd level has an SO(3) block") {
        const auto s = stratum_of_so(Spectrum({2, 0}), 5, 1e-9);
        REQUIRE(s.zero_cluster);
        REQUIRE(s.multiplicities == std::vector<int>{1, 1});
        REQUIRE(s.dim_levi == 1 + 3);            // U(1) x SO(3)
        REQUIRE(s.dim_levi_commutator == 0 + 3); // SO(3) is its own commutator
    }
    SECTION("zero modulus, even level has an abelian SO(2) block") {
        const auto s = stratum_of_so(Spectrum({2, 0}), 4, 1e-9);
        REQUIRE(s.zero_cluster);
        REQUIRE(s.dim_levi == 1 + 1);
        REQUIRE(s.dim_levi_commutator == 0);
    }
    SECTION("equal positive moduli give a U(2) block") {
        const auto s = stratum_of_so(Spectrum({1, 1}), 4, 1e-9);
        REQUIRE(s.multiplicities == std::vector<int>{2});
        REQUIRE(s.dim_levi == 4);
        REQUIRE(s.dim_levi_commutator == 3);
    }
}

TEST_CASE("sweep map") {
    SECTION("computes the chamber point of [[0,1],[1,0]]") {
        const auto c = sweep(hermitian_from_rows({{0, 1}, {1, 0}}));
        REQUIRE_THAT(c.spectrum[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(c.spectrum[1], Catch::Matchers::WithinAbs(-1.0, 1e-12));
        REQUIRE(c.stratum.multiplicities == std::vector<int>{1, 1});
    }
    SECTION("diag(5,5,1)") {
        const auto c = sweep(HermitianMatrix::diagonal({5, 5, 1}));
        REQUIRE(c.spectrum[0] == 5.0);
        REQUIRE(c.spectrum[1] == 5.0);
        REQUIRE(c.spectrum[2] == 1.0);
        REQUIRE(c.stratum.multiplicities == std::vector<int>{2, 1});
    }
    SECTION("idempotent on descending diagonal matrices, exactly") {
        const std::vector<double> vals{3.5, 1.25, -0.75};
        const auto c = sweep(HermitianMatrix::diagonal(vals));
        REQUIRE(c.spectrum.values() == vals);
    }
    SECTION("conjugation invariance") {
        Rng rng(2024);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(5));
            const auto a = sample_gaussian_hermitian(n, rng);
            const CMat q = haar_unitary(n, rng);
            const HermitianMatrix b(q * a.mat() * q.adjoint());
            REQUIRE(gztest::spectrum_distance(sweep(a).spectrum, sweep(b).spectrum) <= 1e-9);
            REQUIRE(sweep(a).stratum.multiplicities == sweep(b).stratum.multiplicities);
        }
    }
}

TEST_CASE("levi commutator basis") {
    SECTION("scalar 2x2 block inside a 3x3 matrix gives su(2)") {
        const auto a = hermitian_from_rows({{1, 0, 0}, {0, 1, 1}, {0, 1, 1}});
        const auto basis = levi_commutator_basis(a, 2, 1e-9);
        REQUIRE(basis.elements.size() == 3);
    }
    SECTION("regular level gives an empty basis") {
        const auto a = HermitianMatrix::diagonal({2, 1, 0});
        REQUIRE(levi_commutator_basis(a, 2, 1e-9).elements.empty());
    }
    SECTION("scalar 3x3 gives su(3)") {
        const auto a = HermitianMatrix::diagonal({1, 1, 1});
        REQUIRE(levi_commutator_basis(a, 3, 1e-9).elements.size() == 8);
    }
    SECTION("elements commute with the embedded submatrix and are block traceless") {
        for (int trial = 0; trial < 20; ++trial) {
            // Conjugated matrix with a triple cluster at level 4.
            const auto a0 = HermitianMatrix::diagonal({2, 2, 2, -1});
            Rng inner(child_seed(55, static_cast<std::uint64_t>(trial)));
            const CMat q = haar_unitary(4, inner);
            const HermitianMatrix a(q * a0.mat() * q.adjoint());
            const auto basis = levi_commutator_basis(a, 4, 1e-9);
            REQUIRE(basis.elements.size() == 8);
            const auto ak = principal_submatrix(a, 4);
            for (const CMat& x : basis.elements) {
                const CMat sym = x + x.adjoint();
                REQUIRE(sym.frobenius() <= 1e-12);
                REQUIRE(commutator(x, ak.mat()).frobenius() <= 1e-9 * (1.0 + a.frobenius()));
                REQUIRE(std::abs(trace(x)) <= 1e-12);
            }
        }
    }
    SECTION("near-threshold gaps raise the warning flag") {
        const auto a = HermitianMatrix::diagonal({1.0 + 5e-9, 1.0, 0.0});
        const auto basis = levi_commutator_basis(a, 3, 1e-9);
        REQUIRE(basis.warning);
        const auto s = stratum_of(spectrum_desc(principal_submatrix(a, 3)), 1e-9);
        REQUIRE(s.warning);
    }
}

TEST_CASE("SO stabilizer commutator basis") {
    SECTION("equal moduli give su(2) as real skew matrices") {
        const auto s = skew_from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
        const auto basis = so_stabilizer_commutator_basis(s, 4, 1e-9);
        REQUIRE(basis.elements.size() == 3);
        for (const RMat& x : basis.elements) {
            const RMat sym = x + x.transpose();
            REQUIRE(sym.frobenius() <= 1e-12);
            REQUIRE(commutator(x, s.mat()).frobenius() <= 1e-9);
        }
    }
    SECTION("zero block of odd size 3 gives so(3)") {
        // so(5) point with moduli (2, 0): kernel is 3-dimensional.
        const auto s = SkewSymmetricMatrix::canonical({2.0, 0.0}, 5);
        const auto basis = so_stabilizer_commutator_basis(s, 5, 1e-9);
        REQUIRE(basis.elements.size() == 3);
        for (const RMat& x : basis.elements) REQUIRE(commutator(x, s.mat()).frobenius() <= 1e-9);
    }
    SECTION("regular point gives an empty basis") {
        const auto s = SkewSymmetricMatrix::canonical({2.0, 1.0}, 4);
        REQUIRE(so_stabilizer_commutator_basis(s, 4, 1e-9).elements.empty());
    }
}

TEST_CASE("stratum JSON shape") {
    const auto s = stratum_of(Spectrum({1, 1, 0}), 1e-9);
    const auto j = to_json(s);
    REQUIRE(j["group"] == "U");
    REQUIRE(j["level"] == 3);
    REQUIRE(j["multiplicities"] == nlohmann::json({2, 1}));
    REQUIRE(j["dim_levi"] == 5);
    REQUIRE(j["dim_levi_commutator"] == 3);
    REQUIRE(j["warning"] == false);
}
