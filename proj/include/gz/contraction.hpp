#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gz/chamber.hpp"
#include "gz/digest.hpp"
#include "gz/eigen.hpp"
#include "gz/matrix.hpp"
#include "gz/pattern.hpp"

namespace gz {

constexpr double kDefaultRankTol = 1e-8;

/// Unitary exp(tX) for anti-Hermitian X, via the eigendecomposition of -iX.
inline CMat exp_anti_hermitian(const CMat& x, double t) {
    const int n = x.rows();
    CMat h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = cd(0.0, -1.0) * x(i, j);
    const auto eig = hermitian_eig(HermitianMatrix(std::move(h)));
    CMat d(n, n);
    for (int i = 0; i < n; ++i) {
        const double th = t * eig.values[static_cast<std::size_t>(i)];
        d(i, i) = cd(std::cos(th), std::sin(th));
    }
    return eig.vectors * d * eig.vectors.adjoint();
}

/// Orthogonal exp(tX) for real skew X.
inline RMat exp_skew(const RMat& x, double t) {
    const int n = x.rows();
    CMat cx(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cx(i, j) = x(i, j);
    const CMat e = exp_anti_hermitian(cx, t);
    RMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = e(i, j).real();
    return out;
}

/// Tangent directions of the embedded stabilizer-commutator orbit through A
/// at level k (the leaf of the stratified null foliation).
inline std::vector<HermitianMatrix> leaf_directions(const HermitianMatrix& a, int k, double tol,
                                                    bool* warning = nullptr) {
    const auto basis = levi_commutator_basis(a, k, tol);
    if (warning) *warning = basis.warning;
    std::vector<HermitianMatrix> dirs;
    dirs.reserve(basis.elements.size());
    for (const CMat& x : basis.elements) dirs.push_back(HermitianMatrix(commutator(x, a.mat())));
    return dirs;
}

inline std::vector<SkewSymmetricMatrix> leaf_directions(const SkewSymmetricMatrix& a, int k, double tol,
                                                        bool* warning = nullptr) {
    const auto basis = so_stabilizer_commutator_basis(a, k, tol);
    if (warning) *warning = basis.warning;
    std::vector<SkewSymmetricMatrix> dirs;
    dirs.reserve(basis.elements.size());
    for (const RMat& x : basis.elements) dirs.push_back(SkewSymmetricMatrix(commutator(x, a.mat())));
    return dirs;
}

struct LeafDim {
    int dim = 0;
    bool warning = false;
};

/// Rank of the level-k leaf directions: the dimension of the homogeneous
/// fiber the level-k contraction stage collapses through A.
template <class M>
LeafDim leaf_dim(const M& a, int k, double tol, double rank_tol = kDefaultRankTol) {
    LeafDim out;
    const auto dirs = leaf_directions(a, k, tol, &out.warning);
    out.dim = direction_rank(dirs, rank_tol);
    return out;
}

// ---------------------------------------------------------------------------
// Chain report: the per-level strata and leaf dimensions seen by the iterated
// contraction, evaluated on a representative matrix.
// ---------------------------------------------------------------------------

struct ChainLevel {
    int k = 0;
    StratumDescriptor stratum;
    int leaf_dim = 0;
    bool warning = false;
};

struct ContractionChainReport {
    Spectrum lambda;
    std::string point_digest;
    std::vector<ChainLevel> per_level; // k = n down to the lowest level
};

inline nlohmann::json to_json(const ContractionChainReport& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : r.per_level)
        levels.push_back(nlohmann::json{
            {"k", l.k}, {"stratum", to_json(l.stratum)}, {"leaf_dim", l.leaf_dim}, {"warning", l.warning}});
    return nlohmann::json{{"lambda", r.lambda.values()}, {"point_digest", r.point_digest}, {"per_level", levels}};
}

inline ContractionChainReport chain_report(const HermitianMatrix& a, double tol,
                                           double rank_tol = kDefaultRankTol) {
    ContractionChainReport r;
    r.lambda = spectrum_desc(a);
    r.point_digest = fnv1a_digest(to_json(a).dump());
    for (int k = a.size(); k >= 1; --k) {
        ChainLevel level;
        level.k = k;
        level.stratum = stratum_of(spectrum_desc(principal_submatrix(a, k)), tol);
        const auto ld = leaf_dim(a, k, tol, rank_tol);
        level.leaf_dim = ld.dim;
        level.warning = ld.warning || level.stratum.warning;
        r.per_level.push_back(std::move(level));
    }
    return r;
}

inline ContractionChainReport chain_report(const SkewSymmetricMatrix& a, double tol,
                                           double rank_tol = kDefaultRankTol) {
    ContractionChainReport r;
    r.lambda = skew_spectrum(a);
    r.point_digest = fnv1a_digest(to_json(a).dump());
    for (int k = a.size(); k >= 2; --k) {
        ChainLevel level;
        level.k = k;
        level.stratum = stratum_of_so(skew_spectrum(principal_submatrix(a, k)), k, tol);
        const auto ld = leaf_dim(a, k, tol, rank_tol);
        level.leaf_dim = ld.dim;
        level.warning = ld.warning || level.stratum.warning;
        r.per_level.push_back(std::move(level));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fiber tangent rank: the span of all per-level leaf directions together with
// the Hamiltonian directions of the chain components at simple eigenvalues.
// This is the direct (flow-based) measurement of the fiber dimension through
// a representative; the constraint-based oracle lives in fiber.hpp.
// ---------------------------------------------------------------------------

namespace detail {

// Cluster projector frames per level, shared by the direction and constraint
// machinery: for level k, the eigen decomposition of A_k plus its clustering.
struct LevelSpectralData {
    EigenDecomposition eig;
    Clustering clusters;
};

inline LevelSpectralData level_data(const HermitianMatrix& a, int k, double tol) {
    LevelSpectralData d;
    d.eig = hermitian_eig(principal_submatrix(a, k));
    d.clusters = cluster_descending(d.eig.values, tol);
    return d;
}

} // namespace detail

/// Hamiltonian (torus) directions i[P, A] of the simple chain components at
/// every level; degenerate clusters contribute no torus direction (their
/// smooth flows lie in the leaf span).
inline std::vector<HermitianMatrix> torus_directions(const HermitianMatrix& a, double tol) {
    const int n = a.size();
    std::vector<HermitianMatrix> dirs;
    for (int k = 1; k <= n; ++k) {
        const auto data = detail::level_data(a, k, tol);
        for (std::size_t c = 0; c < data.clusters.sizes.size(); ++c) {
            if (data.clusters.sizes[c] != 1) continue;
            const int col = data.clusters.starts[c];
            CMat p(n, n);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) p(i, j) = data.eig.vectors(i, col) * std::conj(data.eig.vectors(j, col));
            dirs.push_back(HermitianMatrix(cd(0.0, 1.0) * commutator(p, a.mat())));
        }
    }
    return dirs;
}

inline std::vector<SkewSymmetricMatrix> torus_directions(const SkewSymmetricMatrix& a, double tol) {
    const int n = a.size();
    std::vector<SkewSymmetricMatrix> dirs;
    for (int k = 2; k <= n; ++k) {
        const auto eig = skew_eig(principal_submatrix(a, k));
        const int half = k / 2;
        std::vector<double> moduli(eig.values.begin(), eig.values.begin() + half);
        double scale = 0.0;
        for (double x : moduli) scale = std::max(scale, std::abs(x));
        const double eff = tol * (1.0 + scale);
        const auto clusters = detail::cluster_descending(moduli, tol);
        for (std::size_t c = 0; c < clusters.sizes.size(); ++c) {
            if (clusters.sizes[c] != 1) continue;
            const int col = clusters.starts[c];
            if (moduli[static_cast<std::size_t>(col)] <= eff) continue; // zero cluster
            RMat g(n, n);
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) {
                    const double xp = eig.vectors(p, col).real();
                    const double yp = eig.vectors(p, col).imag();
                    const double xq = eig.vectors(q, col).real();
                    const double yq = eig.vectors(q, col).imag();
                    g(p, q) = yp * xq - xp * yq;
                }
            dirs.push_back(SkewSymmetricMatrix(commutator(g, a.mat())));
        }
    }
    return dirs;
}

struct FiberTangent {
    int dim = 0;
    int leaf_dim_total = 0; // sum of per-level leaf ranks
    bool warning = false;
};

inline int lowest_chain_level(const HermitianMatrix&) { return 1; }
inline int lowest_chain_level(const SkewSymmetricMatrix&) { return 2; }

/// Rank of the union of leaf and torus directions through A.
template <class M>
FiberTangent fiber_tangent(const M& a, double tol, double rank_tol = kDefaultRankTol) {
    FiberTangent out;
    auto all = torus_directions(a, tol);
    for (int k = lowest_chain_level(a); k <= a.size(); ++k) {
        bool warn = false;
        auto dirs = leaf_directions(a, k, tol, &warn);
        out.warning = out.warning || warn;
        out.leaf_dim_total += direction_rank(dirs, rank_tol);
        for (auto& d : dirs) all.push_back(std::move(d));
    }
    out.dim = direction_rank(all, rank_tol);
    return out;
}

template <class M>
int fiber_tangent_dim(const M& a, double tol, double rank_tol = kDefaultRankTol) {
    return fiber_tangent(a, tol, rank_tol).dim;
}

} // namespace gz
