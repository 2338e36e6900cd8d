#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "gz/eigen.hpp"
#include "gz/matrix.hpp"

namespace gz {

constexpr double kDefaultClusterTol = 1e-9;

/// Face of the positive Weyl chamber, encoded by the ordered multiplicity
/// partition of equal spectrum values. Carries the dimensions of the
/// stabilizer (Levi) subgroup and of its commutator.
///
/// For SO the last cluster may sit at modulus zero (zero_cluster flag); its
/// stabilizer block is SO(2z) or SO(2z+1) depending on the parity of the
/// ambient level, while positive clusters of size m contribute U(m) factors.
struct StratumDescriptor {
    GroupKind group = GroupKind::U;
    int level = 0;
    std::vector<int> multiplicities;
    bool zero_cluster = false; // SO only: last cluster sits at modulus 0
    int dim_levi = 0;
    int dim_levi_commutator = 0;
    bool warning = false;

    bool regular() const { return dim_levi_commutator == 0; }
};

inline nlohmann::json to_json(const StratumDescriptor& s) {
    nlohmann::json j{{"group", to_string(s.group)},
                     {"level", s.level},
                     {"multiplicities", s.multiplicities},
                     {"dim_levi", s.dim_levi},
                     {"dim_levi_commutator", s.dim_levi_commutator},
                     {"warning", s.warning}};
    if (s.group == GroupKind::SO) j["zero_cluster"] = s.zero_cluster;
    return j;
}

namespace detail {

// Single-linkage clustering of a descending value list: consecutive gaps at
// most tol*(1+max|value|) chain into one cluster. The warning flag marks
// any gap within a factor 10 of the threshold (fragile split or merge).
struct Clustering {
    std::vector<int> sizes;
    std::vector<int> starts;
    bool warning = false;
};

inline Clustering cluster_descending(const std::vector<double>& v, double tol) {
    Clustering c;
    if (v.empty()) return c;
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    const double eff = tol * (1.0 + scale);
    c.starts.push_back(0);
    int size = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double gap = v[i - 1] - v[i];
        if (gap >= eff / 10.0 && gap <= eff * 10.0) c.warning = true;
        if (gap <= eff) {
            ++size;
        } else {
            c.sizes.push_back(size);
            c.starts.push_back(static_cast<int>(i));
            size = 1;
        }
    }
    c.sizes.push_back(size);
    return c;
}

inline int so_zero_block(int zero_pairs, int level) { return 2 * zero_pairs + (level % 2); }

inline int so_orthogonal_dim(int m) { return m * (m - 1) / 2; }

} // namespace detail

/// Stratum of a U-chamber point (descending spectrum of a level-n submatrix).
inline StratumDescriptor stratum_of(const Spectrum& s, double tol) {
    StratumDescriptor d;
    d.group = GroupKind::U;
    d.level = s.size();
    const auto c = detail::cluster_descending(s.values(), tol);
    d.multiplicities = c.sizes;
    d.warning = c.warning;
    for (int m : d.multiplicities) {
        d.dim_levi += m * m;
        d.dim_levi_commutator += m * m - 1;
    }
    return d;
}

/// Stratum of an SO-chamber point: `moduli` are the floor(n/2) nonnegative
/// moduli, `level` the ambient matrix size n (needed for the zero-block
/// parity).
inline StratumDescriptor stratum_of_so(const Spectrum& moduli, int level, double tol) {
    StratumDescriptor d;
    d.group = GroupKind::SO;
    d.level = level;
    const auto& v = moduli.values();
    double scale = moduli.max_abs();
    const double eff = tol * (1.0 + scale);

    // Split off the zero cluster first, then cluster the positive part.
    int zero = 0;
    for (auto it = v.rbegin(); it != v.rend() && std::abs(*it) <= eff; ++it) ++zero;
    std::vector<double> positive(v.begin(), v.end() - zero);

    const auto c = detail::cluster_descending(positive, tol);
    d.multiplicities = c.sizes;
    d.warning = c.warning;
    if (!positive.empty() && zero > 0) {
        const double gap = positive.back();
        if (gap >= eff / 10.0 && gap <= eff * 10.0) d.warning = true;
    }
    for (int m : d.multiplicities) {
        d.dim_levi += m * m;
        d.dim_levi_commutator += m * m - 1;
    }
    if (zero > 0) {
        d.zero_cluster = true;
        d.multiplicities.push_back(zero);
    }
    const int zb = detail::so_zero_block(zero, level);
    d.dim_levi += detail::so_orthogonal_dim(zb);
    if (zb >= 3) d.dim_levi_commutator += detail::so_orthogonal_dim(zb);
    return d;
}

/// Chamber point: the unique representative of an orbit in the positive Weyl
/// chamber, together with its stratum.
struct ChamberPoint {
    Spectrum spectrum;
    StratumDescriptor stratum;
};

inline nlohmann::json to_json(const ChamberPoint& c) {
    return nlohmann::json{{"spectrum", c.spectrum.values()}, {"stratum", to_json(c.stratum)}};
}

/// Sweep map: matrix -> descending spectrum with stratum. Idempotent on
/// descending diagonal input and invariant under conjugation.
inline ChamberPoint sweep(const HermitianMatrix& a, double tol = kDefaultClusterTol) {
    ChamberPoint c;
    c.spectrum = spectrum_desc(a);
    c.stratum = stratum_of(c.spectrum, tol);
    return c;
}

inline ChamberPoint sweep(const SkewSymmetricMatrix& a, double tol = kDefaultClusterTol) {
    ChamberPoint c;
    c.spectrum = skew_spectrum(a);
    c.stratum = stratum_of_so(c.spectrum, a.size(), tol);
    return c;
}

// ---------------------------------------------------------------------------
// Stabilizer-commutator bases. For a Hermitian level-k submatrix with
// eigenvalue clusters of sizes m_i, the commutator of the stabilizer is the
// product of SU(m_i) blocks acting in the cluster eigenspaces. The basis is
// returned as anti-Hermitian n x n matrices supported in the top-left k x k
// block.
// ---------------------------------------------------------------------------

struct CommutatorBasis {
    std::vector<CMat> elements; // anti-Hermitian, n x n
    bool warning = false;
};

namespace detail {

// Embed the k x k anti-Hermitian block U M U* into n x n.
inline CMat embed_block(const CMat& frame, const CMat& m, int n) {
    const int k = frame.rows();
    const CMat block = frame * m * frame.adjoint();
    CMat out(n, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = block(i, j);
    return out;
}

// Basis of su(m) as anti-Hermitian m x m matrices.
inline std::vector<CMat> su_basis(int m) {
    std::vector<CMat> basis;
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) {
            CMat x(m, m);
            x(p, q) = 1.0;
            x(q, p) = -1.0;
            basis.push_back(x);
            CMat y(m, m);
            y(p, q) = cd(0.0, 1.0);
            y(q, p) = cd(0.0, 1.0);
            basis.push_back(y);
        }
    for (int d = 0; d + 1 < m; ++d) {
        CMat z(m, m);
        z(d, d) = cd(0.0, 1.0);
        z(d + 1, d + 1) = cd(0.0, -1.0);
        basis.push_back(z);
    }
    return basis;
}

} // namespace detail

/// Basis of the embedded stabilizer-commutator algebra of the level-k
/// principal submatrix of A: one su(m) block per eigenvalue cluster of size
/// m >= 2, in the cluster eigenframe, zero-padded to n x n.
inline CommutatorBasis levi_commutator_basis(const HermitianMatrix& a, int k, double tol) {
    if (k < 1 || k > a.size()) throw ArgumentError("levi_commutator_basis: k out of range");
    const int n = a.size();
    const auto eig = hermitian_eig(principal_submatrix(a, k));
    const auto clusters = detail::cluster_descending(eig.values, tol);

    CommutatorBasis out;
    out.warning = clusters.warning;
    for (std::size_t c = 0; c < clusters.sizes.size(); ++c) {
        const int m = clusters.sizes[c];
        if (m < 2) continue;
        const int start = clusters.starts[c];
        CMat frame(k, m);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j) frame(i, j) = eig.vectors(i, start + j);
        for (const CMat& basis_elem : detail::su_basis(m))
            out.elements.push_back(detail::embed_block(frame, basis_elem, n));
    }
    return out;
}

/// Real orthonormal basis of the kernel of a level-k skew submatrix,
/// extracted from the near-zero eigenvectors of iA_k. Vectors have length k.
inline std::vector<std::vector<double>> skew_kernel_basis(const EigenDecomposition& eig, int k, int zero_pairs) {
    const int half = k / 2;
    const int zb = detail::so_zero_block(zero_pairs, k);
    std::vector<std::vector<double>> kernel;
    const int lo = half - zero_pairs;       // first index of the zero group
    const int hi = (k - half) + zero_pairs; // one past the last (mirror side)
    for (int col = lo; col < hi && static_cast<int>(kernel.size()) < zb; ++col) {
        for (int part = 0; part < 2 && static_cast<int>(kernel.size()) < zb; ++part) {
            std::vector<double> v(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                v[static_cast<std::size_t>(i)] = part == 0 ? eig.vectors(i, col).real() : eig.vectors(i, col).imag();
            for (const auto& u : kernel) {
                double proj = 0.0;
                for (int i = 0; i < k; ++i) proj += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
                for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] -= proj * u[static_cast<std::size_t>(i)];
            }
            double norm = 0.0;
            for (double x : v) norm += x * x;
            norm = std::sqrt(norm);
            if (norm > 1e-7) {
                for (double& x : v) x /= norm;
                kernel.push_back(std::move(v));
            }
        }
    }
    return kernel;
}

struct SkewCommutatorBasis {
    std::vector<RMat> elements; // real skew, n x n
    bool warning = false;
};

/// Skew analogue of levi_commutator_basis. A positive modulus cluster of size
/// m has stabilizer U(m) (commutator su(m), realized as real skew matrices
/// via the +ib eigenframe of iA); a zero cluster has stabilizer SO(z) acting
/// on the kernel, which is its own commutator for z >= 3 and abelian below.
inline SkewCommutatorBasis so_stabilizer_commutator_basis(const SkewSymmetricMatrix& a, int k, double tol) {
    if (k < 1 || k > a.size()) throw ArgumentError("so_stabilizer_commutator_basis: k out of range");
    const int n = a.size();
    const auto eig = skew_eig(principal_submatrix(a, k));
    const int half = k / 2;
    std::vector<double> moduli(eig.values.begin(), eig.values.begin() + half);

    double scale = 0.0;
    for (double x : moduli) scale = std::max(scale, std::abs(x));
    const double eff = tol * (1.0 + scale);

    int zero = 0;
    for (auto it = moduli.rbegin(); it != moduli.rend() && std::abs(*it) <= eff; ++it) ++zero;
    std::vector<double> positive(moduli.begin(), moduli.end() - zero);
    const auto clusters = detail::cluster_descending(positive, tol);

    SkewCommutatorBasis out;
    out.warning = clusters.warning;

    // su(m) blocks from positive clusters: X = Z + conj(Z) with Z = U M U*.
    for (std::size_t c = 0; c < clusters.sizes.size(); ++c) {
        const int m = clusters.sizes[c];
        if (m < 2) continue;
        const int start = clusters.starts[c];
        CMat frame(k, m);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j) frame(i, j) = eig.vectors(i, start + j);
        for (const CMat& basis_elem : detail::su_basis(m)) {
            const CMat z = frame * basis_elem * frame.adjoint();
            RMat x(n, n);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) x(i, j) = 2.0 * z(i, j).real();
            out.elements.push_back(std::move(x));
        }
    }

    // so(z) block on the kernel (zero-modulus cluster), z = 2*zero + parity.
    const int zb = detail::so_zero_block(zero, k);
    if (zb >= 3) {
        const auto kernel = skew_kernel_basis(eig, k, zero);
        for (int p = 0; p < static_cast<int>(kernel.size()); ++p)
            for (int q = p + 1; q < static_cast<int>(kernel.size()); ++q) {
                RMat x(n, n);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        x(i, j) = kernel[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] *
                                      kernel[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] -
                                  kernel[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)] *
                                      kernel[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                out.elements.push_back(std::move(x));
            }
    }
    return out;
}

} // namespace gz
