#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gz/chamber.hpp"
#include "gz/contraction.hpp"
#include "gz/digest.hpp"
#include "gz/eigen.hpp"
#include "gz/errors.hpp"
#include "gz/matrix.hpp"
#include "gz/parallel.hpp"
#include "gz/pattern.hpp"
#include "gz/reconstruct.hpp"
#include "gz/rng.hpp"

namespace gz {

// ---------------------------------------------------------------------------
// Constraint-rank oracle.
//
// The fiber of the chain map through A is cut out, level by level, by the
// conditions "spectrum of A_k is fixed". Near a representative these
// decompose into smooth constraints whose differentials we can write down:
//
//   * per eigenvalue cluster (size m, frame U) of A_k: the compressed
//     perturbation U* dA_k U must vanish (m^2 real conditions; for a simple
//     eigenvalue this is Hellmann-Feynman);
//
//   * per value shared between consecutive levels with multiplicity in
//     A_{k+1} at least that in A_k: the border column must stay orthogonal
//     to the cluster eigenspace, d(U* b) = dU* b + U* db (2m real
//     conditions). These are the constraints first-order spectral data
//     cannot see: a tie lambda^k_i = lambda^{k+1}_j is a one-sided maximum
//     along the orbit, so d lambda vanishes there while the constraint still
//     cuts dimension. dU is the standard eigenvector perturbation series
//     over the complementary clusters.
//
// The oracle dimension is dim O_lambda minus the rank of all constraint
// functionals evaluated against an orbit direction basis [X_l, A]. It shares
// no code path with the leaf/torus direction count it is checked against.
// ---------------------------------------------------------------------------

namespace detail {

// Anti-Hermitian basis of u(n).
inline std::vector<CMat> unitary_algebra_basis(int n) {
    std::vector<CMat> basis;
    basis.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        CMat m(n, n);
        m(i, i) = cd(0.0, 1.0);
        basis.push_back(std::move(m));
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CMat x(n, n);
            x(i, j) = r;
            x(j, i) = -r;
            basis.push_back(std::move(x));
            CMat y(n, n);
            y(i, j) = cd(0.0, r);
            y(j, i) = cd(0.0, r);
            basis.push_back(std::move(y));
        }
    return basis;
}

inline std::vector<RMat> orthogonal_algebra_basis(int n) {
    std::vector<RMat> basis;
    const double r = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RMat x(n, n);
            x(i, j) = r;
            x(j, i) = -r;
            basis.push_back(std::move(x));
        }
    return basis;
}

// Rank of a row bundle after dropping near-zero rows and normalizing the
// rest. Rows whose norm is below drop_tol carry no constraint (the
// functional vanishes identically on the orbit).
inline int row_rank(std::vector<std::vector<double>>& rows, double drop_tol, double rank_tol) {
    std::vector<std::vector<double>*> kept;
    for (auto& r : rows) {
        double norm = 0.0;
        for (double x : r) norm += x * x;
        norm = std::sqrt(norm);
        if (norm <= drop_tol) continue;
        for (double& x : r) x /= norm;
        kept.push_back(&r);
    }
    if (kept.empty()) return 0;
    RMat m(static_cast<int>(kept.front()->size()), static_cast<int>(kept.size()));
    for (int c = 0; c < static_cast<int>(kept.size()); ++c)
        for (int r = 0; r < m.rows(); ++r) m(r, c) = (*kept[static_cast<std::size_t>(c)])[static_cast<std::size_t>(r)];
    return numerical_rank(m, rank_tol);
}

// First-order perturbation of the cluster eigenframe of A_k under a Hermitian
// direction v, paired against the border column b:
//   (dU* b)_c = sum_{l outside cluster} conj(u_l* v_k u_c) / (theta_c -
//   theta_l) * (u_l* b)
// Returns the complex row d(U* b) for one cluster column u_c.
inline cd eigvec_tie_term(const EigenDecomposition& eig, int k, int col, double theta, int cluster_start,
                          int cluster_size, const CMat& v, const CMat& border) {
    cd acc = 0.0;
    for (int l = 0; l < k; ++l) {
        if (l >= cluster_start && l < cluster_start + cluster_size) continue;
        const double denom = theta - eig.values[static_cast<std::size_t>(l)];
        // u_l* v_k u_col
        cd num = 0.0;
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) num += std::conj(eig.vectors(p, l)) * v(p, q) * eig.vectors(q, col);
        // u_l* b
        cd lb = 0.0;
        for (int p = 0; p < k; ++p) lb += std::conj(eig.vectors(p, l)) * border(p, 0);
        acc += std::conj(num / denom) * lb;
    }
    return acc;
}

} // namespace detail

/// Rank of the differential of the chain-spectra constraints at A, evaluated
/// against the coadjoint orbit directions. dim O - jacobian_rank is the
/// constraint-based fiber dimension oracle.
inline int jacobian_rank(const HermitianMatrix& a, double tol = kDefaultClusterTol,
                         double rank_tol = kDefaultRankTol) {
    const int n = a.size();
    const auto algebra = detail::unitary_algebra_basis(n);
    std::vector<CMat> orbit_dirs;
    orbit_dirs.reserve(algebra.size());
    for (const CMat& x : algebra) orbit_dirs.push_back(commutator(x, a.mat()));

    std::vector<detail::LevelSpectralData> levels;
    levels.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) levels.push_back(detail::level_data(a, k, tol));

    const double scale = 1.0 + a.frobenius();
    std::vector<std::vector<double>> rows;

    // Cluster compression constraints U* dA_k U = 0.
    for (int k = 1; k <= n; ++k) {
        const auto& data = levels[static_cast<std::size_t>(k - 1)];
        for (std::size_t c = 0; c < data.clusters.sizes.size(); ++c) {
            const int m = data.clusters.sizes[c];
            const int start = data.clusters.starts[c];
            // Hermitian m x m block functionals: G = U M U* embedded.
            for (int p = 0; p < m; ++p)
                for (int q = p; q < m; ++q)
                    for (int part = 0; part < (p == q ? 1 : 2); ++part) {
                        std::vector<double> row(orbit_dirs.size());
                        for (std::size_t l = 0; l < orbit_dirs.size(); ++l) {
                            const CMat& d = orbit_dirs[l];
                            // u_p* d_k u_q
                            cd val = 0.0;
                            for (int i = 0; i < k; ++i)
                                for (int j = 0; j < k; ++j)
                                    val += std::conj(data.eig.vectors(i, start + p)) * d(i, j) *
                                           data.eig.vectors(j, start + q);
                            row[l] = (p == q) ? val.real() : (part == 0 ? val.real() : val.imag());
                        }
                        rows.push_back(std::move(row));
                    }
        }
    }

    // Tie constraints between consecutive levels.
    for (int k = 1; k < n; ++k) {
        const auto& data = levels[static_cast<std::size_t>(k - 1)];
        const auto& above = levels[static_cast<std::size_t>(k)];
        CMat border(k, 1);
        for (int i = 0; i < k; ++i) border(i, 0) = a(i, k);
        const double eff = tol * (1.0 + std::max(data.eig.values.empty() ? 0.0 : std::abs(data.eig.values[0]),
                                                 std::abs(above.eig.values[0])));
        for (std::size_t c = 0; c < data.clusters.sizes.size(); ++c) {
            const int m = data.clusters.sizes[c];
            const int start = data.clusters.starts[c];
            const double theta = data.eig.values[static_cast<std::size_t>(start)];
            // Multiplicity of theta at level k+1.
            int m_above = 0;
            for (double v : above.eig.values)
                if (std::abs(v - theta) <= eff) ++m_above;
            if (m_above < m) continue; // the cluster sheds one copy; no constraint

            for (int col = start; col < start + m; ++col) {
                std::vector<double> row_re(orbit_dirs.size());
                std::vector<double> row_im(orbit_dirs.size());
                for (std::size_t l = 0; l < orbit_dirs.size(); ++l) {
                    const CMat& d = orbit_dirs[l];
                    // U* db: the border column of the direction.
                    cd val = 0.0;
                    for (int i = 0; i < k; ++i) val += std::conj(data.eig.vectors(i, col)) * d(i, k);
                    val += detail::eigvec_tie_term(data.eig, k, col, theta, start, m, d, border);
                    row_re[l] = val.real();
                    row_im[l] = val.imag();
                }
                rows.push_back(std::move(row_re));
                rows.push_back(std::move(row_im));
            }
        }
    }

    return detail::row_rank(rows, 1e-9 * scale, rank_tol);
}

/// Skew analogue: cluster constraints on the compressed Hermitian blocks of
/// i dA_k, kernel-compression constraints for the zero cluster, and border
/// orthogonality ties for values (or kernel) shared with the next level.
inline int jacobian_rank(const SkewSymmetricMatrix& a, double tol = kDefaultClusterTol,
                         double rank_tol = kDefaultRankTol) {
    const int n = a.size();
    const auto algebra = detail::orthogonal_algebra_basis(n);
    std::vector<RMat> orbit_dirs;
    orbit_dirs.reserve(algebra.size());
    for (const RMat& x : algebra) orbit_dirs.push_back(commutator(x, a.mat()));

    struct SkewLevel {
        EigenDecomposition eig; // of i A_k
        int half = 0;
        int zero = 0;
        detail::Clustering positive;
        std::vector<std::vector<double>> kernel;
    };
    std::vector<SkewLevel> levels;
    for (int k = 2; k <= n; ++k) {
        SkewLevel lv;
        lv.eig = skew_eig(principal_submatrix(a, k));
        lv.half = k / 2;
        std::vector<double> moduli(lv.eig.values.begin(), lv.eig.values.begin() + lv.half);
        double sc = 0.0;
        for (double x : moduli) sc = std::max(sc, std::abs(x));
        const double eff = tol * (1.0 + sc);
        for (auto it = moduli.rbegin(); it != moduli.rend() && std::abs(*it) <= eff; ++it) ++lv.zero;
        std::vector<double> positive(moduli.begin(), moduli.end() - lv.zero);
        lv.positive = detail::cluster_descending(positive, tol);
        lv.kernel = skew_kernel_basis(lv.eig, k, lv.zero);
        levels.push_back(std::move(lv));
    }

    const double scale = 1.0 + a.frobenius();
    std::vector<std::vector<double>> rows;

    const auto level_at = [&](int k) -> const SkewLevel& { return levels[static_cast<std::size_t>(k - 2)]; };

    for (int k = 2; k <= n; ++k) {
        const auto& lv = level_at(k);
        // Positive clusters: U* (i dA_k) U = 0, Hermitian m x m block.
        for (std::size_t c = 0; c < lv.positive.sizes.size(); ++c) {
            const int m = lv.positive.sizes[c];
            const int start = lv.positive.starts[c];
            for (int p = 0; p < m; ++p)
                for (int q = p; q < m; ++q)
                    for (int part = 0; part < (p == q ? 1 : 2); ++part) {
                        std::vector<double> row(orbit_dirs.size());
                        for (std::size_t l = 0; l < orbit_dirs.size(); ++l) {
                            const RMat& d = orbit_dirs[l];
                            cd val = 0.0;
                            for (int i = 0; i < k; ++i)
                                for (int j = 0; j < k; ++j)
                                    val += std::conj(lv.eig.vectors(i, start + p)) * cd(0.0, d(i, j)) *
                                           lv.eig.vectors(j, start + q);
                            row[l] = (p == q) ? val.real() : (part == 0 ? val.real() : val.imag());
                        }
                        rows.push_back(std::move(row));
                    }
        }
        // Zero cluster: R^T dA_k R = 0 (skew block on the kernel).
        const int kb = static_cast<int>(lv.kernel.size());
        for (int p = 0; p < kb; ++p)
            for (int q = p + 1; q < kb; ++q) {
                std::vector<double> row(orbit_dirs.size());
                for (std::size_t l = 0; l < orbit_dirs.size(); ++l) {
                    const RMat& d = orbit_dirs[l];
                    double val = 0.0;
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j)
                            val += lv.kernel[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] * d(i, j) *
                                   lv.kernel[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
                    row[l] = val;
                }
                rows.push_back(std::move(row));
            }
    }

    // Ties between consecutive levels.
    for (int k = 2; k < n; ++k) {
        const auto& lv = level_at(k);
        const auto& up = level_at(k + 1);
        RMat border(k, 1);
        for (int i = 0; i < k; ++i) border(i, 0) = a(i, k);
        const double eff =
            tol * (1.0 + std::max(std::abs(lv.eig.values[0]), std::abs(up.eig.values[0])));

        // Positive-value ties: constraint d(U* b) for clusters whose value
        // persists with at least equal multiplicity above.
        for (std::size_t c = 0; c < lv.positive.sizes.size(); ++c) {
            const int m = lv.positive.sizes[c];
            const int start = lv.positive.starts[c];
            const double theta = lv.eig.values[static_cast<std::size_t>(start)];
            int m_above = 0;
            for (int i = 0; i < up.half; ++i)
                if (std::abs(up.eig.values[static_cast<std::size_t>(i)] - theta) <= eff) ++m_above;
            if (m_above < m) continue;

            CMat cborder(k, 1);
            for (int i = 0; i < k; ++i) cborder(i, 0) = border(i, 0);
            for (int col = start; col < start + m; ++col) {
                std::vector<double> row_re(orbit_dirs.size());
                std::vector<double> row_im(orbit_dirs.size());
                for (std::size_t l = 0; l < orbit_dirs.size(); ++l) {
                    const RMat& rd = orbit_dirs[l];
                    CMat d(k, k);
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j) d(i, j) = cd(0.0, rd(i, j));
                    cd val = 0.0;
                    for (int i = 0; i < k; ++i) val += std::conj(lv.eig.vectors(i, col)) * rd(i, k);
                    val += detail::eigvec_tie_term(lv.eig, k, col, theta, start, m, d, cborder);
                    row_re[l] = val.real();
                    row_im[l] = val.imag();
                }
                rows.push_back(std::move(row_re));
                rows.push_back(std::move(row_im));
            }
        }

        // Kernel tie: the zero multiplicity grows iff the border is orthogonal
        // to the kernel; active when the pattern above keeps all kernel pairs.
        const int kb = static_cast<int>(lv.kernel.size());
        if (kb > 0) {
            const int zb_above = static_cast<int>(up.kernel.size());
            if (zb_above >= kb + 1) {
                for (int p = 0; p < kb; ++p) {
                    std::vector<double> row(orbit_dirs.size());
                    for (std::size_t l = 0; l < orbit_dirs.size(); ++l) {
                        const RMat& d = orbit_dirs[l];
                        // d(R^T b): kernel perturbation term + direct border term.
                        double val = 0.0;
                        for (int i = 0; i < k; ++i)
                            val += lv.kernel[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] * d(i, k);
                        // First-order kernel rotation: project through nonzero modes.
                        for (int lcol = 0; lcol < k; ++lcol) {
                            const double ev = lv.eig.values[static_cast<std::size_t>(lcol)];
                            if (std::abs(ev) <= eff) continue;
                            cd num = 0.0;
                            for (int i = 0; i < k; ++i)
                                for (int j = 0; j < k; ++j)
                                    num += std::conj(lv.eig.vectors(i, lcol)) * cd(0.0, d(i, j)) *
                                           lv.kernel[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                            cd lb = 0.0;
                            for (int i = 0; i < k; ++i) lb += std::conj(lv.eig.vectors(i, lcol)) * border(i, 0);
                            val += (std::conj(num / (0.0 - ev)) * lb).real();
                        }
                        row[l] = val;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    return detail::row_rank(rows, 1e-9 * scale, rank_tol);
}

// ---------------------------------------------------------------------------
// Fiber classification.
// ---------------------------------------------------------------------------

struct FiberLevel {
    int k = 0;
    StratumDescriptor stratum;
    std::string leaf_group;
    int leaf_dim = 0;
    int stabilizer_dim = 0;
    std::optional<std::string> sphere_label;
};

struct FiberReport {
    Spectrum lambda;
    GZPattern pattern;
    std::vector<FiberLevel> levels; // k = n down to 1
    int torus_rank = 0;
    int total_dim = 0;
    int oracle_dim = 0;
    bool consistent = false;
    bool warning = false;
    int tight_inequalities = 0;
    std::uint64_t seed = 0;
    std::string point_digest;
};

inline nlohmann::json to_json(const FiberReport& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : r.levels) {
        nlohmann::json jl{{"k", l.k},
                          {"stratum", to_json(l.stratum)},
                          {"leaf_group", l.leaf_group},
                          {"leaf_dim", l.leaf_dim},
                          {"stabilizer_dim", l.stabilizer_dim}};
        jl["sphere_label"] = l.sphere_label ? nlohmann::json(*l.sphere_label) : nlohmann::json(nullptr);
        levels.push_back(std::move(jl));
    }
    return nlohmann::json{{"lambda", r.lambda.values()},
                          {"pattern", to_json(r.pattern)},
                          {"levels", levels},
                          {"torus_rank", r.torus_rank},
                          {"total_dim", r.total_dim},
                          {"oracle_dim", r.oracle_dim},
                          {"consistent", r.consistent},
                          {"warning", r.warning},
                          {"tight_inequalities", r.tight_inequalities},
                          {"seed", r.seed},
                          {"point_digest", r.point_digest}};
}

/// Coadjoint orbit dimension from the stabilizer of lambda.
inline int orbit_dimension(const Spectrum& lambda, double tol) {
    const auto s = stratum_of(lambda, tol);
    return s.level * s.level - s.dim_levi;
}

inline int orbit_dimension_so(const Spectrum& lambda, int n, double tol) {
    const auto s = stratum_of_so(lambda, n, tol);
    return n * (n - 1) / 2 - s.dim_levi;
}

namespace detail {

inline std::string leaf_group_name(const StratumDescriptor& s) {
    std::string name;
    for (int m : s.multiplicities) {
        if (m < 2) continue;
        if (!name.empty()) name += "x";
        name += "SU(" + std::to_string(m) + ")";
    }
    return name.empty() ? "trivial" : name;
}

inline std::optional<std::string> sphere_label(const StratumDescriptor& s, int leaf) {
    if (leaf == 0) return std::nullopt;
    int blocks = 0, m = 0;
    for (int mult : s.multiplicities)
        if (mult >= 2) {
            ++blocks;
            m = mult;
        }
    if (blocks != 1) return std::nullopt;
    if (leaf == 2 * m - 1) return "S^" + std::to_string(2 * m - 1);
    if (leaf == m * m - 1) return "SU(" + std::to_string(m) + ")";
    return std::nullopt;
}

} // namespace detail

/// Classifies the fiber over a U(n) pattern: builds a representative with
/// seeded random phases, measures per-level leaves and the torus rank, and
/// checks the total against the constraint-rank oracle. A mismatch is retried
/// with fresh phases up to three times (fiber-internal special position)
/// before the report is returned inconsistent.
inline FiberReport classify_fiber(const Spectrum& lambda, const GZPattern& p, std::uint64_t seed,
                                  double tol = kDefaultClusterTol, double rank_tol = kDefaultRankTol) {
    if (p.group != GroupKind::U) throw ArgumentError("classify_fiber: only U patterns are supported");
    p.validate_shape();
    if (p.n != lambda.size()) throw ArgumentError("classify_fiber: pattern size does not match lambda");
    const auto& top = p.rows.back();
    for (int i = 0; i < lambda.size(); ++i)
        if (std::abs(top[static_cast<std::size_t>(i)] - lambda[i]) > 1e-9 * (1.0 + lambda.max_abs()))
            throw ArgumentError("classify_fiber: pattern top row does not match lambda");
    if (!check_interlacing(p, 1e-9).empty()) throw ArgumentError("classify_fiber: pattern violates interlacing");

    const int dim_orbit = orbit_dimension(lambda, tol);

    FiberReport report;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const std::uint64_t attempt_seed = attempt == 0 ? seed : child_seed(seed, static_cast<std::uint64_t>(attempt));
        const HermitianMatrix a = reconstruct_random_phases(p, attempt_seed);

        FiberReport r;
        r.lambda = lambda;
        r.pattern = p;
        r.seed = attempt_seed;
        r.tight_inequalities = count_tight_inequalities(p);
        r.point_digest = fnv1a_digest(to_json(a).dump());

        int leaf_total = 0;
        for (int k = p.n; k >= 1; --k) {
            FiberLevel level;
            level.k = k;
            level.stratum = stratum_of(spectrum_desc(principal_submatrix(a, k)), tol);
            const auto ld = leaf_dim(a, k, tol, rank_tol);
            level.leaf_dim = ld.dim;
            level.stabilizer_dim = level.stratum.dim_levi_commutator - ld.dim;
            level.leaf_group = detail::leaf_group_name(level.stratum);
            level.sphere_label = detail::sphere_label(level.stratum, ld.dim);
            r.warning = r.warning || ld.warning || level.stratum.warning;
            leaf_total += ld.dim;
            r.levels.push_back(std::move(level));
        }

        const auto tangent = fiber_tangent(a, tol, rank_tol);
        r.total_dim = tangent.dim;
        r.torus_rank = tangent.dim - leaf_total;
        r.oracle_dim = dim_orbit - jacobian_rank(a, tol, rank_tol);
        bool sane = r.torus_rank >= 0;
        for (const auto& level : r.levels) sane = sane && level.stabilizer_dim >= 0;
        r.consistent = sane && (r.total_dim == r.oracle_dim);
        report = std::move(r);
        if (report.consistent) break;
    }
    return report;
}

/// Monte Carlo sweep over the pattern polytope: boundary-biased samples,
/// classified concurrently with per-sample seeds from a splitmix stream.
inline std::vector<FiberReport> survey_polytope(const Spectrum& lambda, int samples, std::uint64_t seed,
                                                double tol = kDefaultClusterTol,
                                                double rank_tol = kDefaultRankTol) {
    if (samples <= 0) throw ArgumentError("survey_polytope: samples must be positive");
    std::vector<FiberReport> reports(static_cast<std::size_t>(samples));
    parallel_for_index(samples, [&](int i) {
        const std::uint64_t si = child_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(si);
        const GZPattern p = sample_pattern_boundary_biased(lambda, rng);
        reports[static_cast<std::size_t>(i)] = classify_fiber(lambda, p, child_seed(si, 1), tol, rank_tol);
    });
    return reports;
}

/// Empirical degeneration summary of a survey: the largest torus rank seen
/// per tight-inequality count, and whether it is non-increasing as more
/// inequalities snap to equality. Observational output, never asserted.
struct DegenerationSummary {
    std::map<int, int> max_torus_rank_by_tightness;
    std::map<int, int> report_count_by_tightness;
    bool torus_rank_monotone = true;
};

inline DegenerationSummary summarize_degeneration(const std::vector<FiberReport>& reports) {
    DegenerationSummary s;
    for (const auto& r : reports) {
        auto [it, inserted] = s.max_torus_rank_by_tightness.try_emplace(r.tight_inequalities, r.torus_rank);
        if (!inserted) it->second = std::max(it->second, r.torus_rank);
        ++s.report_count_by_tightness[r.tight_inequalities];
    }
    int prev = std::numeric_limits<int>::max();
    for (const auto& [tight, rank] : s.max_torus_rank_by_tightness) {
        if (rank > prev) s.torus_rank_monotone = false;
        prev = rank;
    }
    return s;
}

inline nlohmann::json to_json(const DegenerationSummary& s) {
    nlohmann::json by_tight = nlohmann::json::object();
    for (const auto& [tight, rank] : s.max_torus_rank_by_tightness)
        by_tight[std::to_string(tight)] =
            nlohmann::json{{"max_torus_rank", rank}, {"reports", s.report_count_by_tightness.at(tight)}};
    return nlohmann::json{{"by_tight_inequalities", by_tight}, {"torus_rank_monotone", s.torus_rank_monotone}};
}

} // namespace gz
