#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gz/eigen.hpp"
#include "gz/errors.hpp"
#include "gz/matrix.hpp"
#include "gz/rng.hpp"

namespace gz {

/// Triangular array of principal-submatrix spectra. Rows are stored ascending
/// by level: for U, rows k = 1..n of length k; for SO, rows k = 2..n of
/// length floor(k/2). Every row is sorted descending.
struct GZPattern {
    GroupKind group = GroupKind::U;
    int n = 0;
    std::vector<std::vector<double>> rows;

    int first_level() const { return group == GroupKind::U ? 1 : 2; }

    static int row_length(GroupKind g, int k) { return g == GroupKind::U ? k : k / 2; }

    const std::vector<double>& row(int k) const { return rows[static_cast<std::size_t>(k - first_level())]; }
    std::vector<double>& row(int k) { return rows[static_cast<std::size_t>(k - first_level())]; }

    Spectrum top_row() const { return Spectrum(rows.back()); }

    double max_abs() const {
        double m = 0.0;
        for (const auto& r : rows)
            for (double v : r) m = std::max(m, std::abs(v));
        return m;
    }

    int entry_count() const {
        int c = 0;
        for (const auto& r : rows) c += static_cast<int>(r.size());
        return c;
    }

    void validate_shape() const {
        if (n < 1) throw ArgumentError("pattern: size must be positive");
        const int first = first_level();
        if (static_cast<int>(rows.size()) != n - first + 1) throw ArgumentError("pattern: wrong number of rows");
        for (int k = first; k <= n; ++k)
            if (static_cast<int>(row(k).size()) != row_length(group, k))
                throw ArgumentError("pattern: row " + std::to_string(k) + " has wrong length");
    }
};

inline nlohmann::json to_json(const GZPattern& p) {
    return nlohmann::json{{"group", to_string(p.group)}, {"n", p.n}, {"rows", p.rows}};
}

inline GZPattern pattern_from_json(const nlohmann::json& j) {
    GZPattern p;
    if (j.is_array()) {
        // Bare rows array: U group, n = number of rows.
        p.group = GroupKind::U;
        p.rows = j.get<std::vector<std::vector<double>>>();
        p.n = static_cast<int>(p.rows.size());
    } else {
        p.group = group_from_string(j.value("group", "U"));
        p.n = j.value("n", 0);
        if (!j.contains("rows")) throw ValidationError("pattern JSON missing 'rows'");
        p.rows = j.at("rows").get<std::vector<std::vector<double>>>();
        if (p.n == 0 && p.group == GroupKind::U) p.n = static_cast<int>(p.rows.size());
    }
    p.validate_shape();
    return p;
}

/// Gelfand-Zeitlin map: row k is the descending spectrum (U) or descending
/// modulus list (SO) of the level-k principal submatrix.
inline GZPattern gz_map(const HermitianMatrix& a) {
    GZPattern p;
    p.group = GroupKind::U;
    p.n = a.size();
    for (int k = 1; k <= p.n; ++k) p.rows.push_back(spectrum_desc(principal_submatrix(a, k)).values());
    return p;
}

inline GZPattern gz_map(const SkewSymmetricMatrix& a) {
    GZPattern p;
    p.group = GroupKind::SO;
    p.n = a.size();
    for (int k = 2; k <= p.n; ++k) p.rows.push_back(skew_spectrum(principal_submatrix(a, k)).values());
    return p;
}

// ---------------------------------------------------------------------------
// Interlacing. U: lambda^{k+1}_i >= lambda^k_i >= lambda^{k+1}_{i+1}.
// SO: the same on moduli with entries beyond a row's length read as 0, which
// also forces nonnegativity.
// ---------------------------------------------------------------------------

struct InterlacingViolation {
    int level = 0; // the shorter row k of the violated pair (k, k+1)
    int index = 0; // 1-based entry index within row k
    bool upper = false;
    double amount = 0.0;

    std::string describe() const {
        std::ostringstream os;
        os << "row " << level << " entry " << index << (upper ? " exceeds" : " undercuts")
           << " its row-" << (level + 1) << " bound by " << amount;
        return os.str();
    }
};

inline nlohmann::json to_json(const InterlacingViolation& v) {
    return nlohmann::json{
        {"level", v.level}, {"index", v.index}, {"side", v.upper ? "upper" : "lower"}, {"amount", v.amount}};
}

/// All interlacing violations beyond tol; empty means the pattern is valid.
/// Row sortedness below the top is implied by the between-row inequalities;
/// the top row's ordering is checked directly.
inline std::vector<InterlacingViolation> check_interlacing(const GZPattern& p, double tol) {
    p.validate_shape();
    std::vector<InterlacingViolation> out;
    const bool so = p.group == GroupKind::SO;
    {
        const auto& top = p.row(p.n);
        for (int i = 0; i + 1 < static_cast<int>(top.size()); ++i)
            if (top[static_cast<std::size_t>(i + 1)] - top[static_cast<std::size_t>(i)] > tol)
                out.push_back({p.n, i + 1, true, top[static_cast<std::size_t>(i + 1)] - top[static_cast<std::size_t>(i)]});
    }
    for (int k = p.first_level(); k < p.n; ++k) {
        const auto& lo = p.row(k);
        const auto& hi = p.row(k + 1);
        for (int i = 0; i < static_cast<int>(lo.size()); ++i) {
            const double upper = hi[static_cast<std::size_t>(i)];
            const double lower = (i + 1 < static_cast<int>(hi.size())) ? hi[static_cast<std::size_t>(i + 1)]
                                 : so                                  ? 0.0
                                                                       : -std::numeric_limits<double>::infinity();
            const double v = lo[static_cast<std::size_t>(i)];
            if (v - upper > tol) out.push_back({k, i + 1, true, v - upper});
            if (lower - v > tol) out.push_back({k, i + 1, false, lower - v});
        }
    }
    if (so) {
        // Top-row nonnegativity is part of the SO pattern type.
        const auto& top = p.row(p.n);
        for (int i = 0; i < static_cast<int>(top.size()); ++i)
            if (-top[static_cast<std::size_t>(i)] > tol) out.push_back({p.n, i + 1, false, -top[static_cast<std::size_t>(i)]});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polytope presentation: the image of the orbit under the pattern map is cut
// out by the interlacing inequalities with the top row pinned. Free entries
// (all rows below the top) are indexed flat, ascending by level.
// ---------------------------------------------------------------------------

struct PolytopeInequality {
    std::map<int, double> coeffs; // free-entry index -> weight
    double constant = 0.0;        // inequality: sum coeffs*x + constant >= 0
};

struct PolytopeSpec {
    Spectrum lambda;
    GroupKind group = GroupKind::U;
    int n = 0;
    std::vector<PolytopeInequality> inequalities;
};

/// Flat index of entry i (0-based) of row k among the free entries.
inline int pattern_entry_index(GroupKind group, int k, int i) {
    int idx = 0;
    for (int j = (group == GroupKind::U ? 1 : 2); j < k; ++j) idx += GZPattern::row_length(group, j);
    return idx + i;
}

inline PolytopeSpec polytope_spec(const Spectrum& lambda, GroupKind group, int n = 0) {
    PolytopeSpec spec;
    spec.lambda = lambda;
    spec.group = group;
    spec.n = group == GroupKind::U ? lambda.size() : n;
    if (group == GroupKind::SO && lambda.size() != spec.n / 2)
        throw ArgumentError("polytope_spec: SO lambda must have floor(n/2) entries");

    const int first = group == GroupKind::U ? 1 : 2;
    for (int k = first; k < spec.n; ++k) {
        const int len = GZPattern::row_length(group, k);
        const int len_hi = GZPattern::row_length(group, k + 1);
        for (int i = 0; i < len; ++i) {
            // upper: x^{k+1}_i - x^k_i >= 0
            PolytopeInequality up;
            up.coeffs[pattern_entry_index(group, k, i)] = -1.0;
            if (k + 1 == spec.n)
                up.constant += lambda[i];
            else
                up.coeffs[pattern_entry_index(group, k + 1, i)] += 1.0;
            spec.inequalities.push_back(std::move(up));

            // lower: x^k_i - x^{k+1}_{i+1} >= 0 (0 beyond the row for SO)
            PolytopeInequality lo;
            lo.coeffs[pattern_entry_index(group, k, i)] = 1.0;
            if (i + 1 < len_hi) {
                if (k + 1 == spec.n)
                    lo.constant -= lambda[i + 1];
                else
                    lo.coeffs[pattern_entry_index(group, k + 1, i + 1)] += -1.0;
            }
            spec.inequalities.push_back(std::move(lo));
        }
    }
    return spec;
}

inline nlohmann::json to_json(const PolytopeSpec& s) {
    nlohmann::json ineqs = nlohmann::json::array();
    for (const auto& q : s.inequalities) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [idx, w] : q.coeffs) coeffs[std::to_string(idx)] = w;
        ineqs.push_back(nlohmann::json{{"coeffs", coeffs}, {"const", q.constant}});
    }
    return nlohmann::json{
        {"lambda", s.lambda.values()}, {"group", to_string(s.group)}, {"n", s.n}, {"inequalities", ineqs}};
}

/// Smallest inequality margin of a pattern's free entries against the spec
/// (negative means violated by that amount).
inline double membership_margin(const PolytopeSpec& spec, const GZPattern& p) {
    p.validate_shape();
    std::vector<double> flat;
    for (int k = p.first_level(); k < p.n; ++k)
        for (double v : p.row(k)) flat.push_back(v);
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& q : spec.inequalities) {
        double s = q.constant;
        for (const auto& [idx, w] : q.coeffs) s += w * flat[static_cast<std::size_t>(idx)];
        margin = std::min(margin, s);
    }
    return margin;
}

// ---------------------------------------------------------------------------
// Pattern sampling. Rows are filled top-down; each entry is uniform on the
// interval its row-above neighbours allow, so the result satisfies the weak
// interlacing inequalities by construction. The boundary-biased variant
// snaps a random subset of entries to interval endpoints to reach polytope
// faces with positive probability.
// ---------------------------------------------------------------------------

namespace detail {

inline void fill_rows_down(GZPattern& p, Rng& rng, bool boundary_biased) {
    const bool so = p.group == GroupKind::SO;
    for (int k = p.n - 1; k >= p.first_level(); --k) {
        const auto& hi = p.row(k + 1);
        auto& lo = p.row(k);
        for (int i = 0; i < static_cast<int>(lo.size()); ++i) {
            const double upper = hi[static_cast<std::size_t>(i)];
            const double lower = (i + 1 < static_cast<int>(hi.size())) ? hi[static_cast<std::size_t>(i + 1)]
                                 : so                                  ? 0.0
                                                                       : upper; // unreachable for U (row lengths)
            double v;
            if (boundary_biased && rng.coin()) {
                v = rng.coin() ? upper : lower;
            } else {
                v = rng.uniform(lower, upper);
            }
            lo[static_cast<std::size_t>(i)] = v;
        }
    }
}

} // namespace detail

/// Uniform-by-rows pattern sample with the top row pinned to lambda.
inline GZPattern sample_pattern(const Spectrum& lambda, std::uint64_t seed, GroupKind group = GroupKind::U,
                                int n = 0) {
    GZPattern p;
    p.group = group;
    p.n = group == GroupKind::U ? lambda.size() : n;
    if (group == GroupKind::SO && lambda.size() != p.n / 2)
        throw ArgumentError("sample_pattern: SO lambda must have floor(n/2) entries");
    for (int k = p.first_level(); k <= p.n; ++k)
        p.rows.push_back(std::vector<double>(static_cast<std::size_t>(GZPattern::row_length(group, k))));
    p.row(p.n) = lambda.values();
    Rng rng(seed);
    detail::fill_rows_down(p, rng, false);
    return p;
}

/// Sample with probability-1/2 endpoint snapping per entry (used by surveys
/// to cover degenerate strata).
inline GZPattern sample_pattern_boundary_biased(const Spectrum& lambda, Rng& rng, GroupKind group = GroupKind::U,
                                                int n = 0) {
    GZPattern p;
    p.group = group;
    p.n = group == GroupKind::U ? lambda.size() : n;
    if (group == GroupKind::SO && lambda.size() != p.n / 2)
        throw ArgumentError("sample_pattern_boundary_biased: SO lambda must have floor(n/2) entries");
    for (int k = p.first_level(); k <= p.n; ++k)
        p.rows.push_back(std::vector<double>(static_cast<std::size_t>(GZPattern::row_length(group, k))));
    p.row(p.n) = lambda.values();
    const bool biased = rng.coin();
    detail::fill_rows_down(p, rng, biased);
    return p;
}

/// Number of interlacing inequalities a pattern meets with equality (exact
/// ties, as produced by endpoint snapping).
inline int count_tight_inequalities(const GZPattern& p) {
    int tight = 0;
    const bool so = p.group == GroupKind::SO;
    for (int k = p.first_level(); k < p.n; ++k) {
        const auto& lo = p.row(k);
        const auto& hi = p.row(k + 1);
        for (int i = 0; i < static_cast<int>(lo.size()); ++i) {
            const double upper = hi[static_cast<std::size_t>(i)];
            const double lower = (i + 1 < static_cast<int>(hi.size())) ? hi[static_cast<std::size_t>(i + 1)]
                                 : so                                  ? 0.0
                                                                       : std::numeric_limits<double>::lowest();
            if (lo[static_cast<std::size_t>(i)] == upper) ++tight;
            if (lo[static_cast<std::size_t>(i)] == lower) ++tight;
        }
    }
    return tight;
}

/// Strict interlacing relative to the cluster tolerance (no near-ties).
inline bool strictly_interlacing(const GZPattern& p, double tol) {
    const double eff = tol * (1.0 + p.max_abs());
    const bool so = p.group == GroupKind::SO;
    for (int k = p.first_level(); k < p.n; ++k) {
        const auto& lo = p.row(k);
        const auto& hi = p.row(k + 1);
        for (int i = 0; i < static_cast<int>(lo.size()); ++i) {
            const double upper = hi[static_cast<std::size_t>(i)];
            if (upper - lo[static_cast<std::size_t>(i)] <= eff) return false;
            if (i + 1 < static_cast<int>(hi.size())) {
                if (lo[static_cast<std::size_t>(i)] - hi[static_cast<std::size_t>(i + 1)] <= eff) return false;
            } else if (so && lo[static_cast<std::size_t>(i)] <= eff) {
                return false;
            }
        }
    }
    return true;
}

} // namespace gz
