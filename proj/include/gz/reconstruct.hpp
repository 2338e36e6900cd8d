#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "gz/eigen.hpp"
#include "gz/errors.hpp"
#include "gz/matrix.hpp"
#include "gz/pattern.hpp"
#include "gz/rng.hpp"

namespace gz {

namespace detail {

/// Greedy matching of equal values between two descending lists (two-pointer
/// multiset intersection with tolerance). Returns, per lower-list index, the
/// matched upper-list index or -1.
inline std::vector<int> match_equal_values(const std::vector<double>& lo, const std::vector<double>& hi,
                                           double match_tol) {
    std::vector<int> match(lo.size(), -1);
    std::size_t j = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        while (j < hi.size() && hi[j] > lo[i] + match_tol) ++j;
        if (j < hi.size() && std::abs(hi[j] - lo[i]) <= match_tol) {
            match[i] = static_cast<int>(j);
            ++j;
        }
    }
    return match;
}

} // namespace detail

/// Inverse of the pattern map for U(n), built level by level. Given the
/// spectra of A_k and A_{k+1}, the border column in the eigenbasis of A_k has
/// squared moduli
///
///   |w_i|^2 = - prod_j (l^k_i - l^{k+1}_j) / prod_{j != i} (l^k_i - l^k_j)
///
/// and corner c = sum l^{k+1} - sum l^k. Values shared between consecutive
/// rows are deflated first (matched pairs removed, w_i = 0), which keeps the
/// products well conditioned for degenerate patterns. Phase angles (row k has
/// k of them, default zero) multiply the border entries and parametrize the
/// fiber over the pattern.
inline HermitianMatrix reconstruct(const GZPattern& p, const std::vector<std::vector<double>>& phases = {},
                                   double tol = 1e-9) {
    if (p.group != GroupKind::U) throw ArgumentError("reconstruct: only U patterns are supported");
    p.validate_shape();
    if (!check_interlacing(p, tol).empty()) throw ArgumentError("reconstruct: pattern violates interlacing");
    if (!phases.empty()) {
        if (static_cast<int>(phases.size()) != p.n - 1) throw ArgumentError("reconstruct: need n-1 phase rows");
        for (int k = 1; k < p.n; ++k)
            if (static_cast<int>(phases[static_cast<std::size_t>(k - 1)].size()) != k)
                throw ArgumentError("reconstruct: phase row " + std::to_string(k) + " must have length " +
                                    std::to_string(k));
    }

    const double match_tol = tol * (1.0 + p.max_abs());

    CMat a(1, 1);
    a(0, 0) = p.row(1)[0];

    for (int k = 1; k < p.n; ++k) {
        const auto& lo = p.row(k);
        const auto& hi = p.row(k + 1);
        const auto eig = hermitian_eig(HermitianMatrix(a));
        const auto match = detail::match_equal_values(lo, hi, match_tol);

        // Border moduli in the eigenbasis of A_k, deflated positions zero.
        std::vector<double> w(static_cast<std::size_t>(k), 0.0);
        for (int i = 0; i < k; ++i) {
            if (match[static_cast<std::size_t>(i)] >= 0) continue;
            double num = 1.0;
            for (int j = 0; j < k + 1; ++j) {
                bool deflated = false;
                for (int i2 = 0; i2 < k; ++i2)
                    if (match[static_cast<std::size_t>(i2)] == j) deflated = true;
                if (!deflated) num *= lo[static_cast<std::size_t>(i)] - hi[static_cast<std::size_t>(j)];
            }
            double den = 1.0;
            for (int j = 0; j < k; ++j)
                if (j != i && match[static_cast<std::size_t>(j)] < 0)
                    den *= lo[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(j)];
            const double w2 = -num / den;
            if (w2 < -1e-10)
                throw NumericalError("reconstruct: negative border modulus " + std::to_string(w2) + " at level " +
                                     std::to_string(k));
            w[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, w2));
        }

        double corner = 0.0;
        for (double v : hi) corner += v;
        for (double v : lo) corner -= v;

        // Border in the standard basis: b = V (e^{i theta} . w).
        CMat wv(k, 1);
        for (int i = 0; i < k; ++i) {
            cd ph(1.0, 0.0);
            if (!phases.empty()) {
                const double t = phases[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
                ph = cd(std::cos(t), std::sin(t));
            }
            wv(i, 0) = ph * w[static_cast<std::size_t>(i)];
        }
        const CMat b = eig.vectors * wv;

        CMat next(k + 1, k + 1);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) next(i, j) = a(i, j);
        for (int i = 0; i < k; ++i) {
            next(i, k) = b(i, 0);
            next(k, i) = std::conj(b(i, 0));
        }
        next(k, k) = corner;
        a = std::move(next);
    }
    return HermitianMatrix(std::move(a));
}

/// Reconstruction with seeded uniform random phases, used to place fiber
/// representatives in general position.
inline HermitianMatrix reconstruct_random_phases(const GZPattern& p, std::uint64_t seed, double tol = 1e-9) {
    Rng rng(seed);
    std::vector<std::vector<double>> phases;
    for (int k = 1; k < p.n; ++k) {
        std::vector<double> row(static_cast<std::size_t>(k));
        for (double& t : row) t = rng.uniform() * 2.0 * 3.14159265358979323846;
        phases.push_back(std::move(row));
    }
    return reconstruct(p, phases, tol);
}

} // namespace gz
