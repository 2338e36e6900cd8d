#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gz/errors.hpp"
#include "gz/matrix.hpp"

namespace gz {

/// Eigendecomposition A = V diag(values) V*, eigenvalues sorted descending.
/// Columns of V are the eigenvectors in matching order.
struct EigenDecomposition {
    std::vector<double> values;
    CMat vectors;

    Spectrum spectrum() const { return Spectrum(values); }
};

// ---------------------------------------------------------------------------
// Cyclic Jacobi for complex Hermitian matrices.
//
// Fixed row-cyclic pivot order and a fixed eigenvector phase convention
// (largest-modulus component real positive) make the decomposition a pure
// function of the input bits, which the whole library relies on for
// reproducibility. Quadratic convergence makes ~10 sweeps plenty at desk
// scale; we cap generously and fail loudly rather than return garbage.
// ---------------------------------------------------------------------------

inline EigenDecomposition hermitian_eig(const HermitianMatrix& a) {
    const int n = a.size();
    CMat h = a.mat();
    CMat v = CMat::identity(n);

    const double scale = std::max(1.0, h.frobenius());
    const double stop = 1e-15 * scale;
    const int max_sweeps = 80;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(h(p, q));
        off = std::sqrt(2.0 * off);
        if (off <= stop) break;
        if (sweep == max_sweeps - 1)
            throw NumericalError("hermitian_eig: Jacobi sweeps did not converge");

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cd apq = h(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;

                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const cd phase = apq / mag;

                // Real rotation angle for [[app, mag],[mag, aqq]].
                const double tau = (aqq - app) / (2.0 * mag);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cd s = phase * (t * c);

                // A <- J* A J with J = [[c, s],[-conj(s), c]] on (p,q).
                for (int i = 0; i < n; ++i) {
                    const cd hip = h(i, p);
                    const cd hiq = h(i, q);
                    h(i, p) = c * hip - std::conj(s) * hiq;
                    h(i, q) = s * hip + c * hiq;
                }
                for (int j = 0; j < n; ++j) {
                    const cd hpj = h(p, j);
                    const cd hqj = h(q, j);
                    h(p, j) = c * hpj - s * hqj;
                    h(q, j) = std::conj(s) * hpj + c * hqj;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = cd(h(p, p).real(), 0.0);
                h(q, q) = cd(h(q, q).real(), 0.0);

                for (int i = 0; i < n; ++i) {
                    const cd vip = v(i, p);
                    const cd viq = v(i, q);
                    v(i, p) = c * vip - std::conj(s) * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    EigenDecomposition out;
    out.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = h(i, i).real();

    // Sort descending; stable on ties so exactly-diagonal input keeps its order.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return out.values[static_cast<std::size_t>(x)] > out.values[static_cast<std::size_t>(y)];
    });

    std::vector<double> sorted(static_cast<std::size_t>(n));
    CMat w(n, n);
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        sorted[static_cast<std::size_t>(j)] = out.values[static_cast<std::size_t>(src)];
        for (int i = 0; i < n; ++i) w(i, j) = v(i, src);
    }

    // Phase convention: largest-modulus component real positive.
    for (int j = 0; j < n; ++j) {
        int best = 0;
        double best_mag = 0.0;
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(w(i, j));
            if (m > best_mag) {
                best_mag = m;
                best = i;
            }
        }
        if (best_mag > 0.0) {
            const cd ph = std::conj(w(best, j) / best_mag);
            for (int i = 0; i < n; ++i) w(i, j) *= ph;
            w(best, j) = cd(std::abs(w(best, j)), 0.0);
        }
    }

    out.values = std::move(sorted);
    out.vectors = std::move(w);
    return out;
}

/// Eigenvalues only, as a Spectrum.
inline Spectrum spectrum_desc(const HermitianMatrix& a) { return hermitian_eig(a).spectrum(); }

// ---------------------------------------------------------------------------
// Skew-symmetric spectra. For real skew A the matrix iA is Hermitian with
// spectrum {±b_j} (plus a forced 0 for odd n); the nonnegative moduli are the
// top floor(n/2) eigenvalues of iA in descending order.
// ---------------------------------------------------------------------------

inline HermitianMatrix hermitian_from_skew(const SkewSymmetricMatrix& a) {
    const int n = a.size();
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cd(0.0, a(i, j));
    return HermitianMatrix(std::move(m));
}

inline Spectrum skew_spectrum(const SkewSymmetricMatrix& a) {
    const auto eig = hermitian_eig(hermitian_from_skew(a));
    const int m = a.size() / 2;
    std::vector<double> b(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] = std::max(0.0, eig.values[static_cast<std::size_t>(i)]);
    return Spectrum(std::move(b));
}

/// Full decomposition of iA for callers that need frames (canonical pairs,
/// stabilizer bases, gradients). values[i] are the eigenvalues of iA in
/// descending order: +moduli first, then (odd n) zero, then -moduli.
inline EigenDecomposition skew_eig(const SkewSymmetricMatrix& a) { return hermitian_eig(hermitian_from_skew(a)); }

// ---------------------------------------------------------------------------
// One-sided Jacobi SVD, singular values only. Works on the columns of a real
// matrix; accuracy of small singular values is eps * sigma_max, which is what
// the rank thresholds in this library assume (a Gram-matrix route would lose
// half the digits and misclassify ranks near the 1e-8 threshold).
// ---------------------------------------------------------------------------

inline std::vector<double> singular_values(RMat m) {
    if (m.rows() < m.cols()) m = m.transpose();
    const int rows = m.rows();
    const int cols = m.cols();
    if (cols == 0) return {};

    // The skip threshold must sit above dot-product rounding noise
    // (~rows * eps relative) and columns far below the global scale must be
    // left alone, or noise-level pairs cycle forever.
    const double skip_tol = std::max(64.0, static_cast<double>(rows)) * 2.3e-16;
    double scale2 = 0.0;
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int r = 0; r < rows; ++r) s += m(r, j) * m(r, j);
        scale2 = std::max(scale2, s);
    }
    const double floor2 = 1e-28 * scale2;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < cols - 1; ++i) {
            for (int j = i + 1; j < cols; ++j) {
                double aa = 0.0, bb = 0.0, ab = 0.0;
                for (int r = 0; r < rows; ++r) {
                    const double x = m(r, i), y = m(r, j);
                    aa += x * x;
                    bb += y * y;
                    ab += x * y;
                }
                if (aa <= floor2 || bb <= floor2) continue;
                if (std::abs(ab) <= skip_tol * std::sqrt(aa * bb)) continue;
                rotated = true;
                const double tau = (bb - aa) / (2.0 * ab);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < rows; ++r) {
                    const double x = m(r, i), y = m(r, j);
                    m(r, i) = c * x - s * y;
                    m(r, j) = s * x + c * y;
                }
            }
        }
        if (!rotated) break;
        if (sweep == max_sweeps - 1) throw NumericalError("singular_values: Jacobi sweeps did not converge");
    }

    std::vector<double> sv(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int r = 0; r < rows; ++r) s += m(r, j) * m(r, j);
        sv[static_cast<std::size_t>(j)] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

/// Numerical rank: singular values above rank_tol * (sigma_max + 1).
inline int numerical_rank(const RMat& m, double rank_tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const auto sv = singular_values(m);
    if (sv.empty()) return 0;
    const double thresh = rank_tol * (sv.front() + 1.0);
    int r = 0;
    for (double s : sv)
        if (s > thresh) ++r;
    return r;
}

// ---------------------------------------------------------------------------
// Frobenius-isometric real flattenings. Ranks and singular values of families
// of Hermitian / skew directions are computed on these coordinates.
// ---------------------------------------------------------------------------

inline int hermitian_flat_dim(int n) { return n * n; }
inline int skew_flat_dim(int n) { return n * (n - 1) / 2; }

inline void flatten_into(const HermitianMatrix& h, RMat& out, int col) {
    const int n = h.size();
    const double r2 = std::sqrt(2.0);
    int r = 0;
    for (int i = 0; i < n; ++i) out(r++, col) = h(i, i).real();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out(r++, col) = r2 * h(i, j).real();
            out(r++, col) = r2 * h(i, j).imag();
        }
}

inline void flatten_into(const SkewSymmetricMatrix& s, RMat& out, int col) {
    const int n = s.size();
    const double r2 = std::sqrt(2.0);
    int r = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out(r++, col) = r2 * s(i, j);
}

/// Rank of a family of Hermitian directions.
inline int direction_rank(const std::vector<HermitianMatrix>& dirs, double rank_tol) {
    if (dirs.empty()) return 0;
    const int n = dirs.front().size();
    RMat m(hermitian_flat_dim(n), static_cast<int>(dirs.size()));
    for (int c = 0; c < static_cast<int>(dirs.size()); ++c) flatten_into(dirs[static_cast<std::size_t>(c)], m, c);
    return numerical_rank(m, rank_tol);
}

inline int direction_rank(const std::vector<SkewSymmetricMatrix>& dirs, double rank_tol) {
    if (dirs.empty()) return 0;
    const int n = dirs.front().size();
    RMat m(skew_flat_dim(n), static_cast<int>(dirs.size()));
    for (int c = 0; c < static_cast<int>(dirs.size()); ++c) flatten_into(dirs[static_cast<std::size_t>(c)], m, c);
    return numerical_rank(m, rank_tol);
}

} // namespace gz
