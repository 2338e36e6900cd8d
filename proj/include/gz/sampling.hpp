#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "gz/eigen.hpp"
#include "gz/errors.hpp"
#include "gz/matrix.hpp"
#include "gz/rng.hpp"

namespace gz {

namespace detail {

// Two-pass modified Gram-Schmidt. R is forced to have a positive real
// diagonal, which pins the QR factorization uniquely and makes Q of a
// Ginibre matrix Haar-distributed.
inline void orthonormalize_columns(CMat& q) {
    const int n = q.rows();
    for (int j = 0; j < q.cols(); ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                cd proj = 0.0;
                for (int i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
                for (int i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(q(i, j));
        norm = std::sqrt(norm);
        if (norm <= 1e-300) throw NumericalError("orthonormalize_columns: rank-deficient Gaussian draw");
        for (int i = 0; i < n; ++i) q(i, j) /= norm;
    }
}

inline void orthonormalize_columns(RMat& q) {
    const int n = q.rows();
    for (int j = 0; j < q.cols(); ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                double proj = 0.0;
                for (int i = 0; i < n; ++i) proj += q(i, k) * q(i, j);
                for (int i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
        norm = std::sqrt(norm);
        if (norm <= 1e-300) throw NumericalError("orthonormalize_columns: rank-deficient Gaussian draw");
        for (int i = 0; i < n; ++i) q(i, j) /= norm;
    }
}

inline double det_sign(RMat m) {
    const int n = m.rows();
    double sign = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
        if (m(piv, c) == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            sign = -sign;
        }
        if (m(c, c) < 0.0) sign = -sign;
        for (int r = c + 1; r < n; ++r) {
            const double f = m(r, c) / m(c, c);
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return sign;
}

} // namespace detail

/// Haar-distributed unitary, QR of a complex Ginibre matrix.
inline CMat haar_unitary(int n, Rng& rng) {
    CMat g(n, n);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = cd(s * re, s * im);
        }
    detail::orthonormalize_columns(g);
    return g;
}

/// Haar-distributed special orthogonal matrix. A Haar O(n) draw is mapped
/// into SO(n) by flipping the last column; right translation by a fixed
/// element preserves Haar measure.
inline RMat haar_special_orthogonal(int n, Rng& rng) {
    RMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
    detail::orthonormalize_columns(g);
    if (detail::det_sign(g) < 0.0)
        for (int i = 0; i < n; ++i) g(i, n - 1) = -g(i, n - 1);
    return g;
}

/// Seeded point of the U(n) coadjoint orbit with spectrum lambda.
inline HermitianMatrix sample_orbit_point(const Spectrum& lambda, std::uint64_t seed) {
    const int n = lambda.size();
    if (n < 1) throw ArgumentError("sample_orbit_point: empty spectrum");
    Rng rng(seed);
    const CMat q = haar_unitary(n, rng);
    CMat d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = lambda[i];
    return HermitianMatrix(q * d * q.adjoint());
}

/// Seeded point of the SO(n) coadjoint orbit with moduli lambda
/// (length floor(n/2)).
inline SkewSymmetricMatrix sample_orbit_point_so(const Spectrum& lambda, int n, std::uint64_t seed) {
    if (lambda.size() != n / 2) throw ArgumentError("sample_orbit_point_so: lambda must have floor(n/2) entries");
    for (int i = 0; i < lambda.size(); ++i)
        if (lambda[i] < 0.0) throw ArgumentError("sample_orbit_point_so: moduli must be nonnegative");
    Rng rng(seed);
    const RMat q = haar_special_orthogonal(n, rng);
    const SkewSymmetricMatrix canon = SkewSymmetricMatrix::canonical(lambda.values(), n);
    return SkewSymmetricMatrix(q * canon.mat() * q.transpose());
}

/// Gaussian Hermitian matrix (GUE-type scaling), for sweeps over generic input.
inline HermitianMatrix sample_gaussian_hermitian(int n, Rng& rng) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = rng.normal();
        for (int j = i + 1; j < n; ++j) {
            const cd z(rng.normal() / std::sqrt(2.0), rng.normal() / std::sqrt(2.0));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return HermitianMatrix(std::move(m));
}

inline SkewSymmetricMatrix sample_gaussian_skew(int n, Rng& rng) {
    RMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double x = rng.normal();
            m(i, j) = x;
            m(j, i) = -x;
        }
    return SkewSymmetricMatrix(std::move(m));
}

} // namespace gz
