#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gz/chamber.hpp"
#include "gz/eigen.hpp"
#include "gz/errors.hpp"
#include "gz/matrix.hpp"

namespace gz {

constexpr double kDefaultFdStep = 1e-5;
constexpr double kEigGapGuard = 1e-8;

/// Smooth function on the ambient dual space, optionally with an analytic
/// gradient (with respect to the trace pairing). When no gradient is given,
/// central finite differences over an orthonormal basis are used.
template <class M>
struct ScalarField {
    std::string label;
    std::function<double(const M&)> eval;
    std::function<M(const M&)> grad; // may be empty
};

// ---------------------------------------------------------------------------
// Ambient space traits. Everything downstream (gradients, brackets, flows)
// is written once against these:
//   dim(n)            real dimension of the space at size n
//   basis_element     orthonormal basis w.r.t. the pairing
//   pairing(a, b)     trace pairing (real)
//   ham_dir(g, a)     Hamiltonian direction of gradient g at point a
// The u(n) pairing is tr(AB); the so(n) pairing is tr(A^T B). Hamiltonian
// directions are i[g, a] resp. [g, a], the Lax forms of Hamilton's equation.
// ---------------------------------------------------------------------------

template <class M>
struct Ambient;

template <>
struct Ambient<HermitianMatrix> {
    static constexpr GroupKind group = GroupKind::U;

    static int dim(int n) { return n * n; }

    static HermitianMatrix basis_element(int n, int idx) {
        CMat m(n, n);
        if (idx < n) {
            m(idx, idx) = 1.0;
        } else {
            const double r = 1.0 / std::sqrt(2.0);
            int rem = idx - n;
            const int pair = rem / 2;
            const bool imag = (rem % 2) != 0;
            int count = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++count)
                    if (count == pair) {
                        if (imag) {
                            m(i, j) = cd(0.0, r);
                            m(j, i) = cd(0.0, -r);
                        } else {
                            m(i, j) = r;
                            m(j, i) = r;
                        }
                    }
        }
        return HermitianMatrix(std::move(m));
    }

    static double pairing(const HermitianMatrix& a, const HermitianMatrix& b) {
        return trace(a.mat() * b.mat()).real();
    }

    static HermitianMatrix ham_dir(const HermitianMatrix& g, const HermitianMatrix& a) {
        return HermitianMatrix(cd(0.0, 1.0) * commutator(g.mat(), a.mat()));
    }
};

template <>
struct Ambient<SkewSymmetricMatrix> {
    static constexpr GroupKind group = GroupKind::SO;

    static int dim(int n) { return n * (n - 1) / 2; }

    static SkewSymmetricMatrix basis_element(int n, int idx) {
        RMat m(n, n);
        const double r = 1.0 / std::sqrt(2.0);
        int count = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++count)
                if (count == idx) {
                    m(i, j) = r;
                    m(j, i) = -r;
                }
        return SkewSymmetricMatrix(std::move(m));
    }

    static double pairing(const SkewSymmetricMatrix& a, const SkewSymmetricMatrix& b) {
        return trace(a.mat().transpose() * b.mat());
    }

    static SkewSymmetricMatrix ham_dir(const SkewSymmetricMatrix& g, const SkewSymmetricMatrix& a) {
        return SkewSymmetricMatrix(commutator(g.mat(), a.mat()));
    }
};

namespace detail {

template <class M>
M axpy(const M& a, double t, const M& b) {
    auto m = a.mat();
    auto bm = b.mat();
    bm *= t;
    m += bm;
    return M(std::move(m));
}

} // namespace detail

/// Gradient of f at A: the analytic gradient when present, otherwise central
/// differences over the orthonormal ambient basis with step scaled by the
/// norm of A.
template <class M>
M gradient(const ScalarField<M>& f, const M& a, double step = kDefaultFdStep) {
    if (f.grad) return f.grad(a);
    const int n = a.size();
    const double h = step * (1.0 + a.frobenius());
    const int dim = Ambient<M>::dim(n);
    M g(n);
    auto gm = g.mat();
    for (int idx = 0; idx < dim; ++idx) {
        const M b = Ambient<M>::basis_element(n, idx);
        const double fp = f.eval(detail::axpy(a, h, b));
        const double fm = f.eval(detail::axpy(a, -h, b));
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw NumericalError("gradient: non-finite evaluation of '" + f.label + "'");
        const double d = (fp - fm) / (2.0 * h);
        auto bm = b.mat();
        bm *= d;
        gm += bm;
    }
    return M(std::move(gm));
}

// ---------------------------------------------------------------------------
// Eigenvalue fields: the component functions of the collective chain. For U,
// field (k, i) is the i-th descending eigenvalue of the level-k principal
// submatrix; the gradient is the zero-padded eigenprojector v v*. For SO,
// field (k, i) is the i-th descending modulus of the level-k submatrix, with
// gradient built from the +ib eigenvector u = x + iy of iA_k as y x^T - x y^T.
// Gradients require the eigenvalue to be simple at that level; values are
// defined everywhere.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_gap(const std::vector<double>& values, int i, int k, double guard) {
    double gap = std::numeric_limits<double>::infinity();
    if (i > 0) gap = std::min(gap, values[static_cast<std::size_t>(i - 1)] - values[static_cast<std::size_t>(i)]);
    if (i + 1 < static_cast<int>(values.size()))
        gap = std::min(gap, values[static_cast<std::size_t>(i)] - values[static_cast<std::size_t>(i + 1)]);
    if (gap < guard)
        throw DegeneracyError("eigenvalue gap " + std::to_string(gap) + " below guard at level " + std::to_string(k),
                              gap);
}

} // namespace detail

/// U chain component (1-based level k and index i <= k).
inline ScalarField<HermitianMatrix> eigenvalue_field(int k, int i) {
    if (k < 1 || i < 1 || i > k) throw ArgumentError("eigenvalue_field: need 1 <= i <= k");
    ScalarField<HermitianMatrix> f;
    f.label = "lambda[" + std::to_string(k) + "," + std::to_string(i) + "]";
    f.eval = [k, i](const HermitianMatrix& a) {
        if (k > a.size()) throw ArgumentError("eigenvalue_field: level exceeds matrix size");
        return spectrum_desc(principal_submatrix(a, k))[i - 1];
    };
    f.grad = [k, i](const HermitianMatrix& a) {
        if (k > a.size()) throw ArgumentError("eigenvalue_field: level exceeds matrix size");
        const auto eig = hermitian_eig(principal_submatrix(a, k));
        detail::check_gap(eig.values, i - 1, k, kEigGapGuard);
        CMat g(a.size(), a.size());
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) g(p, q) = eig.vectors(p, i - 1) * std::conj(eig.vectors(q, i - 1));
        return HermitianMatrix(std::move(g));
    };
    return f;
}

/// SO chain component (2 <= k <= n, 1 <= i <= floor(k/2)).
inline ScalarField<SkewSymmetricMatrix> eigenvalue_field_so(int k, int i) {
    if (k < 2 || i < 1 || i > k / 2) throw ArgumentError("eigenvalue_field_so: need 1 <= i <= floor(k/2), k >= 2");
    ScalarField<SkewSymmetricMatrix> f;
    f.label = "mu[" + std::to_string(k) + "," + std::to_string(i) + "]";
    f.eval = [k, i](const SkewSymmetricMatrix& a) {
        if (k > a.size()) throw ArgumentError("eigenvalue_field_so: level exceeds matrix size");
        return skew_spectrum(principal_submatrix(a, k))[i - 1];
    };
    f.grad = [k, i](const SkewSymmetricMatrix& a) {
        if (k > a.size()) throw ArgumentError("eigenvalue_field_so: level exceeds matrix size");
        const auto eig = skew_eig(principal_submatrix(a, k));
        // Simplicity within the full spectrum of iA_k: a modulus is simple iff
        // distinct from its neighbours and bounded away from zero.
        detail::check_gap(eig.values, i - 1, k, kEigGapGuard);
        if (eig.values[static_cast<std::size_t>(i - 1)] < kEigGapGuard)
            throw DegeneracyError("modulus too close to zero for a smooth gradient at level " + std::to_string(k),
                                  eig.values[static_cast<std::size_t>(i - 1)]);
        RMat g(a.size(), a.size());
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) {
                const double xp = eig.vectors(p, i - 1).real();
                const double yp = eig.vectors(p, i - 1).imag();
                const double xq = eig.vectors(q, i - 1).real();
                const double yq = eig.vectors(q, i - 1).imag();
                g(p, q) = yp * xq - xp * yq;
            }
        return SkewSymmetricMatrix(std::move(g));
    };
    return f;
}

/// All chain components for size n, in level-major order.
inline std::vector<ScalarField<HermitianMatrix>> gz_fields(int n) {
    std::vector<ScalarField<HermitianMatrix>> fields;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) fields.push_back(eigenvalue_field(k, i));
    return fields;
}

inline std::vector<ScalarField<SkewSymmetricMatrix>> gz_fields_so(int n) {
    std::vector<ScalarField<SkewSymmetricMatrix>> fields;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i <= k / 2; ++i) fields.push_back(eigenvalue_field_so(k, i));
    return fields;
}

/// Linear field A -> <B, A> with constant gradient B.
template <class M>
ScalarField<M> linear_field(const M& b, const std::string& label = "linear") {
    ScalarField<M> f;
    f.label = label;
    f.eval = [b](const M& a) { return Ambient<M>::pairing(b, a); };
    f.grad = [b](const M&) { return b; };
    return f;
}

/// Power-trace field A -> tr(A^p) (a Casimir of the Lie-Poisson structure).
inline ScalarField<HermitianMatrix> power_trace_field(int p) {
    ScalarField<HermitianMatrix> f;
    f.label = "tr^" + std::to_string(p);
    f.eval = [p](const HermitianMatrix& a) {
        CMat acc = CMat::identity(a.size());
        for (int q = 0; q < p; ++q) acc = acc * a.mat();
        return trace(acc).real();
    };
    f.grad = [p](const HermitianMatrix& a) {
        CMat acc = CMat::identity(a.size());
        for (int q = 0; q < p - 1; ++q) acc = acc * a.mat();
        acc *= static_cast<double>(p);
        return HermitianMatrix(std::move(acc));
    };
    return f;
}

/// Pointwise product with the Leibniz-rule gradient when both factors have one.
template <class M>
ScalarField<M> product_field(const ScalarField<M>& f, const ScalarField<M>& g) {
    ScalarField<M> h;
    h.label = f.label + "*" + g.label;
    auto fe = f.eval;
    auto ge = g.eval;
    h.eval = [fe, ge](const M& a) { return fe(a) * ge(a); };
    if (f.grad && g.grad) {
        auto fg = f.grad;
        auto gg = g.grad;
        h.grad = [fe, ge, fg, gg](const M& a) {
            auto m1 = fg(a).mat();
            m1 *= ge(a);
            auto m2 = gg(a).mat();
            m2 *= fe(a);
            m1 += m2;
            return M(std::move(m1));
        };
    }
    return h;
}

} // namespace gz
