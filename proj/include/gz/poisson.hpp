#pragma once

#include "gz/field.hpp"
#include "gz/matrix.hpp"

namespace gz {

inline double lie_poisson_pairing(const HermitianMatrix& a, const HermitianMatrix& gf, const HermitianMatrix& gg) {
    const CMat c = commutator(gf.mat(), gg.mat()); // anti-Hermitian
    return trace(a.mat() * (cd(0.0, 1.0) * c)).real();
}

inline double lie_poisson_pairing(const SkewSymmetricMatrix& a, const SkewSymmetricMatrix& gf,
                                  const SkewSymmetricMatrix& gg) {
    const RMat c = commutator(gf.mat(), gg.mat()); // skew
    return trace(a.mat().transpose() * c);
}

/// Lie-Poisson bracket in coordinates: {f,g}(A) = <A, i[grad f, grad g]> on
/// u(n)*, and <A, [grad f, grad g]> on so(n)* (trace pairings as in Ambient).
/// Antisymmetry holds exactly by construction.
template <class M>
double lie_poisson_bracket(const ScalarField<M>& f, const ScalarField<M>& g, const M& a,
                           double step = kDefaultFdStep) {
    const M gf = gradient(f, a, step);
    const M gg = gradient(g, a, step);
    return lie_poisson_pairing(a, gf, gg);
}

/// Symplectic pairing of two orbit directions [X, A], [Y, A] at A (the
/// Kostant-Kirillov-Souriau form up to the fixed sign convention): for
/// anti-Hermitian X, Y this is -i tr(A [X, Y]), which is real.
inline double kks_pairing(const HermitianMatrix& a, const CMat& x, const CMat& y) {
    return (cd(0.0, -1.0) * trace(a.mat() * commutator(x, y))).real();
}

inline double kks_pairing(const SkewSymmetricMatrix& a, const RMat& x, const RMat& y) {
    return trace(a.mat().transpose() * commutator(x, y));
}

} // namespace gz
