#pragma once

#include "mocktheta/numerics.hpp"
#include "mocktheta/quadforms.hpp"

#include <functional>
#include <vector>

namespace mocktheta {

/// Discriminant module of the rank-one lattice of level N: the group
/// Z/2NZ with quadratic form Q(r) = r^2/4N and bilinear form
/// (r, r') = r r'/2N, both taken mod 1.
struct DiscriminantModule {
    long level = 1;

    long size() const { return 2 * level; }
    Rational qform(long r) const;           // r^2/4N mod 1, in [0, 1)
    Rational bform(long r, long rp) const;  // r r'/2N mod 1, in [0, 1)
};

/// Dense complex matrix indexed by residues of the discriminant module.
struct RepMatrix {
    long n = 0;  // dimension
    std::vector<Complex> entries;

    RepMatrix() = default;
    explicit RepMatrix(long dim);
    Complex& at(long i, long j) { return entries[i * n + j]; }
    const Complex& at(long i, long j) const { return entries[i * n + j]; }

    RepMatrix operator*(const RepMatrix& o) const;
    std::vector<Complex> apply(const std::vector<Complex>& v) const;
};

/// Weil representation matrix of T = [[1,1],[0,1]] on C[Z/2NZ]:
/// diagonal with entries e(Q(r)), or e(-Q(r)) for the dual.
RepMatrix rho_T(const PrecisionContext& ctx, long level, bool dual);

/// Weil representation matrix of S = [[0,-1],[1,0]]:
/// entries e(-1/8)/sqrt(2N) * e(-(r,r')), conjugated for the dual.
RepMatrix rho_S(const PrecisionContext& ctx, long level, bool dual);

/// For Q an exact divisor of N (gcd(Q, N/Q) = 1), the Atkin-Lehner
/// involution on the discriminant module: the residue s mod 2N with
/// s = -r (mod 2Q) and s = r (mod 2N/Q).
long sigma_q_residue(long level, long exact_divisor, long r);

/// Full permutation table r -> sigma_Q(r) on [0, 2N).
std::vector<long> sigma_Q(long level, long exact_divisor);

/// Product on exact divisors: Q * Q' = Q Q' / gcd(Q, Q')^2.
long exact_divisor_product(long q1, long q2, long level);

/// Integer matrix W_Q^N = [[Q a, b], [N c, Q d]] of determinant Q.
/// Deterministic choice via the extended gcd of Q and N/Q.
struct ALMatrix {
    long alpha, beta, gamma, delta;  // entries Q*alpha, beta, N*gamma, Q*delta
    long level, q;
};
ALMatrix atkin_lehner_matrix(long level, long exact_divisor);

/// Weight-0 slash: (F |_0 W_Q^N)(tau) = F(W_Q tau).
Complex atkin_lehner_slash(const PrecisionContext& ctx,
                           const std::function<Complex(const Complex&)>& f,
                           long level, long exact_divisor, const Complex& tau);

}  // namespace mocktheta
