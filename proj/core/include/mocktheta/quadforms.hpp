#pragma once

#include "mocktheta/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mocktheta {

/// Integer 2x2 matrix acting on binary quadratic forms on the right.
struct Mat2 {
    long p = 1, q = 0, r = 0, s = 1;

    static Mat2 identity() { return {}; }
    long det() const { return p * s - q * r; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse_unimodular() const;  // requires det == +-1
    Mat2 negated() const { return {-p, -q, -r, -s}; }
    bool operator==(const Mat2& o) const = default;
};

/// Integral binary quadratic form a x^2 + b xy + c y^2.
///
/// Forms here are definite: positive definite (a > 0) or negative
/// definite (a < 0), never indefinite.
struct BinaryQF {
    long a = 0, b = 0, c = 0;

    long disc() const { return b * b - 4 * a * c; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    bool negative_definite() const { return a < 0 && disc() < 0; }

    /// Right action: (Q . g)(x, y) = Q(p x + q y, r x + s y).
    BinaryQF apply(const Mat2& g) const;
    BinaryQF negated() const { return {-a, -b, -c}; }
    bool operator==(const BinaryQF& o) const = default;
};

/// Gauss reduction of a definite form.  Returns the reduced form and a
/// unimodular g with form.apply(g) == reduced.  A positive definite form
/// is reduced when -a < b <= a <= c, with b >= 0 if a == c; a negative
/// definite form is reduced when its negation is.
std::pair<BinaryQF, Mat2> sl2_reduce(const BinaryQF& form);

/// All g in SL2(Z) fixing the form.  Size 2, 4, or 6; always contains +-I.
std::vector<Mat2> automorphs(const BinaryQF& form);

/// Searches for g in Gamma_0(N) with lhs.apply(g) == rhs.  Both forms must
/// be definite of equal discriminant.
std::optional<Mat2> gamma0_equivalent(const BinaryQF& lhs, const BinaryQF& rhs, long level);

/// Half the order of the stabilizer of the form inside Gamma_0(N);
/// 1 except at forms equivalent to the square or hexagonal lattice.
long stabilizer_weight(const BinaryQF& form, long level);

/// One Heegner orbit [a, b, c] with N | a, b^2 - 4ac = D, b = r (mod 2N).
struct HeegnerOrbit {
    BinaryQF rep;       ///< scan representative (first found)
    BinaryQF reduced;   ///< SL2(Z)-reduced image of rep
    long omega = 1;     ///< stabilizer weight in Gamma_0(N)

    /// CM point: the root of rep(z, 1) lying in the upper half plane.
    Complex cm(const PrecisionContext& ctx) const;
};

/// All r in [0, 2N) with r^2 = D (mod 4N).
std::vector<long> square_roots_mod(long disc, long level);

/// Enumerates the Gamma_0(N)-orbits of definite forms [a, b, c] with
/// N | a, sign(a) = sign, b^2 - 4ac = D < 0 and b = r (mod 2N).
///
/// The scan covers |a| <= scan_multiplier * N * (ceil(sqrt(|D|/3)) + 1);
/// orbit counts must be stable under doubling scan_multiplier, which the
/// callers use as the completeness certificate.  Orbits are returned
/// sorted by (reduced form, representative).
std::vector<HeegnerOrbit> enumerate_heegner(long level, long disc, long r, int sign,
                                            long scan_multiplier = 1);

/// CM point of a definite form: the root of a z^2 + b z + c in the upper
/// half plane, (-b + i sqrt(|D|)) / 2a for a > 0.
Complex cm_point(const PrecisionContext& ctx, const BinaryQF& form);

/// JSON description of an orbit list (schema used by the CLI).
std::string orbits_to_json(const PrecisionContext& ctx, const std::vector<HeegnerOrbit>& orbits);

}  // namespace mocktheta
