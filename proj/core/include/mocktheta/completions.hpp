#pragma once

#include "mocktheta/numerics.hpp"
#include "mocktheta/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mocktheta {

/// The ten vector-valued families of completed mock theta functions.
enum class FamilyLabel {
    order2,
    order3a,
    order3b,
    order5_1,
    order5_2,
    order6_1,
    order6_2,
    order7,
    order8,
    order10,
};

std::string to_string(FamilyLabel label);
std::optional<FamilyLabel> family_from_string(const std::string& name);
const std::vector<FamilyLabel>& all_families();

/// Exact scalar rat * sqrt(root) * sin(pi sin_num / sin_den); sin_den = 0
/// means no sine factor.  Covers every entry of the printed S-matrices.
struct SymReal {
    Rational rat = 0;
    long root = 1;
    long sin_num = 0;
    long sin_den = 0;

    bool is_zero() const { return rat == 0; }
    Real value(const PrecisionContext& ctx) const;
};

/// One component of the holomorphic vector F:
///   scale * q^shift * (offset + S(sign * q^(1/root)))
/// where S is a catalog series in its own variable.
struct ComponentSeries {
    SeriesId id;
    Rational shift;
    QuadScalar scale;
    long root = 1;
    int sign = 1;
    Rational offset = 0;
};

/// coeff * theta_{level, residue} inside a shadow component.
struct ShadowTerm {
    QuadScalar coeff;
    long residue;
};

/// Static description of one family: component series, transformation
/// matrices, shadow data and (when printed) the map into a vector-valued
/// form for the dual Weil representation.
struct CompletionFamily {
    FamilyLabel label;
    int dim = 0;

    std::vector<ComponentSeries> components;

    // F_i(tau + 1) = e(t_phase[i]) F_{t_perm[i]}(tau); the same law holds
    // for the completed vector H.
    std::vector<int> t_perm;
    std::vector<Rational> t_phase;

    // H(-1/tau) = sqrt(-i tau) * S * H(tau), overall scalars folded in.
    std::vector<std::vector<SymReal>> s_matrix;

    // Shadow: g_i = sum coeff * theta_{theta_level, residue}; the correction
    // term is G = i * g_prefactor * int_{-conj(tau)}^{i inf} g(z)/sqrt(-i(z+tau)) dz
    // and xi_{1/2}(H) = xi_prefactor * g.
    bool has_shadow = false;
    long theta_level = 0;
    QuadScalar g_prefactor;
    QuadScalar xi_prefactor;
    std::vector<std::vector<ShadowTerm>> shadow;

    // Lift into C[Z/2 lift_level Z] transforming under the dual Weil
    // representation: row r of lift holds the component coefficients of the
    // e_r coordinate.
    bool has_lift = false;
    long lift_level = 0;
    std::vector<std::vector<QuadScalar>> lift;
};

const CompletionFamily& completion_family(FamilyLabel label);

/// Value of a vector-valued function at one point.
using VectorPoint = std::vector<Complex>;

/// Exact expansion of component i (without the irrational scale factor),
/// valid through q-exponent <= order.  Cached internally.
FourierExpansion component_expansion(FamilyLabel label, int i, const Rational& order);

/// Holomorphic vector F(tau).
VectorPoint eval_F(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau);

/// Shadow vector g(z).  Throws std::domain_error for families whose shadow
/// is not part of the printed data (order3b, order5_*, order7, order10).
VectorPoint eval_shadow_g(const PrecisionContext& ctx, FamilyLabel label, const Complex& z);

/// Exact expansion of one shadow component, split as scale * series so the
/// series part stays rational (every component is a single quadratic scalar
/// times an integral theta combination).
struct ScaledExpansion {
    QuadScalar scale;
    FourierExpansion series;
};
ScaledExpansion shadow_expansion(FamilyLabel label, int i, long M);

/// Non-holomorphic correction G(tau), as the closed erfc form obtained by
/// integrating the shadow theta series term by term.
VectorPoint eval_G_closedform(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau);

/// The same vector by direct tanh-sinh quadrature of the period integral.
VectorPoint eval_G_quadrature(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau);

/// Completion H = F - G.
VectorPoint eval_H(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau);

/// int_{-conj(tau)}^{i inf} (sum coeff * theta_{level,a})(z) / sqrt(-i(z+tau)) dz
/// in closed form: each theta term n e(n^2 z / 4N) contributes
/// i sgn(n) sqrt(2N) e(-n^2 tau / 4N) erfc(|n| sqrt(pi v / N)).
Complex theta_period_integral(const PrecisionContext& ctx, long level,
                              const std::vector<ShadowTerm>& combination, const Complex& tau);

/// theta_{N,a}(z) for z anywhere in the upper half plane (modular inversion
/// is used when Im z is small).
Complex theta_point(const PrecisionContext& ctx, long level, long residue, const Complex& z);

enum class Generator { T, S };

/// Max-abs residual of the printed transformation law at tau, computed on
/// H for shadowed families and on F alone for generator T otherwise.
Real check_transform(const PrecisionContext& ctx, FamilyLabel label, Generator gen,
                     const Complex& tau);

/// xi_{1/2} H by central finite differences: 2 i sqrt(v) conj(d H / d conj(tau)).
VectorPoint xi_fd(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau,
                  const Real& h);

/// Weight-1/2 hyperbolic Laplacian of H by five-point finite differences.
VectorPoint laplacian_fd(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau,
                         const Real& h);

/// The four Mordell-type integrals attached to the sixth order family.
enum class MordellKind { J, J1, K, K1 };
Complex mordell(const PrecisionContext& ctx, MordellKind kind, const Complex& alpha);

/// Remainder vector R_6 of the sixth order S-transformation, computed
/// either from the Mordell integrals or from the theta period integral.
enum class R6Method { mordell, theta_integral };
VectorPoint eval_R6(const PrecisionContext& ctx, const Complex& tau, R6Method method);

/// Exact rational expansion of the lift, one component per residue class
/// of Z/2NZ, valid through q-exponent <= order.
struct WeilLift {
    long level = 0;
    std::vector<FourierExpansion> components;
};
WeilLift lift_to_weil(FamilyLabel label, const Rational& order);

/// Value of the lifted vector at tau, one entry per residue of Z/2NZ.
/// Needs both a printed lift and a shadow (order6_1, order6_2).
VectorPoint eval_lift(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau);

/// Terms with exponent <= 0 per residue class.
struct PrincipalPart {
    long level = 0;
    std::map<long, std::vector<std::pair<Rational, Rational>>> terms;  // r -> (exponent, coeff)
};
PrincipalPart principal_part(const WeilLift& lift);

/// Residual of the finite intertwining identity the lift matrix must
/// satisfy: L N = rho_T L for T, L S = e(1/8) rho_S L for S (matrices of
/// the dual Weil representation on the left).
Real lift_intertwining_residual(const PrecisionContext& ctx, FamilyLabel label, Generator gen);

}  // namespace mocktheta
