#ifndef TOROIDAL_VOLUME_KE_HPP
#define TOROIDAL_VOLUME_KE_HPP

#include "toroidal/cone.hpp"
#include "toroidal/multi_poly.hpp"
#include "toroidal/poly_matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace toroidal {

// Local volume function of a top-dimensional cone: F = det(sum x_mu A_mu)
// where A_mu are the generators divided by the lattice scale.
struct VolumeFunction {
    std::size_t g;
    std::size_t n;
    MarkedCone cone;
    std::vector<RatMatrix> pencil;
    MultiPoly F;
    Integer vol;
};

VolumeFunction volume_function(const MarkedCone& c);

// T_ij = F F_ij - F_i F_j.
PolyMatrix t_matrix(const VolumeFunction& v);

// Constant (-1)^N 2^{g(g-1)/2} vol^2 of the Monge-Ampere identity
// det T = c * F^{(g+1)(g-1)}.
Rational ma_constant(std::size_t g, const Integer& vol);

enum class MaMode { symbolic, randomized };

struct MaWitness {
    std::vector<Rational> point;
    Rational lhs;
    Rational rhs;
};

struct MaReport {
    bool holds = false;
    MaMode mode = MaMode::symbolic;
    std::vector<MaWitness> witnesses;
    std::optional<std::uint64_t> seed;
};

inline constexpr std::size_t symbolic_variable_limit = 6;

// Checks det T = (-1)^N 2^{g(g-1)/2} vol^2 F^{(g+1)(g-1)}. Symbolic mode
// compares polynomials exactly (N <= 6); randomized mode compares exact
// values at random rational points derived from seed. threads only splits
// the randomized trials; the report does not depend on it.
MaReport verify_ma_identity(const VolumeFunction& v, MaMode mode, std::size_t trials = 20, std::uint64_t seed = 0,
                            std::size_t threads = 1);

// Random rational point with numerators and denominators in [1, 10^6].
std::vector<Rational> random_rational_point(std::size_t n, std::uint64_t seed, std::uint64_t index);

// The defect polynomial det T - (-1)^N 2^{g(g-1)/2} F^{(g+1)(g-1)} D^2 for
// the pencil of mats, with D = |det coords|.
MultiPoly ke_defect(std::span<const SymIntMat> mats);

// True iff the defect polynomial vanishes identically.
bool is_ke_point(std::span<const SymIntMat> mats);

// Coefficient of x^index in the defect polynomial.
Rational ke_coefficient(std::span<const SymIntMat> mats, const Exponent& index);

// perm[i] is the image of i. Checks det(sum x_i Y(perm(i))) =
// det(sum x_{perm^-1(i)} Y(i)) at random points and that KE membership is
// unchanged by reordering the list.
bool permutation_check(std::span<const SymIntMat> mats, std::span<const std::size_t> perm, std::size_t trials,
                       std::uint64_t seed);

struct G2Coefficients {
    Integer A, B, C, L, M, N;
    friend bool operator==(const G2Coefficients&, const G2Coefficients&) = default;
};

// Closed-form coefficients of F = A x^2 + B y^2 + C z^2 + L xy + M xz + N yz
// for the genus-two pencil whose i-th matrix is [[a_i1, a_i2], [a_i2, a_i3]].
G2Coefficients g2_closed_form(const IntMatrix& a);

// Same pencil, as symmetric matrices.
std::vector<SymIntMat> g2_pencil_from_rows(const IntMatrix& a);

} // namespace toroidal

#endif
