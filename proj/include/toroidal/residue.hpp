#ifndef TOROIDAL_RESIDUE_HPP
#define TOROIDAL_RESIDUE_HPP

#include "toroidal/cone.hpp"
#include "toroidal/volume_ke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toroidal {

struct DegreeEntry {
    int degree;       // deg_i F
    std::size_t rank; // rank A_i
    bool matches() const { return degree >= 0 && static_cast<std::size_t>(degree) == rank; }
};

// Per-variable degree of F next to the rank of the matching pencil matrix.
std::vector<DegreeEntry> degree_profile(const VolumeFunction& v);

struct DegreeBoundReport {
    bool holds = true;
    // False when det T was too large to expand (N above the symbolic limit).
    bool det_checked = false;
    std::vector<std::string> violations;
};

// Degree bounds of the T-matrix entries and of det T in each variable.
DegreeBoundReport t_degree_bounds(const VolumeFunction& v);

// Iterated leading coefficients S_0 = F, S_k = lc_{x_k}(S_{k-1}), and the
// minor g_d of P = S_d Hess(S_d) - grad S_d grad S_d^T with the first d
// rows and columns removed. Variables follow the cone's marking order.
struct ResidueChain {
    std::size_t d;
    std::size_t g;
    std::size_t n;
    Integer vol;
    std::vector<MultiPoly> S;
    std::vector<unsigned> leading_degrees; // deg_{x_k} S_{k-1}, k = 1..d
    MultiPoly gd;
};

ResidueChain residue_chain(const VolumeFunction& v, std::size_t d);

// deg S_k <= g - k for every k and deg g_d <= 2 (N - d)(g - d - 1).
bool residue_bounds_hold(const ResidueChain& rc);

// Integrand constant * numerator / denominator_base^denominator_exp.
struct ChiDescriptor {
    Rational constant;
    MultiPoly numerator;
    MultiPoly denominator_base;
    unsigned denominator_exp;

    bool vanishes() const { return numerator.is_zero(); }
};

ChiDescriptor chi_descriptor(const ResidueChain& rc);

enum class VerdictValue { zero, one, unknown };
enum class ZeroReason { d_ge_g_minus_1, interior_edge, genus_two_top, toric_empty, toric_common_cone };

struct IntersectionVerdict {
    VerdictValue value = VerdictValue::unknown;
    std::optional<ZeroReason> reason;
    std::optional<ChiDescriptor> chi;
};

std::string to_string(VerdictValue v);
std::string to_string(ZeroReason r);

// Vanishing criteria for the boundary divisors of the selected edges, in
// the fixed precedence d >= g-1, interior edge, genus-two top cone.
IntersectionVerdict intersection_vanishing(const MarkedCone& c, std::span<const std::size_t> selected);

// Full product of N divisors in a regular fan: 1 iff the N rays span one
// common top-dimensional cone.
int toric_full_intersection(const Fan& f, std::span<const SymIntMat> edges);

} // namespace toroidal

#endif
