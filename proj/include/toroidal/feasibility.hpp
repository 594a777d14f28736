#ifndef TOROIDAL_FEASIBILITY_HPP
#define TOROIDAL_FEASIBILITY_HPP

#include "toroidal/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace toroidal {

// Exact decision of whether {z : A z = b, z >= 0} is nonempty. A returned
// witness satisfies the system exactly.
struct Feasibility {
    bool feasible = false;
    std::vector<Rational> witness;
};

// Gaussian elimination of the equalities followed by Fourier-Motzkin
// elimination of the remaining free variables. Gives up (nullopt) once the
// constraint set grows past max_constraints.
std::optional<Feasibility> feasible_fourier_motzkin(const RatMatrix& a, std::span<const Rational> b,
                                                    std::size_t max_constraints = 50000);

// Phase-one simplex with Bland's rule.
Feasibility feasible_simplex(const RatMatrix& a, std::span<const Rational> b);

inline constexpr std::size_t fourier_motzkin_variable_cap = 24;

// Fourier-Motzkin up to the variable cap, simplex beyond it or on blow-up.
Feasibility feasible(const RatMatrix& a, std::span<const Rational> b);

} // namespace toroidal

#endif
