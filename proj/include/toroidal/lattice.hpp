#ifndef TOROIDAL_LATTICE_HPP
#define TOROIDAL_LATTICE_HPP

#include "toroidal/matrix.hpp"

#include <optional>
#include <vector>

namespace toroidal {

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form, all
// positive. Their count is the rank of m.
std::vector<Integer> smith_invariants(const IntMatrix& m);

// Rank of a symmetric matrix if it is positive semidefinite, nullopt
// otherwise. Exact symmetric elimination with positive diagonal pivots.
std::optional<std::size_t> psd_rank(const RatMatrix& m);

} // namespace toroidal

#endif
