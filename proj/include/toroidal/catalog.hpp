#ifndef TOROIDAL_CATALOG_HPP
#define TOROIDAL_CATALOG_HPP

#include "toroidal/cone.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace toroidal {

struct CatalogEntry {
    std::string name;
    MarkedCone cone;
    std::string provenance;
};

// zeta_ii = E_ii, zeta_ij = E_ii + E_jj - E_ij - E_ji.
SymIntMat zeta(std::size_t g, std::size_t i, std::size_t j);

// Principal cone of the central cone decomposition, generators level * zeta
// in the order zeta_11, ..., zeta_gg, zeta_12, zeta_13, ..., zeta_{g-1,g},
// relative to the lattice level * Sym_g(Z).
MarkedCone principal_cone(std::size_t g, long level = 1);

// Builtin names: "principal-g2", "principal-g3" and "principal-g2-level-<n>".
CatalogEntry catalog_get(std::string_view name);

// One entry per builtin name; the level-n family is listed with n = 3.
std::vector<CatalogEntry> catalog_list();

bool is_catalog_name(std::string_view name);

} // namespace toroidal

#endif
