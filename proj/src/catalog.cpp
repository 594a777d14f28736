#include "toroidal/catalog.hpp"

#include "toroidal/errors.hpp"

#include <charconv>

namespace toroidal {

namespace {

constexpr std::string_view level_prefix = "principal-g2-level-";

const char* principal_provenance =
    "principal cone of the central (Igusa) decomposition, spanned by the rank-one forms zeta_ij";

} // namespace

SymIntMat zeta(std::size_t g, std::size_t i, std::size_t j)
{
    if (i >= g || j >= g)
        throw DimensionError("zeta index out of range");
    IntMatrix m(g, g);
    if (i == j) {
        m(i, i) = 1;
    } else {
        m(i, i) = 1;
        m(j, j) = 1;
        m(i, j) = -1;
        m(j, i) = -1;
    }
    return SymIntMat(std::move(m));
}

MarkedCone principal_cone(std::size_t g, long level)
{
    if (level < 1)
        throw DomainError("level must be positive");
    std::vector<SymIntMat> gens;
    std::vector<std::string> labels;
    const Integer n = level;
    for (std::size_t i = 0; i < g; ++i) {
        gens.push_back(zeta(g, i, i).scaled(n));
        labels.push_back("z" + std::to_string(i + 1) + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            gens.push_back(zeta(g, i, j).scaled(n));
            labels.push_back("z" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return MarkedCone(g, n, std::move(gens), std::move(labels));
}

CatalogEntry catalog_get(std::string_view name)
{
    if (name == "principal-g2")
        return {"principal-g2", principal_cone(2), principal_provenance};
    if (name == "principal-g3")
        return {"principal-g3", principal_cone(3), principal_provenance};
    if (name.substr(0, level_prefix.size()) == level_prefix) {
        std::string_view digits = name.substr(level_prefix.size());
        long level = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && level >= 1)
            return {std::string(name), principal_cone(2, level),
                    std::string(principal_provenance) + "; generators scaled to the level-" + std::to_string(level) +
                        " lattice"};
    }
    throw UnknownNameError("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<CatalogEntry> catalog_list()
{
    return {catalog_get("principal-g2"), catalog_get("principal-g3"), catalog_get("principal-g2-level-3")};
}

bool is_catalog_name(std::string_view name)
{
    try {
        catalog_get(name);
        return true;
    } catch (const UnknownNameError&) {
        return false;
    }
}

} // namespace toroidal
