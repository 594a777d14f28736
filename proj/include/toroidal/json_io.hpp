#ifndef TOROIDAL_JSON_IO_HPP
#define TOROIDAL_JSON_IO_HPP

#include "toroidal/cone.hpp"
#include "toroidal/multi_poly.hpp"
#include "toroidal/period_domain.hpp"
#include "toroidal/residue.hpp"
#include "toroidal/volume_ke.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace toroidal {

using json = nlohmann::json;

// Integers up to 2^53 in magnitude are JSON numbers, larger ones strings.
json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j);

// "p" or "p/q".
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

// {"nvars": n, "terms": [{"exp": [...], "num": "...", "den": "..."}]},
// terms in descending graded-lex order.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json sym_mat_to_json(const SymIntMat& m);
SymIntMat sym_mat_from_json(const json& j);
json rat_matrix_to_json(const RatMatrix& m);

// {"g": 2, "scale": 1, "generators": [...], "labels": [...]}
json cone_to_json(const MarkedCone& c);
MarkedCone cone_from_json(const json& j, ConeValidation validation = ConeValidation::full);

// {"matrix": [[0, 1], [1, 0]]}
GroupElement group_element_from_json(const json& j);
// A single element, a list of elements, or {"elements": [...]}.
std::vector<GroupElement> group_from_json(const json& j);

// {"g": 2, "scale": 1, "cones": [cone, ...]}; cones may omit g and scale.
json fan_to_json(const Fan& f);
Fan fan_from_json(const json& j);

// {"re": [[...]], "im": [[...]]}
json complex_to_json(const ComplexMat& m);
ComplexMat complex_from_json(const json& j);
RealMat real_matrix_from_json(const json& j);

json ma_report_to_json(const MaReport& r, const VolumeFunction& v);
json chi_to_json(const ChiDescriptor& chi);
json residue_to_json(const ResidueChain& rc);

// Reads and parses a JSON file; ParseError carries the byte offset.
json read_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text, const std::string& origin);

} // namespace toroidal

#endif
