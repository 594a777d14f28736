#include "toroidal/json_io.hpp"

#include "toroidal/errors.hpp"

#include <fstream>
#include <sstream>

namespace toroidal {

namespace {

const Integer json_safe_limit = Integer("9007199254740992"); // 2^53

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::vector<json>> rows_of(const json& j, const char* what)
{
    if (!j.is_array() || j.empty())
        throw ParseError(std::string(what) + " must be a nonempty array of rows");
    std::vector<std::vector<json>> out;
    for (const auto& r : j) {
        if (!r.is_array())
            throw ParseError(std::string(what) + " rows must be arrays");
        out.emplace_back(r.begin(), r.end());
        if (out.back().size() != out.front().size())
            throw ParseError(std::string(what) + " is ragged");
    }
    return out;
}

IntMatrix int_matrix_from_json(const json& j, const char* what)
{
    auto rows = rows_of(j, what);
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            m(i, k) = integer_from_json(rows[i][k]);
    return m;
}

} // namespace

json integer_to_json(const Integer& z)
{
    if (abs(z) <= json_safe_limit) {
        if (z.fits_slong_p())
            return json(z.get_si());
    }
    return json(z.get_str());
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& q)
{
    return json(to_string(q));
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(integer_from_json(j));
    if (!j.is_string())
        throw ParseError("expected a rational string, got " + j.dump());
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return parse_rational(s);
    return parse_rational(std::string_view(s).substr(0, slash), std::string_view(s).substr(slash + 1));
}

json poly_to_json(const MultiPoly& p)
{
    json terms = json::array();
    for (const auto& t : p.terms())
        terms.push_back({{"exp", t.exp}, {"num", t.coeff.get_num().get_str()}, {"den", t.coeff.get_den().get_str()}});
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j)
{
    const json& nv = field(j, "nvars");
    if (!nv.is_number_unsigned() || nv.get<std::size_t>() == 0)
        throw ParseError("nvars must be a positive integer");
    const std::size_t n = nv.get<std::size_t>();
    std::vector<Term> terms;
    const json& ts = field(j, "terms");
    if (!ts.is_array())
        throw ParseError("terms must be an array");
    for (const auto& t : ts) {
        const json& e = field(t, "exp");
        if (!e.is_array() || e.size() != n)
            throw ParseError("exponent vector must have length nvars");
        Exponent exp;
        for (const auto& v : e) {
            if (!v.is_number_unsigned())
                throw ParseError("exponents must be nonnegative integers");
            exp.push_back(v.get<std::uint32_t>());
        }
        Rational c = parse_rational(field(t, "num").get<std::string>(), field(t, "den").get<std::string>());
        terms.push_back(Term{std::move(exp), std::move(c)});
    }
    return MultiPoly::from_terms(n, std::move(terms));
}

json sym_mat_to_json(const SymIntMat& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.g(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.g(); ++k)
            r.push_back(integer_to_json(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

SymIntMat sym_mat_from_json(const json& j)
{
    return SymIntMat(int_matrix_from_json(j, "matrix"));
}

json rat_matrix_to_json(const RatMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            r.push_back(rational_to_json(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

json cone_to_json(const MarkedCone& c)
{
    json gens = json::array();
    for (const auto& a : c.generators())
        gens.push_back(sym_mat_to_json(a));
    return {{"g", c.g()}, {"scale", integer_to_json(c.scale())}, {"generators", std::move(gens)}, {"labels", c.labels()}};
}

MarkedCone cone_from_json(const json& j, ConeValidation validation)
{
    const json& gj = field(j, "g");
    if (!gj.is_number_unsigned() || gj.get<std::size_t>() == 0)
        throw ParseError("g must be a positive integer");
    Integer scale = j.contains("scale") ? integer_from_json(j.at("scale")) : Integer(1);
    const json& gens = field(j, "generators");
    if (!gens.is_array())
        throw ParseError("generators must be an array");
    std::vector<SymIntMat> mats;
    for (const auto& m : gens)
        mats.push_back(sym_mat_from_json(m));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array())
            throw ParseError("labels must be an array of strings");
        for (const auto& l : j.at("labels")) {
            if (!l.is_string())
                throw ParseError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return MarkedCone(gj.get<std::size_t>(), std::move(scale), std::move(mats), std::move(labels), validation);
}

GroupElement group_element_from_json(const json& j)
{
    return GroupElement(int_matrix_from_json(field(j, "matrix"), "group element"));
}

std::vector<GroupElement> group_from_json(const json& j)
{
    std::vector<GroupElement> out;
    if (j.is_object() && j.contains("matrix")) {
        out.push_back(group_element_from_json(j));
        return out;
    }
    const json& list = j.is_object() ? field(j, "elements") : j;
    if (!list.is_array())
        throw ParseError("group must be an element, an array of elements or {\"elements\": [...]}");
    for (const auto& e : list)
        out.push_back(group_element_from_json(e));
    return out;
}

json fan_to_json(const Fan& f)
{
    json cones = json::array();
    for (const auto& c : f.cones())
        cones.push_back(cone_to_json(c));
    return {{"g", f.g()}, {"scale", integer_to_json(f.scale())}, {"cones", std::move(cones)}};
}

Fan fan_from_json(const json& j)
{
    const json& cones = field(j, "cones");
    if (!cones.is_array() || cones.empty())
        throw ParseError("cones must be a nonempty array");
    std::vector<MarkedCone> out;
    for (const auto& c : cones) {
        json cj = c;
        if (!cj.contains("g") && j.contains("g"))
            cj["g"] = j.at("g");
        if (!cj.contains("scale") && j.contains("scale"))
            cj["scale"] = j.at("scale");
        out.push_back(cone_from_json(cj));
    }
    return Fan(std::move(out));
}

json complex_to_json(const ComplexMat& m)
{
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rr = json::array(), ir = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            rr.push_back(m(i, k).real());
            ir.push_back(m(i, k).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

RealMat real_matrix_from_json(const json& j)
{
    auto rows = rows_of(j, "matrix");
    RealMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k) {
            if (!rows[i][k].is_number())
                throw ParseError("matrix entries must be numbers");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k].get<double>();
        }
    return m;
}

ComplexMat complex_from_json(const json& j)
{
    RealMat re = real_matrix_from_json(field(j, "re"));
    RealMat im = j.contains("im") ? real_matrix_from_json(j.at("im")) : RealMat::Zero(re.rows(), re.cols());
    if (re.rows() != im.rows() || re.cols() != im.cols())
        throw ParseError("re and im parts differ in shape");
    ComplexMat m(re.rows(), re.cols());
    m.real() = re;
    m.imag() = im;
    return m;
}

json ma_report_to_json(const MaReport& r, const VolumeFunction& v)
{
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json point = json::array();
        for (const auto& x : w.point)
            point.push_back(rational_to_json(x));
        witnesses.push_back({{"point", std::move(point)}, {"lhs", rational_to_json(w.lhs)}, {"rhs", rational_to_json(w.rhs)}});
    }
    json out = {{"identity", "monge-ampere"},
                {"mode", r.mode == MaMode::symbolic ? "symbolic" : "randomized"},
                {"holds", r.holds},
                {"vol", integer_to_json(v.vol)},
                {"g", v.g},
                {"witnesses", std::move(witnesses)}};
    out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return out;
}

json chi_to_json(const ChiDescriptor& chi)
{
    return {{"constant", rational_to_json(chi.constant)},
            {"numerator", poly_to_json(chi.numerator)},
            {"denominator_base", poly_to_json(chi.denominator_base)},
            {"denominator_exp", chi.denominator_exp}};
}

json residue_to_json(const ResidueChain& rc)
{
    json s = json::array();
    for (const auto& p : rc.S)
        s.push_back(poly_to_json(p));
    return {{"d", rc.d}, {"S", std::move(s)}, {"g_d", poly_to_json(rc.gd)}, {"chi", chi_to_json(chi_descriptor(rc))}};
}

json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path.string());
}

} // namespace toroidal
