#include "toroidal/cli.hpp"

#include "toroidal/catalog.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/json_io.hpp"
#include "toroidal/lattice.hpp"
#include "toroidal/period_domain.hpp"
#include "toroidal/residue.hpp"
#include "toroidal/volume_ke.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace toroidal {

void RunConfig::validate() const
{
    if (trials < 1)
        throw DomainError("trials must be at least 1");
    if (!(tol > 0))
        throw DomainError("tol must be positive");
    if (threads < 1)
        throw DomainError("threads must be at least 1");
}

RunConfig load_run_config(const std::string& path, RunConfig base)
{
    json j = read_json_file(path);
    if (!j.is_object())
        throw ParseError(path + ": config must be a JSON object");
    try {
        if (j.contains("seed"))
            base.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("trials"))
            base.trials = j.at("trials").get<std::size_t>();
        if (j.contains("tol"))
            base.tol = j.at("tol").get<double>();
        if (j.contains("threads"))
            base.threads = j.at("threads").get<std::size_t>();
        if (j.contains("output")) {
            auto o = j.at("output").get<std::string>();
            if (o != "json" && o != "text")
                throw ParseError(path + ": output must be \"json\" or \"text\"");
            base.output = o == "json" ? OutputFormat::json : OutputFormat::text;
        }
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    base.validate();
    return base;
}

namespace {

struct Outcome {
    json report;
    bool pass;
};

void render(const json& report, OutputFormat fmt, std::ostream& out)
{
    if (fmt == OutputFormat::json) {
        out << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

// A catalog name or a path to a cone-spec JSON file.
MarkedCone load_cone(const std::string& arg, ConeValidation validation = ConeValidation::full)
{
    if (is_catalog_name(arg))
        return catalog_get(arg).cone;
    return cone_from_json(read_json_file(arg), validation);
}

bool is_fan_document(const std::string& arg, json& doc)
{
    if (is_catalog_name(arg))
        return false;
    doc = read_json_file(arg);
    return doc.is_object() && doc.contains("cones");
}

std::vector<std::size_t> parse_index_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("edge list must be comma-separated nonnegative integers, got '" + text + "'");
        out.push_back(std::stoul(item));
    }
    if (out.empty())
        throw ParseError("empty edge list");
    return out;
}

json edge_report(const MarkedCone& c)
{
    json edges = json::array();
    for (std::size_t k = 0; k < c.size(); ++k) {
        auto e = edge_class(c.generators()[k]);
        edges.push_back({{"label", c.labels()[k]},
                         {"class", to_string(e.kind)},
                         {"rank", e.rank},
                         {"unexpected_rank", e.unexpected_rank}});
    }
    return edges;
}

Outcome cone_check(const std::string& file)
{
    MarkedCone c = load_cone(file, ConeValidation::structural);
    json r = {{"command", "cone check"}, {"g", c.g()}, {"scale", integer_to_json(c.scale())}, {"generators", c.size()}};
    bool psd = std::all_of(c.generators().begin(), c.generators().end(),
                           [](const SymIntMat& a) { return psd_rank(a.to_rational()).has_value(); });
    bool simplicial = is_simplicial(c);
    r["psd"] = psd;
    r["simplicial"] = simplicial;
    r["top_dimensional"] = c.is_top_dimensional();
    r["edges"] = edge_report(c);
    bool regular = false;
    if (simplicial) {
        regular = is_regular(c);
        r["regular"] = regular;
        if (c.is_top_dimensional())
            r["lattice_volume"] = integer_to_json(lattice_volume(c));
    }
    bool pass = psd && simplicial && regular;
    r["ok"] = pass;
    return {r, pass};
}

Outcome cone_volume(const std::string& file)
{
    MarkedCone c = load_cone(file);
    auto v = volume_function(c);
    json r = {{"command", "cone volume"},
              {"g", v.g},
              {"N", v.n},
              {"lattice_volume", integer_to_json(v.vol)},
              {"F", poly_to_json(v.F)},
              {"F_text", v.F.to_string()}};
    return {r, true};
}

Outcome ma_verify(const std::string& file, bool symbolic, bool randomized, const RunConfig& cfg)
{
    auto v = volume_function(load_cone(file));
    MaMode mode = symbolic ? MaMode::symbolic
                           : (randomized ? MaMode::randomized : (v.n <= 3 ? MaMode::symbolic : MaMode::randomized));
    auto rep = verify_ma_identity(v, mode, cfg.trials, cfg.seed, cfg.threads);
    return {ma_report_to_json(rep, v), rep.holds};
}

Outcome ke_test(const std::string& file)
{
    MarkedCone c = load_cone(file);
    const auto& mats = c.generators();
    MultiPoly defect = ke_defect(mats);
    json r = {{"command", "ke test"},
              {"g", c.g()},
              {"D", integer_to_json(abs(determinant(c.coordinate_matrix())) * pow(c.scale(), static_cast<unsigned>(c.dim())))},
              {"ke_point", defect.is_zero()},
              {"defect_terms", defect.size()}};
    return {r, defect.is_zero()};
}

Outcome residue(const std::string& file, std::size_t d)
{
    auto v = volume_function(load_cone(file));
    auto rc = residue_chain(v, d);
    json r = residue_to_json(rc);
    bool bounds = residue_bounds_hold(rc);
    r["bounds_hold"] = bounds;
    return {r, bounds};
}

Outcome intersect(const std::string& file, const std::string& edges)
{
    auto idx = parse_index_list(edges);
    json doc;
    if (is_fan_document(file, doc)) {
        Fan f = fan_from_json(doc);
        auto rays = f.rays();
        std::vector<SymIntMat> chosen;
        for (auto i : idx) {
            if (i >= rays.size())
                throw DomainError("ray index " + std::to_string(i) + " out of range (fan has " +
                                  std::to_string(rays.size()) + " rays)");
            chosen.push_back(rays[i]);
        }
        int value = toric_full_intersection(f, chosen);
        json rj = json::array();
        for (const auto& ray : rays)
            rj.push_back(sym_mat_to_json(ray));
        return {{{"command", "intersect"}, {"toric_intersection", value}, {"rays", std::move(rj)}}, true};
    }
    MarkedCone c = load_cone(file);
    auto v = intersection_vanishing(c, idx);
    json r = {{"command", "intersect"}, {"d", idx.size()}, {"verdict", to_string(v.value)}};
    r["reason"] = v.reason ? json(to_string(*v.reason)) : json(nullptr);
    r["chi"] = v.chi ? chi_to_json(*v.chi) : json(nullptr);
    return {r, true};
}

Outcome fan_check(const std::string& file, const RunConfig& cfg)
{
    Fan f = fan_from_json(read_json_file(file));
    auto rep = is_fan(f.cones(), cfg.threads);
    json violations = json::array();
    for (const auto& v : rep.violations)
        violations.push_back({{"first", v.first}, {"second", v.second}, {"witness", rat_matrix_to_json(v.witness)}});
    json r = {{"command", "fan check"},
              {"is_fan", rep.is_fan},
              {"cones", f.cones().size()},
              {"rays", f.rays().size()},
              {"regular", f.is_regular()},
              {"violations", std::move(violations)}};
    return {r, rep.is_fan};
}

Outcome separable(const std::string& fan_file, const std::string& group_file)
{
    std::vector<MarkedCone> cones;
    json doc;
    if (is_fan_document(fan_file, doc))
        cones = fan_from_json(doc).cones();
    else
        cones.push_back(load_cone(fan_file));
    auto group = group_from_json(read_json_file(group_file));
    auto rep = is_separable(cones, group);
    json violations = json::array();
    for (const auto& v : rep.violations)
        violations.push_back({{"cone", v.cone}, {"element", v.element}});
    json r = {{"command", "separable"},
              {"separable", rep.separable},
              {"group_elements", group.size()},
              {"certificate", "checked against the listed group elements only"},
              {"violations", std::move(violations)}};
    return {r, rep.separable};
}

CuspNilpotent nilpotent_from(const json& doc, double tol)
{
    auto g = doc.at("g").get<Eigen::Index>();
    auto k = doc.contains("k") ? doc.at("k").get<Eigen::Index>() : Eigen::Index{0};
    if (doc.contains("u"))
        return CuspNilpotent(g, k, real_matrix_from_json(doc.at("u")));
    return CuspNilpotent::from_matrix(g, k, real_matrix_from_json(doc.at("N")), tol);
}

Outcome hodge(const std::string& check, const std::string& file, double tol)
{
    json doc = read_json_file(file);
    json r = {{"command", "hodge"}, {"check", check}, {"tol", tol}};
    bool holds = false;
    if (check == "siegel") {
        holds = siegel_membership(complex_from_json(doc.at("tau")), tol);
    } else if (check == "riemann") {
        ComplexMat F = doc.contains("F") ? complex_from_json(doc.at("F"))
                                         : filtration_from_tau(complex_from_json(doc.at("tau")), tol);
        holds = riemann_check(F, tol);
    } else if (check == "cone") {
        holds = positive_cone_membership(nilpotent_from(doc, tol), tol);
    } else if (check == "weight") {
        auto w = weight_filtration(nilpotent_from(doc, tol), tol);
        r["dim_image"] = w.dim_image;
        r["dim_kernel"] = w.dim_kernel;
        holds = w.image_in_kernel;
    } else if (check == "orbit") {
        auto n = nilpotent_from(doc, tol);
        ComplexMat Fdual = doc.contains("Fdual")
                               ? complex_from_json(doc.at("Fdual"))
                               : dual_filtration(n.g(), doc.contains("tau_boundary")
                                                            ? complex_from_json(doc.at("tau_boundary"))
                                                            : ComplexMat(ComplexMat::Identity(n.k(), n.k()) *
                                                                         std::complex<double>(0.0, 1.0)));
        holds = nilpotent_orbit_check(Fdual, n, tol);
    } else if (check == "block") {
        holds = block_volume_identity(complex_from_json(doc.at("tau_prime")), complex_from_json(doc.at("Z")),
                                      complex_from_json(doc.at("S")), tol);
    } else {
        throw DomainError("unknown hodge check '" + check + "'");
    }
    r["holds"] = holds;
    return {r, holds};
}

Outcome catalog_listing()
{
    json entries = json::array();
    for (const auto& e : catalog_list())
        entries.push_back({{"name", e.name},
                           {"g", e.cone.g()},
                           {"scale", integer_to_json(e.cone.scale())},
                           {"generators", e.cone.size()},
                           {"provenance", e.provenance}});
    return {{{"command", "catalog list"}, {"catalog", std::move(entries)}, {"level_family", "principal-g2-level-<n>"}}, true};
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact cone, volume-function and Monge-Ampere checks for toroidal compactifications of Siegel "
                 "varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::size_t trials = 0, threads = 0;
    double tol = 0;
    std::string output, config_path;
    auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized checks");
    auto* trials_opt = app.add_option("--trials", trials, "Number of random points");
    auto* tol_opt = app.add_option("--tol", tol, "Numeric tolerance for period-domain checks");
    auto* threads_opt = app.add_option("--threads", threads, "Worker threads");
    auto* output_opt = app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path, std::string("JSON run configuration (default: $") + config_env_var + ")");

    std::string file, file2, subcheck, edges;
    std::size_t depth = 0;
    bool symbolic = false, randomized = false;

    auto* cone = app.add_subcommand("cone", "Single-cone checks")->require_subcommand(1)->fallthrough();
    auto* cone_check_cmd = cone->add_subcommand("check", "Invariants, regularity and edge classes")->fallthrough();
    cone_check_cmd->add_option("file", file, "Cone spec file or catalog name")->required();
    auto* cone_volume_cmd = cone->add_subcommand("volume", "Lattice volume and volume function")->fallthrough();
    cone_volume_cmd->add_option("file", file, "Cone spec file or catalog name")->required();

    auto* ma = app.add_subcommand("ma", "Monge-Ampere identity")->require_subcommand(1)->fallthrough();
    auto* ma_verify_cmd = ma->add_subcommand("verify", "Verify det T = c F^((g+1)(g-1))")->fallthrough();
    ma_verify_cmd->add_option("file", file, "Cone spec file or catalog name")->required();
    auto* sym_flag = ma_verify_cmd->add_flag("--symbolic", symbolic, "Exact polynomial comparison");
    auto* rnd_flag = ma_verify_cmd->add_flag("--randomized", randomized, "Exact comparison at random rational points");
    sym_flag->excludes(rnd_flag);

    auto* ke = app.add_subcommand("ke", "KE-characteristic variety")->require_subcommand(1)->fallthrough();
    auto* ke_test_cmd = ke->add_subcommand("test", "Integral-point membership of the generators")->fallthrough();
    ke_test_cmd->add_option("file", file, "Cone spec file or catalog name")->required();

    auto* residue_cmd = app.add_subcommand("residue", "Residue chain and integrand")->fallthrough();
    residue_cmd->add_option("file", file, "Cone spec file or catalog name")->required();
    residue_cmd->add_option("--d", depth, "Number of leading marked divisors")->required();

    auto* intersect_cmd = app.add_subcommand("intersect", "Boundary intersection verdicts")->fallthrough();
    intersect_cmd->add_option("file", file, "Cone spec, fan file or catalog name")->required();
    intersect_cmd->add_option("--edges", edges, "Comma-separated 0-based edge (or fan ray) indices")->required();

    auto* fan = app.add_subcommand("fan", "Fan checks")->require_subcommand(1)->fallthrough();
    auto* fan_check_cmd = fan->add_subcommand("check", "Pairwise face-intersection check")->fallthrough();
    fan_check_cmd->add_option("file", file, "Fan file")->required();

    auto* separable_cmd = app.add_subcommand("separable", "Separability against listed group elements")->fallthrough();
    separable_cmd->add_option("fanfile", file, "Fan file, cone file or catalog name")->required();
    separable_cmd->add_option("groupfile", file2, "Group element file")->required();

    auto* hodge_cmd = app.add_subcommand("hodge", "Period-domain checks")->fallthrough();
    hodge_cmd->add_option("subcheck", subcheck, "siegel | riemann | cone | weight | orbit | block")
        ->required()
        ->check(CLI::IsMember({"siegel", "riemann", "cone", "weight", "orbit", "block"}));
    hodge_cmd->add_option("file", file, "Input JSON file")->required();

    auto* catalog = app.add_subcommand("catalog", "Builtin cones")->require_subcommand(1)->fallthrough();
    auto* catalog_list_cmd = catalog->add_subcommand("list", "List builtin cones")->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            cfg = load_run_config(config_path);
        } else if (const char* env = std::getenv(config_env_var); env && *env) {
            cfg = load_run_config(env);
        }
        if (seed_opt->count())
            cfg.seed = seed;
        if (trials_opt->count())
            cfg.trials = trials;
        if (tol_opt->count())
            cfg.tol = tol;
        if (threads_opt->count())
            cfg.threads = threads;
        if (output_opt->count())
            cfg.output = output == "json" ? OutputFormat::json : OutputFormat::text;
        cfg.validate();

        Outcome result;
        if (cone_check_cmd->parsed())
            result = cone_check(file);
        else if (cone_volume_cmd->parsed())
            result = cone_volume(file);
        else if (ma_verify_cmd->parsed())
            result = ma_verify(file, symbolic, randomized, cfg);
        else if (ke_test_cmd->parsed())
            result = ke_test(file);
        else if (residue_cmd->parsed())
            result = residue(file, depth);
        else if (intersect_cmd->parsed())
            result = intersect(file, edges);
        else if (fan_check_cmd->parsed())
            result = fan_check(file, cfg);
        else if (separable_cmd->parsed())
            result = separable(file, file2);
        else if (hodge_cmd->parsed())
            result = hodge(subcheck, file, cfg.tol);
        else if (catalog_list_cmd->parsed())
            result = catalog_listing();
        else
            throw DomainError("no command given");

        render(result.report, cfg.output, out);
        return result.pass ? exit_code::pass : exit_code::property_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const json::exception& e) {
        err << "error: invalid input: " << e.what() << '\n';
    }
    return exit_code::input_error;
}

} // namespace toroidal
