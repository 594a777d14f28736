#include "toroidal/cli.hpp"
#include "toroidal/json_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toroidal;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    auto dir = std::filesystem::temp_directory_path() / "toroidal-cli-tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path;
}

const char* principal_g2_text = R"({"g":2, "scale":1,
  "generators":[[[1,0],[0,0]], [[0,0],[0,1]], [[1,-1],[-1,1]]],
  "labels":["z11","z22","z12"]})";

} // namespace

TEST_CASE("ma verify on a catalog cone")
{
    auto r = run({"ma", "verify", "principal-g2", "--symbolic"});
    CHECK(r.code == exit_code::pass);
    auto j = json::parse(r.out);
    CHECK(j.at("holds") == true);
    CHECK(j.at("mode") == "symbolic");
    auto rnd = run({"ma", "verify", "principal-g3", "--randomized", "--trials", "5", "--seed", "3"});
    CHECK(rnd.code == exit_code::pass);
    CHECK(json::parse(rnd.out).at("seed") == 3);
    CHECK(run({"ma", "verify", "principal-g2", "--symbolic", "--randomized"}).code == exit_code::input_error);
}

TEST_CASE("residue report")
{
    auto r = run({"residue", "principal-g2", "--d", "1"});
    CHECK(r.code == exit_code::pass);
    auto j = json::parse(r.out);
    CHECK(j.at("g_d").at("terms").empty());
    CHECK(j.at("d") == 1);
    CHECK(j.at("chi").at("constant") == "9/8");
    CHECK(j.at("chi").at("denominator_exp") == 4);
    CHECK(run({"residue", "principal-g2", "--d", "3"}).code == exit_code::input_error);
}

TEST_CASE("cone commands read files")
{
    auto path = write_temp("g2.json", principal_g2_text);
    auto check = run({"cone", "check", path.string()});
    CHECK(check.code == exit_code::pass);
    CHECK(json::parse(check.out).at("regular") == true);
    auto vol = run({"cone", "volume", path.string()});
    CHECK(vol.code == exit_code::pass);
    CHECK(json::parse(vol.out).at("lattice_volume") == 1);
    auto ke = run({"ke", "test", path.string()});
    CHECK(ke.code == exit_code::pass);
}

TEST_CASE("cone check reports property failures with exit 1")
{
    auto coarse = write_temp("coarse.json", R"({"g":2,"scale":1,"generators":[[[2,0],[0,0]],[[1,1],[1,1]],[[0,0],[0,1]]]})");
    auto r = run({"cone", "check", coarse.string()});
    CHECK(r.code == exit_code::property_failure);
    CHECK(json::parse(r.out).at("regular") == false);
    auto neg = write_temp("neg.json", R"({"g":2,"scale":1,"generators":[[[-1,0],[0,0]]]})");
    auto n = run({"cone", "check", neg.string()});
    CHECK(n.code == exit_code::property_failure);
    CHECK(json::parse(n.out).at("psd") == false);
}

TEST_CASE("input errors exit 2")
{
    auto bad = write_temp("bad.json", "{\"g\": 2, \"generators\": [");
    auto r = run({"cone", "check", bad.string()});
    CHECK(r.code == exit_code::input_error);
    CHECK(r.err.find("byte") != std::string::npos);
    CHECK(run({"cone", "check", "/nonexistent.json"}).code == exit_code::input_error);
    CHECK(run({"frobnicate"}).code == exit_code::input_error);
    CHECK(run({}).code == exit_code::input_error);
    CHECK(run({"catalog", "list", "--trials", "0"}).code == exit_code::input_error);
    CHECK(run({"catalog", "list", "--output", "yaml"}).code == exit_code::input_error);
    CHECK(run({"intersect", "principal-g3", "--edges", "0,x"}).code == exit_code::input_error);
}

TEST_CASE("help exits 0")
{
    auto r = run({"--help"});
    CHECK(r.code == exit_code::pass);
    CHECK(r.out.find("catalog") != std::string::npos);
}

TEST_CASE("intersect on cones and fans")
{
    auto r = run({"intersect", "principal-g3", "--edges", "0"});
    CHECK(r.code == exit_code::pass);
    CHECK(json::parse(r.out).at("verdict") == "unknown");
    auto fan = write_temp("fan.json", R"({"g":2,"scale":1,"cones":[
        {"generators":[[[1,0],[0,0]],[[0,0],[0,1]],[[1,-1],[-1,1]]]},
        {"generators":[[[1,0],[0,0]],[[1,1],[1,1]],[[0,0],[0,1]]]}]})");
    auto one = run({"intersect", fan.string(), "--edges", "0,1,2"});
    CHECK(one.code == exit_code::pass);
    CHECK(json::parse(one.out).at("toric_intersection") == 1);
    auto zero = run({"intersect", fan.string(), "--edges", "0,2,3"});
    CHECK(json::parse(zero.out).at("toric_intersection") == 0);
    auto f = run({"fan", "check", fan.string()});
    CHECK(f.code == exit_code::pass);
    CHECK(json::parse(f.out).at("is_fan") == true);
}

TEST_CASE("separable and hodge commands")
{
    auto group = write_temp("swap.json", R"({"matrix":[[0,1],[1,0]]})");
    auto s = run({"separable", "principal-g2", group.string()});
    CHECK(s.code == exit_code::property_failure);
    CHECK(json::parse(s.out).at("separable") == false);
    auto tau = write_temp("tau.json", R"({"tau":{"re":[[0,0.5],[0.5,0]],"im":[[1,0],[0,2]]}})");
    CHECK(run({"hodge", "siegel", tau.string(), "--tol", "1e-9"}).code == exit_code::pass);
    CHECK(run({"hodge", "riemann", tau.string()}).code == exit_code::pass);
    auto realtau = write_temp("real.json", R"({"tau":{"re":[[1,0],[0,1]],"im":[[0,0],[0,0]]}})");
    CHECK(run({"hodge", "siegel", realtau.string()}).code == exit_code::property_failure);
    auto nil = write_temp("nil.json", R"({"g":3,"k":1,"u":[[2,1],[1,2]]})");
    CHECK(run({"hodge", "cone", nil.string()}).code == exit_code::pass);
    CHECK(run({"hodge", "weight", nil.string()}).code == exit_code::pass);
    CHECK(run({"hodge", "orbit", nil.string()}).code == exit_code::pass);
    auto block = write_temp("block.json", R"({"tau_prime":{"re":[[0,0],[0,0]],"im":[[1,0],[0,1]]},
        "Z":{"re":[[0.3]],"im":[[1.5]]}, "S":{"re":[[0.2],[0.1]],"im":[[0.4],[-0.3]]}})");
    CHECK(run({"hodge", "block", block.string()}).code == exit_code::pass);
    CHECK(run({"hodge", "nope", block.string()}).code == exit_code::input_error);
}

TEST_CASE("text output renders the same report")
{
    auto r = run({"catalog", "list", "--output", "text"});
    CHECK(r.code == exit_code::pass);
    CHECK(r.out.find("command: catalog list") != std::string::npos);
}

TEST_CASE("config file and environment variable")
{
    auto cfg = write_temp("cfg.json", R"({"seed": 11, "trials": 4, "output": "text"})");
    auto r = run({"ma", "verify", "principal-g2", "--randomized", "--config", cfg.string()});
    CHECK(r.code == exit_code::pass);
    CHECK(r.out.find("seed: 11") != std::string::npos);
    auto over = run({"ma", "verify", "principal-g2", "--randomized", "--config", cfg.string(), "--seed", "12"});
    CHECK(over.out.find("seed: 12") != std::string::npos);
    auto badcfg = write_temp("badcfg.json", R"({"threads": 0})");
    CHECK(run({"catalog", "list", "--config", badcfg.string()}).code == exit_code::input_error);
    ::setenv(config_env_var, cfg.c_str(), 1);
    auto env = run({"ma", "verify", "principal-g2", "--randomized"});
    ::unsetenv(config_env_var);
    CHECK(env.out.find("seed: 11") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and thread counts")
{
    auto a = run({"ma", "verify", "principal-g3", "--randomized", "--trials", "6", "--seed", "2", "--threads", "1"});
    auto b = run({"ma", "verify", "principal-g3", "--randomized", "--trials", "6", "--seed", "2", "--threads", "3"});
    auto c = run({"ma", "verify", "principal-g3", "--randomized", "--trials", "6", "--seed", "2", "--threads", "3"});
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    auto fan = write_temp("fan3.json", R"({"g":2,"scale":1,"cones":[
        {"generators":[[[1,0],[0,0]],[[0,0],[0,1]],[[1,-1],[-1,1]]]},
        {"generators":[[[1,0],[0,1]],[[2,-1],[-1,1]],[[0,0],[0,1]]]},
        {"generators":[[[1,0],[0,0]],[[1,1],[1,1]],[[0,0],[0,1]]]}]})");
    auto f1 = run({"fan", "check", fan.string(), "--threads", "1"});
    auto f4 = run({"fan", "check", fan.string(), "--threads", "4"});
    CHECK(f1.code == exit_code::property_failure);
    CHECK(f1.out == f4.out);
}
