#ifndef TOROIDAL_CLI_HPP
#define TOROIDAL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toroidal {

enum class OutputFormat { json, text };

struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    double tol = 1e-9;
    std::size_t threads = 1;
    OutputFormat output = OutputFormat::json;

    // Throws DomainError unless trials >= 1, tol > 0 and threads >= 1.
    void validate() const;
};

// Environment variable naming a JSON file with RunConfig defaults.
inline constexpr const char* config_env_var = "TOROIDAL_CONFIG";

// Merges the keys present in a JSON config file over `base`.
RunConfig load_run_config(const std::string& path, RunConfig base = {});

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int property_failure = 1;
inline constexpr int input_error = 2;
} // namespace exit_code

// Runs one CLI invocation. args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace toroidal

#endif
