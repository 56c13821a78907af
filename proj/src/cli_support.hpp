#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

namespace bergman::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;   // verification or convergence failure
inline constexpr int kExitDomainError = 2;   // point outside a domain / branch cut
inline constexpr int kExitUnsupported = 3;   // unsupported dimension or family
inline constexpr int kExitUsage = 64;        // bad flags, tokens, or input files

// Parsed --config file. The file may name a space ("family" plus optional
// "dim" and one of "alpha"/"v"/"q") and carry quadrature settings, either
// nested under "quadrature" or flat at the top level.
struct LoadedConfig {
    QuadratureConfig quadrature;
    std::optional<SpaceSpec> space;
    bool seed_set = false;  // the file pinned a seed explicitly
};

// Merge a JSON config file into `base`. Recognized quadrature keys: rel_tol,
// abs_tol, max_evals, mc_samples, seed. Unknown keys raise
// std::invalid_argument with the closest recognized name.
LoadedConfig load_config(const std::string& path, QuadratureConfig base);

// Numeric CSV rows: '#'-prefixed lines are skipped, one leading non-numeric
// header line is tolerated, every data row must have exactly `width` fields.
std::vector<std::vector<double>> read_csv_rows(const std::string& path, size_t width);

// "1,2,3" -> {1,2,3}; throws std::invalid_argument on malformed input.
std::vector<double> parse_numbers(const std::string& csv);

std::string iso8601_utc_now();

// Lossless text form of a double for CSV cells (%.17g, "inf"/"nan" spelled out).
std::string num_field(double x);

// Space from CLI flags. Families with a parameter default to alpha = 0; the
// half-plane power and Bergman-Selberg families require an explicit value.
SpaceSpec space_from_cli(const std::string& token, std::optional<int> n,
                         std::optional<double> param);

// Space from verify-selector words, e.g. {"bergman-selberg", "q=1"} or
// {"paraboloid", "n=2", "alpha=0.5"}.
SpaceSpec space_from_selector(const std::vector<std::string>& words);

// Write to the path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace bergman::cli
