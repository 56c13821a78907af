#include "cli_support.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace bergman::cli {

namespace {
size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= b.size(); ++j) {
            const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

bool parse_double(const std::string& s, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}
}  // namespace

namespace {
[[noreturn]] void unknown_key(const std::string& key, const std::vector<std::string>& known) {
    std::string best = known.front();
    size_t best_d = std::string::npos;
    for (const auto& k : known) {
        const size_t d = edit_distance(key, k);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    throw std::invalid_argument("config key '" + key + "' is not recognized; did you mean '" +
                                best + "'?");
}

// Applies one quadrature setting; returns false if the key is not one.
bool apply_quad_key(const std::string& key, const nlohmann::json& value, LoadedConfig& out) {
    if (key == "rel_tol") {
        out.quadrature.rel_tol = value.get<double>();
    } else if (key == "abs_tol") {
        out.quadrature.abs_tol = value.get<double>();
    } else if (key == "max_evals") {
        out.quadrature.max_evals = value.get<long>();
    } else if (key == "mc_samples") {
        out.quadrature.mc_samples = value.get<long>();
    } else if (key == "seed") {
        out.quadrature.seed = value.get<std::uint64_t>();
        out.seed_set = true;
    } else {
        return false;
    }
    return true;
}
}  // namespace

LoadedConfig load_config(const std::string& path, QuadratureConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config file must hold a JSON object");

    LoadedConfig out;
    out.quadrature = base;
    const std::vector<std::string> quad_keys = {"rel_tol", "abs_tol", "max_evals", "mc_samples",
                                                "seed"};
    std::vector<std::string> top_keys = {"family", "dim", "alpha", "v", "q", "quadrature"};
    top_keys.insert(top_keys.end(), quad_keys.begin(), quad_keys.end());

    std::optional<std::string> family;
    std::optional<int> dim;
    std::optional<double> param;
    int param_keys = 0;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "family") {
                family = value.get<std::string>();
            } else if (key == "dim") {
                dim = value.get<int>();
            } else if (key == "alpha" || key == "v" || key == "q") {
                param = value.get<double>();
                ++param_keys;
            } else if (key == "quadrature") {
                if (!value.is_object())
                    throw std::invalid_argument("config field 'quadrature' must be an object");
                for (const auto& [qk, qv] : value.items())
                    if (!apply_quad_key(qk, qv, out)) unknown_key(qk, quad_keys);
            } else if (!apply_quad_key(key, value, out)) {
                unknown_key(key, top_keys);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file '" + path + "': wrong field type: " + e.what());
    }
    if (param_keys > 1)
        throw std::invalid_argument("config: give at most one of alpha, v, q");
    if (!family && (dim || param))
        throw std::invalid_argument("config: dim/alpha/v/q need a 'family' field");
    if (family) out.space = space_from_cli(*family, dim, param);

    if (!(out.quadrature.rel_tol > 0.0) || !(out.quadrature.abs_tol > 0.0))
        throw std::invalid_argument("config: rel_tol and abs_tol must be positive");
    if (out.quadrature.max_evals < 100 || out.quadrature.mc_samples < 2)
        throw std::invalid_argument("config: max_evals/mc_samples too small");
    return out;
}

std::vector<double> parse_numbers(const std::string& csv) {
    std::vector<double> out;
    for (const auto& f : split_fields(csv)) {
        double x;
        if (!parse_double(f, x))
            throw std::invalid_argument("'" + f + "' is not a number");
        out.push_back(x);
    }
    return out;
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path, size_t width) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open points file '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    size_t lineno = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_fields(line);
        std::vector<double> row;
        bool numeric = true;
        for (const auto& f : fields) {
            double x;
            if (!parse_double(f, x)) {
                numeric = false;
                break;
            }
            row.push_back(x);
        }
        if (!numeric) {
            if (!saw_data) continue;  // header row
            throw std::invalid_argument("points file line " + std::to_string(lineno) +
                                        ": non-numeric field");
        }
        if (row.size() != width)
            throw std::invalid_argument("points file line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(width) + " fields, got " +
                                        std::to_string(row.size()));
        saw_data = true;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("points file '" + path + "' has no data rows");
    return rows;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string num_field(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

SpaceSpec space_from_cli(const std::string& token, std::optional<int> n,
                         std::optional<double> param) {
    const auto fam = family_from_token(token);
    if (!fam)
        throw std::invalid_argument(
            "unknown space '" + token +
            "'; expected unweighted-halfplane, halfplane-power, bergman-selberg, paraboloid, "
            "lorentz, siegel, or ball");
    switch (*fam) {
        case Family::UnweightedHalfPlane:
            if (param) throw std::invalid_argument("unweighted-halfplane takes no parameter");
            return SpaceSpec::unweighted_half_plane();
        case Family::HalfPlanePower:
            if (!param) throw std::invalid_argument("halfplane-power requires --param (v > 0)");
            return SpaceSpec::half_plane_power(*param);
        case Family::BergmanSelberg:
            if (!param) throw std::invalid_argument("bergman-selberg requires --param (q > 1/2)");
            return SpaceSpec::bergman_selberg(*param);
        case Family::ParaboloidTube:
            return SpaceSpec::paraboloid_tube(n.value_or(2), param.value_or(0.0));
        case Family::LorentzTube:
            return SpaceSpec::lorentz_tube(n.value_or(2), param.value_or(0.0));
        case Family::SiegelSpace:
            return SpaceSpec::siegel(n.value_or(1), param.value_or(0.0));
        case Family::BallSpace:
            return SpaceSpec::ball(n.value_or(1), param.value_or(0.0));
    }
    throw std::logic_error("space_from_cli: unhandled family");
}

SpaceSpec space_from_selector(const std::vector<std::string>& words) {
    if (words.empty()) throw std::invalid_argument("empty space selector");
    std::optional<int> n;
    std::optional<double> param;
    for (size_t k = 1; k < words.size(); ++k) {
        const auto& w = words[k];
        const auto eq = w.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("selector token '" + w + "' is not key=value");
        const std::string key = w.substr(0, eq);
        const std::string val = w.substr(eq + 1);
        double x;
        if (!parse_double(val, x))
            throw std::invalid_argument("selector value '" + val + "' is not a number");
        if (key == "n") {
            n = static_cast<int>(x);
        } else if (key == "alpha" || key == "v" || key == "q" || key == "param") {
            param = x;
        } else {
            throw std::invalid_argument("selector key '" + key + "' is not one of n, alpha, v, q");
        }
    }
    return space_from_cli(words[0], n, param);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
}

}  // namespace bergman::cli
