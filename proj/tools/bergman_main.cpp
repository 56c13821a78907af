#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bergman/laplace_kernel.hpp"
#include "bergman/transforms.hpp"
#include "bergman/verify.hpp"
#include "bergman/weights.hpp"
#include "cli_support.hpp"

namespace {

using namespace bergman;

struct GlobalOpts {
    std::string config_path;
    std::string output_path;
    double tol = -1.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool no_timestamp = false;
    // space named in the config file, if any (populated by make_config)
    mutable std::optional<SpaceSpec> config_space;

    QuadratureConfig make_config() const {
        QuadratureConfig cfg;
        bool file_seed = false;
        if (!config_path.empty()) {
            const auto loaded = cli::load_config(config_path, cfg);
            cfg = loaded.quadrature;
            config_space = loaded.space;
            file_seed = loaded.seed_set;
        }
        if (tol > 0.0) cfg.rel_tol = tol;
        if (seed_given || !file_seed) cfg.seed = seed;
        return cfg;
    }

    // --space wins over the config file's space block.
    SpaceSpec resolve_space(const std::string& token, std::optional<int> n,
                            std::optional<double> param) const {
        if (!token.empty()) return cli::space_from_cli(token, n, param);
        if (n || param)
            throw std::invalid_argument("--n/--param need --space (or name the space in --config)");
        if (config_space) return *config_space;
        throw std::invalid_argument(
            "no space selected: use --space or a config file with a 'family' field");
    }
};

std::string csv_header(const GlobalOpts& g, const std::string& columns) {
    std::string head;
    if (!g.no_timestamp) head += "# generated: " + cli::iso8601_utc_now() + "\n";
    head += columns + "\n";
    return head;
}

CPoint row_to_point(const std::vector<double>& row, size_t offset, int n) {
    CPoint z(n);
    for (int k = 0; k < n; ++k) z[k] = Complex(row[offset + 2 * k], row[offset + 2 * k + 1]);
    return z;
}

std::vector<std::vector<double>> gather_rows(const std::string& points_path,
                                             const std::string& inline_values, size_t width,
                                             const char* what) {
    if (!points_path.empty() && !inline_values.empty())
        throw std::invalid_argument(std::string("give either --points or ") + what + ", not both");
    if (!points_path.empty()) return cli::read_csv_rows(points_path, width);
    if (!inline_values.empty()) {
        auto row = cli::parse_numbers(inline_values);
        if (row.size() != width)
            throw std::invalid_argument(std::string(what) + " needs exactly " +
                                        std::to_string(width) + " comma-separated numbers");
        return {row};
    }
    throw std::invalid_argument(std::string("missing input: use --points FILE or ") + what);
}

int run_kernel(const GlobalOpts& g, const QuadratureConfig& cfg, const SpaceSpec& space,
               const std::string& mode, const std::string& points_path, const std::string& pair) {
    const int n = space.dim;
    const auto rows = gather_rows(points_path, pair, 4 * static_cast<size_t>(n), "--pair");

    std::ostringstream cols;
    for (int k = 0; k < n; ++k) cols << "z_re_" << k << ",z_im_" << k << ",";
    for (int k = 0; k < n; ++k) cols << "w_re_" << k << ",w_im_" << k << ",";
    cols << "k_re,k_im,err_est";
    std::string out = csv_header(g, cols.str());

    for (size_t r = 0; r < rows.size(); ++r) {
        const CPoint z = row_to_point(rows[r], 0, n);
        const CPoint w = row_to_point(rows[r], 2 * n, n);
        Complex val;
        double err = 0.0;
        try {
            if (mode == "closed") {
                val = kernel_closed(space, z, w);
            } else {
                QuadratureConfig qc = cfg;
                qc.seed = cfg.seed + 7919 * (r + 1);
                const auto res = kernel_numeric(space, z, w, qc);
                val = res.value;
                err = res.error_estimate;
            }
        } catch (const std::domain_error& e) {
            throw std::domain_error("row " + std::to_string(r + 1) + ": " + e.what());
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("row " + std::to_string(r + 1) + ": " + e.what(), e.partial,
                                   e.error_bound);
        }
        std::string line;
        for (double x : rows[r]) line += cli::num_field(x) + ",";
        line += cli::num_field(val.real()) + "," + cli::num_field(val.imag()) + ",";
        if (mode != "closed") line += cli::num_field(err);  // err_est empty for closed forms
        out += line + "\n";
    }
    cli::write_text(g.output_path, out);
    return cli::kExitOk;
}

int run_symbol(const GlobalOpts& g, const QuadratureConfig& cfg, const SpaceSpec& space,
               const std::string& mode, const std::string& points_path,
               const std::string& point) {
    if (!space.tube_eligible())
        throw UnsupportedError("symbol: " + space.name() + " is not tube-eligible; use pullback");
    const int n = space.dim;
    const auto rows = gather_rows(points_path, point, static_cast<size_t>(n), "--point");

    std::ostringstream cols;
    for (int k = 0; k < n; ++k) cols << "t_" << k << ",";
    cols << "i_closed,i_numeric,rel_gap";
    std::string out = csv_header(g, cols.str());

    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& t = rows[r];
        const bool supported = in_support(space, t);
        double closed = std::numeric_limits<double>::quiet_NaN();
        double numeric = std::numeric_limits<double>::quiet_NaN();
        double gap = std::numeric_limits<double>::quiet_NaN();
        if (mode == "closed" || mode == "both") closed = symbol_closed(space, t);
        if (mode == "numeric" || mode == "both") {
            QuadratureConfig qc = cfg;
            qc.seed = cfg.seed + 7919 * (r + 1);
            const auto res = symbol_numeric(space, t, qc);
            if (!res.converged)
                throw ConvergenceError("row " + std::to_string(r + 1) +
                                           ": symbol quadrature missed tolerance",
                                       res.value, res.error_estimate);
            numeric = res.value.real();
        }
        if (mode == "both")
            gap = supported ? std::abs(closed - numeric) / std::max(std::abs(closed), 1e-300) : 0.0;
        std::string line;
        for (double x : t) line += cli::num_field(x) + ",";
        line += cli::num_field(closed) + "," + cli::num_field(numeric) + "," + cli::num_field(gap);
        out += line + "\n";
    }
    cli::write_text(g.output_path, out);
    return cli::kExitOk;
}

int run_verify(const GlobalOpts& g, const std::vector<std::string>& target,
               const std::string& suite_csv) {
    const QuadratureConfig cfg = g.make_config();
    const SuiteSelection sel =
        suite_csv.empty() ? SuiteSelection{} : SuiteSelection::parse(suite_csv);

    std::vector<CheckReport> reports;
    if (target.size() == 1 && target[0] == "all") {
        reports = run_default_suite(sel, cfg);
    } else if (!target.empty()) {
        reports = run_suite_for(cli::space_from_selector(target), sel, cfg);
    } else if (g.config_space) {
        reports = run_suite_for(*g.config_space, sel, cfg);
    } else {
        reports = run_default_suite(sel, cfg);
    }
    if (reports.empty()) throw std::invalid_argument("selection produced no checks");

    cli::write_text(g.output_path, reports_to_json(reports));

    long failed = 0;
    for (const auto& r : reports)
        if (!r.passed) ++failed;
    std::cerr << reports.size() << " checks, " << failed << " failed\n";
    for (const auto& r : reports)
        if (!r.passed)
            std::cerr << "  FAIL " << r.check_name << " [" << r.space
                      << "] max_rel_err=" << r.max_rel_err << " tol=" << r.tolerance << "\n";
    return failed == 0 ? cli::kExitOk : cli::kExitCheckFailed;
}

int run_transform(const GlobalOpts& g, const std::string& map_name, int n,
                  const std::string& direction, const std::string& points_path,
                  const std::string& point) {
    Biholomorphism phi;
    if (map_name == "siegel-to-tube") {
        phi = phi_siegel_to_paraboloid_tube(n);
    } else if (map_name == "ball-to-siegel") {
        phi = cayley_ball_to_siegel(n);
    } else if (map_name == "ball-to-tube") {
        phi = compose(phi_siegel_to_paraboloid_tube(n), cayley_ball_to_siegel(n));
    } else {
        throw std::invalid_argument("unknown map '" + map_name +
                                    "'; expected siegel-to-tube, ball-to-siegel, or ball-to-tube");
    }
    const bool forward = direction == "forward";
    const auto rows = gather_rows(points_path, point, 2 * static_cast<size_t>(n), "--point");

    std::ostringstream cols;
    for (int k = 0; k < n; ++k) cols << "in_re_" << k << ",in_im_" << k << ",";
    for (int k = 0; k < n; ++k) cols << "out_re_" << k << ",out_im_" << k << ",";
    cols << "jac_re,jac_im";
    std::string out = csv_header(g, cols.str());

    for (size_t r = 0; r < rows.size(); ++r) {
        const CPoint z = row_to_point(rows[r], 0, n);
        const DomainDesc& dom = forward ? phi.source : phi.target;
        if (!dom.contains_point(z))
            throw std::domain_error("row " + std::to_string(r + 1) + ": point outside " +
                                    dom.name());
        const CPoint img = forward ? phi.forward(z) : phi.inverse(z);
        const Complex jac = forward ? phi.jac_det(z) : phi.jac_det_inverse(z);
        std::string line;
        for (double x : rows[r]) line += cli::num_field(x) + ",";
        for (int k = 0; k < n; ++k)
            line += cli::num_field(img[k].real()) + "," + cli::num_field(img[k].imag()) + ",";
        line += cli::num_field(jac.real()) + "," + cli::num_field(jac.imag());
        out += line + "\n";
    }
    cli::write_text(g.output_path, out);
    return cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Bergman kernels on tube and model domains"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON file with space and quadrature settings");
    app.add_option("--tol", g.tol, "relative tolerance for numeric evaluation");
    auto* seed_opt = app.add_option("--seed", g.seed, "seed for stochastic sampling");
    app.add_option("--output", g.output_path, "output file (default: stdout)");
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the generated-at header line");

    std::string space_token, mode = "closed", points_path, pair_values, point_values;
    std::optional<int> dim_n;
    std::optional<double> param;

    auto add_space_opts = [&](CLI::App* sub) {
        sub->add_option("--space", space_token, "family token (or set 'family' in --config)");
        sub->add_option("--n", dim_n, "complex dimension");
        sub->add_option("--param", param, "family parameter (v, q, or alpha)");
    };

    auto* kernel_cmd = app.add_subcommand("kernel", "evaluate the reproducing kernel on point pairs");
    add_space_opts(kernel_cmd);
    kernel_cmd->add_option("--mode", mode, "closed|numeric")
        ->check(CLI::IsMember({"closed", "numeric"}));
    kernel_cmd->add_option("--points", points_path, "CSV rows: z then w, re/im interleaved");
    kernel_cmd->add_option("--pair", pair_values, "inline row (4n numbers)");

    std::string sym_mode = "both";
    auto* symbol_cmd = app.add_subcommand("symbol", "evaluate the Laplace symbol on dual points");
    add_space_opts(symbol_cmd);
    symbol_cmd->add_option("--mode", sym_mode, "closed|numeric|both")
        ->check(CLI::IsMember({"closed", "numeric", "both"}));
    symbol_cmd->add_option("--points", points_path, "CSV rows: t with n fields");
    symbol_cmd->add_option("--point", point_values, "inline row (n numbers)");

    std::vector<std::string> verify_target;
    std::string suite_csv;
    auto* verify_cmd = app.add_subcommand("verify", "run verification checks, JSON report");
    verify_cmd->add_option("target", verify_target,
                           "'all' or a space selector like: bergman-selberg q=1");
    verify_cmd->add_option("--suite", suite_csv,
                           "comma list: symmetry,diagonal,log-convexity,symbol,kernel,reproduction,"
                           "isometry,point-eval,extremal,pullback,properties,maps,all");

    std::string map_name, direction = "forward";
    int map_n = 1;
    auto* transform_cmd = app.add_subcommand("transform", "apply a domain map with its Jacobian");
    transform_cmd->add_option("--map", map_name, "siegel-to-tube|ball-to-siegel|ball-to-tube")
        ->required();
    transform_cmd->add_option("--n", map_n, "complex dimension");
    transform_cmd->add_option("--direction", direction, "forward|inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));
    transform_cmd->add_option("--points", points_path, "CSV rows: 2n fields, re/im interleaved");
    transform_cmd->add_option("--point", point_values, "inline row (2n numbers)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bergman::cli::kExitUsage;
    }
    g.seed_given = seed_opt->count() > 0;

    try {
        if (kernel_cmd->parsed()) {
            const QuadratureConfig cfg = g.make_config();
            const auto space = g.resolve_space(space_token, dim_n, param);
            return run_kernel(g, cfg, space, mode, points_path, pair_values);
        }
        if (symbol_cmd->parsed()) {
            const QuadratureConfig cfg = g.make_config();
            const auto space = g.resolve_space(space_token, dim_n, param);
            return run_symbol(g, cfg, space, sym_mode, points_path, point_values);
        }
        if (verify_cmd->parsed()) return run_verify(g, verify_target, suite_csv);
        if (transform_cmd->parsed())
            return run_transform(g, map_name, map_n, direction, points_path, point_values);
        std::cerr << "no subcommand selected\n";
        return bergman::cli::kExitUsage;
    } catch (const bergman::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return bergman::cli::kExitUnsupported;
    } catch (const bergman::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what()
                  << " (best estimate " << e.partial.real() << "+" << e.partial.imag()
                  << "i, bound " << e.error_bound << ")\n";
        return bergman::cli::kExitCheckFailed;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return bergman::cli::kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return bergman::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;  // internal software error
    }
}
