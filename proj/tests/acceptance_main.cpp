// Acceptance gate: ten criteria covering kernel agreement, the symbol oracle,
// pullbacks, the reproducing identity, the Laplace isometry, the pointwise
// bound, structural properties, and CLI determinism.
// Usage: acceptance_suite <path-to-bergman-binary>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/laplace_kernel.hpp"
#include "bergman/transforms.hpp"
#include "bergman/verify.hpp"
#include "bergman/weights.hpp"

using namespace bergman;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool ok, const std::string& label, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << id << " " << label << ": " << detail
              << "\n";
    if (!ok) ++g_failures;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(3) << x;
    return os.str();
}

std::vector<SpaceSpec> one_d_grid() {
    return {SpaceSpec::unweighted_half_plane(), SpaceSpec::half_plane_power(0.5),
            SpaceSpec::half_plane_power(1.0),   SpaceSpec::half_plane_power(2.5),
            SpaceSpec::bergman_selberg(0.75),   SpaceSpec::bergman_selberg(1.0),
            SpaceSpec::bergman_selberg(1.5)};
}

// C1: closed vs Laplace-integral kernels, one complex dimension.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    QuadratureConfig cfg;
    double worst = 0.0;
    bool ok = true;
    int pairs = 0;
    std::uint64_t seed = 101;
    for (const auto& sp : one_d_grid()) {
        const auto r = check_kernel_agreement(sp, 20, 1e-8, cfg, seed++);
        worst = std::max(worst, r.max_rel_err);
        pairs += 20;
        ok = ok && r.passed;
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 5.0;
    report(1, ok, "kernel agreement, 1-D",
           "worst rel err " + fmt(worst) + " over " + std::to_string(pairs) +
               " pairs (tol 1e-8), " + fmt(dt) + "s of 5s");
}

// C2: closed vs Laplace-integral kernels over the two-dimensional cones.
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    QuadratureConfig cfg;
    bool ok = true;
    double worst_par = 0.0, worst_lor = 0.0;
    std::uint64_t seed = 201;
    for (double a : {0.0, 1.5}) {
        const auto r = check_kernel_agreement(SpaceSpec::paraboloid_tube(2, a), 10, 1e-5, cfg,
                                              seed++);
        worst_par = std::max(worst_par, r.max_rel_err);
        ok = ok && r.passed;
    }
    for (double a : {0.0, 1.0}) {
        const auto r =
            check_kernel_agreement(SpaceSpec::lorentz_tube(2, a), 10, 1e-4, cfg, seed++);
        worst_lor = std::max(worst_lor, r.max_rel_err);
        ok = ok && r.passed;
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 60.0;
    report(2, ok, "kernel agreement, n=2",
           "paraboloid worst " + fmt(worst_par) + " (tol 1e-5), lorentz worst " + fmt(worst_lor) +
               " (tol 1e-4), 10 pairs each, " + fmt(dt) + "s of 60s");
}

// C3: symbol quadrature/Monte Carlo vs closed forms.
void criterion_3() {
    QuadratureConfig cfg;
    bool ok = true;
    double worst = 0.0;
    std::uint64_t seed = 301;
    const std::vector<SpaceSpec> tube{
        SpaceSpec::unweighted_half_plane(), SpaceSpec::half_plane_power(2.5),
        SpaceSpec::bergman_selberg(1.5), SpaceSpec::paraboloid_tube(2, 0.5),
        SpaceSpec::lorentz_tube(2, 0.5)};
    for (const auto& sp : tube) {
        const auto r = check_symbol_oracle(sp, 50, cfg, seed++);
        worst = std::max(worst, r.max_rel_err);
        ok = ok && r.passed;
    }
    QuadratureConfig mc = cfg;
    mc.mc_samples = 1'000'000;
    const auto r3 = check_symbol_oracle(SpaceSpec::lorentz_tube(3, 0.0), 10, mc, seed++);
    ok = ok && r3.passed;
    report(3, ok, "symbol oracle",
           "worst rel err " + fmt(worst) + " at 50 points x 5 tube families (tol 1e-8); "
               "lorentz n=3 Monte Carlo worst " +
               fmt(r3.max_rel_err) + " in units of 3*stderr at 1e6 samples");
}

// C4: closed-form pullback identities along the model-domain maps.
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    double worst = 0.0;
    int pairs = 0;
    std::uint64_t seed = 401;
    for (int n : {1, 2}) {
        for (double a : {0.0, 1.5}) {
            for (auto pair : {PullbackPair::SiegelFromParaboloid, PullbackPair::BallFromSiegel}) {
                const auto r = check_pullback(pair, n, a, 25, 1e-11, seed++);
                worst = std::max(worst, r.max_rel_err);
                pairs += 25;
                ok = ok && r.passed;
            }
        }
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 2.0;
    report(4, ok, "pullback identities",
           "worst rel err " + fmt(worst) + " over " + std::to_string(pairs) +
               " pairs (tol 1e-11), " + fmt(dt) + "s of 2s");
}

// C5: classical disc kernel reached through the ball normalization chain.
void criterion_5() {
    const auto r = check_disc_series_anchor(50, 1e-8, 501);
    report(5, r.passed, "disc series anchor",
           "worst rel err " + fmt(r.max_rel_err) + " over 50 pairs vs the truncated Taylor "
               "series (tol 1e-8)");
}

// C6: reproducing identity under quadrature, plus extremal normalization.
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    QuadratureConfig cfg;
    bool ok = true;
    double worst = 0.0;
    std::uint64_t seed = 601;
    const std::vector<SpaceSpec> fams{SpaceSpec::unweighted_half_plane(),
                                      SpaceSpec::half_plane_power(2.0),
                                      SpaceSpec::bergman_selberg(1.5)};
    for (const auto& sp : fams) {
        const auto r = check_self_reproduction(sp, 5, 1e-3, cfg, seed++);
        worst = std::max(worst, r.max_rel_err);
        ok = ok && r.passed;
        const auto e = check_extremal(sp, 2, 1e-3, cfg, seed++);
        worst = std::max(worst, e.max_rel_err);
        ok = ok && e.passed;
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    report(6, ok, "reproducing identity and extremal norm",
           "worst rel err " + fmt(worst) + " over 5 pairs + 2 extremal points per 1-D family "
               "(tol 1e-3), " +
               fmt(dt) + "s of 120s");
}

// C7: Laplace-transform isometry on two admissible profiles per 1-D space.
void criterion_7() {
    QuadratureConfig cfg;
    bool ok = true;
    double worst = 0.0;
    int runs = 0;
    auto grid = one_d_grid();
    grid.push_back(SpaceSpec::half_plane_power(2.0));
    for (const auto& sp : grid) {
        const double pI = sp.family == Family::UnweightedHalfPlane ? 1.0
                          : sp.family == Family::HalfPlanePower    ? sp.param
                                                                   : 2.0 * sp.param - 1.0;
        const double m1 = std::max(0.0, 0.5 * (pI - 1.0)) + 0.5;
        for (const auto& prof : {TestProfile::truncated_exponential(1.0, m1),
                                 TestProfile::truncated_exponential(2.0, m1 + 1.0)}) {
            const auto r = check_isometry(sp, prof, 1e-6, cfg);
            worst = std::max(worst, r.max_rel_err);
            ok = ok && r.passed;
            ++runs;
        }
    }
    // frozen anchor: v = 2 with f = t^2 e^{-t} has both norms equal to
    // Gamma(3)/2^3 scaled by the weight constant Gamma(2)(4 pi)^{-2}, i.e.
    // 1/(64 pi^2)
    const auto hp2 = SpaceSpec::half_plane_power(2.0);
    const auto f2 = TestProfile::truncated_exponential(1.0, 2.0);
    const double frozen = 1.0 / (64.0 * kPi * kPi);
    const double lhs = laplace_a2_norm_sq(hp2, f2, cfg).value.real();
    const double rhs = profile_l2i_norm_sq(hp2, f2, cfg).value.real();
    const double anchor_gap =
        std::max(std::abs(lhs - frozen), std::abs(rhs - frozen)) / frozen;
    ok = ok && anchor_gap <= 1e-6;
    report(7, ok, "Laplace isometry",
           "worst rel err " + fmt(worst) + " over " + std::to_string(runs) +
               " (space, profile) runs (tol 1e-6); frozen-value gap " + fmt(anchor_gap));
}

// C8: pointwise evaluation bound, every family, zero violations.
void criterion_8() {
    bool ok = true;
    int instances = 0;
    std::uint64_t seed = 801;
    const std::vector<SpaceSpec> all{
        SpaceSpec::unweighted_half_plane(), SpaceSpec::half_plane_power(2.5),
        SpaceSpec::bergman_selberg(1.5),    SpaceSpec::paraboloid_tube(2, 0.5),
        SpaceSpec::lorentz_tube(2, 1.0),    SpaceSpec::siegel(2, 0.5),
        SpaceSpec::ball(2, 0.5)};
    for (const auto& sp : all) {
        const auto r = check_point_eval_bound(sp, 15, seed++);
        instances += 15;
        ok = ok && r.passed;
    }
    report(8, ok, "pointwise bound",
           std::to_string(instances) + " normalized-kernel instances across all 7 families, "
               "zero violations required");
}

// C9: structural property suite.
void criterion_9() {
    bool ok = true;
    double worst_sym = 0.0, worst_cvx = 0.0;
    std::uint64_t seed = 901;
    const std::vector<SpaceSpec> all{
        SpaceSpec::unweighted_half_plane(), SpaceSpec::half_plane_power(2.5),
        SpaceSpec::bergman_selberg(1.5),    SpaceSpec::paraboloid_tube(2, 1.5),
        SpaceSpec::lorentz_tube(2, 1.0),    SpaceSpec::siegel(2, 0.5),
        SpaceSpec::ball(2, 0.5)};
    for (const auto& sp : all) {
        const auto s = check_symmetry(sp, 25, 1e-12, seed++);
        worst_sym = std::max(worst_sym, s.max_rel_err);
        ok = ok && s.passed;
        ok = ok && check_diagonal(sp, 25, 1e-12, seed++).passed;
    }
    const std::vector<SpaceSpec> tube{
        SpaceSpec::unweighted_half_plane(), SpaceSpec::half_plane_power(0.5),
        SpaceSpec::bergman_selberg(0.75),   SpaceSpec::paraboloid_tube(2, 0.0),
        SpaceSpec::lorentz_tube(2, 1.0)};
    for (const auto& sp : tube) {
        const auto r = check_log_convexity(sp, 200, 1e-12, seed++);
        worst_cvx = std::max(worst_cvx, r.max_rel_err);
        ok = ok && r.passed;
    }
    ok = ok && check_lorentz_homogeneity(SpaceSpec::lorentz_tube(2, 1.0), 50, 1e-12, seed++).passed;
    ok = ok && check_lorentz_homogeneity(SpaceSpec::lorentz_tube(3, 0.5), 50, 1e-12, seed++).passed;
    ok = ok && check_degeneration(0.0, 50, 1e-12, seed++).passed;
    ok = ok && check_degeneration(1.5, 50, 1e-12, seed++).passed;
    report(9, ok, "property suite",
           "symmetry worst " + fmt(worst_sym) + ", log-convexity worst " + fmt(worst_cvx) +
               " at 200 triples per tube family, homogeneity and degeneration at 1e-12");
}

// C10: byte-identical verification reports for a fixed seed.
void criterion_10(const std::string& bin) {
    char tmpl[] = "/tmp/bergman_accept_XXXXXX";
    const char* dir = mkdtemp(tmpl);
    if (dir == nullptr) {
        report(10, false, "CLI determinism", "mkdtemp failed");
        return;
    }
    const std::string d = dir;
    auto run_once = [&](const std::string& out) {
        const std::string cmd = bin + " verify all --seed 0 --output " + out + " >" + d +
                                "/stdout.txt 2>" + d + "/stderr.txt";
        const int rc = std::system(cmd.c_str());
        return (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    };
    const int rc1 = run_once(d + "/a.json");
    const int rc2 = run_once(d + "/b.json");
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(d + "/a.json"), b = slurp(d + "/b.json");
    const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report(10, ok, "CLI determinism",
           "verify all --seed 0 twice: exit codes " + std::to_string(rc1) + "/" +
               std::to_string(rc2) + ", reports " +
               (a == b ? "byte-identical" : "DIFFER") + " (" + std::to_string(a.size()) +
               " bytes)");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance_suite <path-to-bergman-binary>\n";
        return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(argv[1]);
    std::cout << "acceptance: " << (10 - g_failures) << "/10 criteria passed in "
              << fmt(seconds_since(t0)) << "s\n";
    return g_failures == 0 ? 0 : 1;
}
