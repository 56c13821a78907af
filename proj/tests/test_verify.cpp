#include <string>
#include <vector>

#include "bergman/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bergman;

TEST_CASE("single checks pass on healthy inputs") {
    QuadratureConfig cfg;
    CHECK(check_symmetry(SpaceSpec::ball(2, 0.5), 25, 1e-12, 7).passed);
    CHECK(check_diagonal(SpaceSpec::lorentz_tube(2, 1.0), 25, 1e-12, 7).passed);
    CHECK(check_log_convexity(SpaceSpec::paraboloid_tube(2, 0.5), 50, 1e-12, 7).passed);
    CHECK(check_disc_series_anchor(50, 1e-8, 7).passed);
    CHECK(check_degeneration(0.5, 30, 1e-12, 7).passed);
    CHECK(check_lorentz_homogeneity(SpaceSpec::lorentz_tube(2, 1.0), 30, 1e-12, 7).passed);
    CHECK(check_map_roundtrip(phi_siegel_to_paraboloid_tube(2), 30, 1e-12, 7).passed);
    CHECK(check_weight_compat(2, 1.5, 40, 1e-12, 7).passed);
    CHECK(check_chain_consistency(1, 0.0, 30, 1e-12, 7).passed);
    CHECK(check_pullback(PullbackPair::BallFromSiegel, 2, 1.5, 25, 1e-11, 7).passed);

    const std::vector<SpaceSpec> all{
        SpaceSpec::unweighted_half_plane(), SpaceSpec::half_plane_power(0.5),
        SpaceSpec::bergman_selberg(1.5),    SpaceSpec::paraboloid_tube(2, 0.0),
        SpaceSpec::lorentz_tube(2, 1.0),    SpaceSpec::siegel(2, 0.5),
        SpaceSpec::ball(2, 0.0)};
    for (const auto& sp : all) {
        const auto r = check_point_eval_bound(sp, 10, 42);
        CHECK(r.passed);
        CHECK(r.samples == 10);
    }
}

TEST_CASE("isometry check rejects inadmissible profiles") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(check_isometry(SpaceSpec::half_plane_power(2.0),
                                   TestProfile::truncated_exponential(1.0, 0.0), 1e-6, cfg),
                    std::invalid_argument);
    const auto ok = check_isometry(SpaceSpec::unweighted_half_plane(),
                                   TestProfile::truncated_exponential(1.0, 1.0), 1e-6, cfg);
    CHECK(ok.passed);
    CHECK(ok.max_rel_err < 1e-6);
}

TEST_CASE("suite selection parsing") {
    const auto s = SuiteSelection::parse("symmetry,maps");
    CHECK(s.symmetry);
    CHECK(s.maps);
    CHECK(!s.diagonal);
    CHECK(!s.symbol);
    CHECK(!s.kernel);
    CHECK(!s.pullback);
    const auto a = SuiteSelection::parse("all");
    CHECK(a.isometry);
    CHECK(a.extremal);
    CHECK_THROWS_AS(SuiteSelection::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(SuiteSelection::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SuiteSelection::parse(",,"), std::invalid_argument);
}

TEST_CASE("per-space suite carries the normalization note") {
    QuadratureConfig cfg;
    SuiteSelection sel = SuiteSelection::none();
    sel.symmetry = sel.diagonal = sel.symbol = true;
    const auto reports = run_suite_for(SpaceSpec::bergman_selberg(1.0), sel, cfg);
    REQUIRE(!reports.empty());
    for (const auto& r : reports) {
        CHECK(r.notes.find("normalization") != std::string::npos);
        CHECK(r.passed);
    }
}

TEST_CASE("report serialization and determinism") {
    QuadratureConfig cfg;
    cfg.seed = 3;
    SuiteSelection sel = SuiteSelection::none();
    sel.symmetry = sel.diagonal = sel.properties = sel.maps = true;
    const auto r1 = run_default_suite(sel, cfg);
    const auto r2 = run_default_suite(sel, cfg);
    const std::string j1 = reports_to_json(r1);
    const std::string j2 = reports_to_json(r2);
    CHECK(j1 == j2);

    const auto parsed = nlohmann::json::parse(j1);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == r1.size());
    for (const auto& item : parsed) {
        CHECK(item.contains("check"));
        CHECK(item.contains("space"));
        CHECK(item.contains("samples"));
        CHECK(item.contains("max_rel_err"));
        CHECK(item.contains("tolerance"));
        CHECK(item.contains("passed"));
        CHECK(item.contains("notes"));
        CHECK(item["passed"].get<bool>());
    }
    CHECK(parsed[0]["check"].is_string());
    CHECK(parsed[0]["max_rel_err"].is_number());
}
