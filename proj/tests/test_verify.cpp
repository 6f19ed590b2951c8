#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"
#include "tpsgeo/verify.hpp"

#include <cmath>
#include <set>

using namespace tpsgeo;
using testutil::close;

TEST_CASE("run_claim on the shipped models") {
    const ModelSpec ex = builtin_model("example25");
    const ModelSpec flat = builtin_model("flat3");
    const auto ex_pts = sample_points(ex, 100, 42);
    const auto flat_pts = sample_points(flat, 10, 42);

    SUBCASE("eq-3.12 passes at 1e-9 on example25") {
        const ClaimResult r = run_claim("eq-3.12", ex, ex_pts);
        CHECK(r.points_tested == 100);
        CHECK(r.tolerance == 1e-9);
        CHECK(r.max_residual < 1e-9);
        CHECK(r.pass);
        CHECK(r.mean_residual <= r.max_residual);
    }
    SUBCASE("eq-2.7 passes at 1e-7 on example25") {
        const ClaimResult r = run_claim("eq-2.7", ex, ex_pts);
        CHECK(r.tolerance == 1e-7);
        CHECK(r.pass);
    }
    SUBCASE("eq-3.10 on the flat model: both sides vanish") {
        const ClaimResult r = run_claim("eq-3.10", flat, flat_pts);
        CHECK(r.max_residual == 0.0);
        CHECK(r.pass);
    }
    SUBCASE("every cataloged claim passes on both models") {
        for (const auto& id : claim_ids()) {
            CHECK(run_claim(id, ex, ex_pts).pass);
            CHECK(run_claim(id, flat, flat_pts).pass);
        }
    }
    SUBCASE("unknown claims list the catalog") {
        try {
            run_claim("eq-9.9", ex, ex_pts);
            FAIL("expected UnknownKeyError");
        } catch (const UnknownKeyError& e) {
            CHECK(std::find(e.catalog.begin(), e.catalog.end(), "eq-3.12") != e.catalog.end());
        }
    }
}

TEST_CASE("run_theorem statuses") {
    const ModelSpec ex = builtin_model("example25");
    const ModelSpec flat = builtin_model("flat3");
    const auto ex_pts = sample_points(ex, 60, 42);
    const auto flat_pts = sample_points(flat, 10, 42);

    SUBCASE("thm-3.6 is verified on the flat model") {
        const TheoremResult r = run_theorem("thm-3.6", flat, flat_pts);
        CHECK(r.status == TheoremStatus::Verified);
        CHECK(r.hypothesis_met);
        CHECK(r.standing_assumption_met);
        CHECK(r.hypothesis_residual == 0.0);
        CHECK(r.conclusion_residual == 0.0);
    }
    SUBCASE("thm-3.10 is verified on the flat model with scal = 0") {
        const TheoremResult r = run_theorem("thm-3.10", flat, flat_pts);
        CHECK(r.status == TheoremStatus::Verified);
    }
    SUBCASE("thm-3.14 is vacuous wherever the PC-Bochner tensor is nonzero") {
        CHECK(run_theorem("thm-3.14", flat, flat_pts).status == TheoremStatus::Vacuous);
        CHECK(run_theorem("thm-3.14", ex, ex_pts).status == TheoremStatus::Vacuous);
    }
    SUBCASE("on example25 the standing assumption gates every theorem to vacuous") {
        for (const auto& id : theorem_ids()) {
            const TheoremResult r = run_theorem(id, ex, ex_pts);
            CHECK(r.status == TheoremStatus::Vacuous);
            CHECK_FALSE(r.standing_assumption_met);
        }
    }
    SUBCASE("no theorem ever reports verified or refuted with an unmet hypothesis") {
        for (const auto& id : theorem_ids()) {
            for (const auto* pts : {&ex_pts, &flat_pts}) {
                const ModelSpec& m = (pts == &ex_pts) ? ex : flat;
                const TheoremResult r = run_theorem(id, m, *pts);
                if (!r.hypothesis_met) CHECK(r.status == TheoremStatus::Vacuous);
            }
        }
    }
    SUBCASE("unknown theorem ids are rejected") {
        CHECK_THROWS_AS(run_theorem("thm-9.9", flat, flat_pts), UnknownKeyError);
    }
}

TEST_CASE("einstein classification") {
    const ModelSpec ex = builtin_model("example25");
    const auto pts = sample_points(ex, 20, 42);

    std::vector<PointGeometry> geos;
    for (const auto& p : pts) geos.push_back(compute_geometry(ex, p));

    SUBCASE("synthetic Ric = -2 g is einstein") {
        std::vector<CurvatureData> synth;
        synth.reserve(geos.size());
        for (const auto& g : geos) {
            CurvatureData cd = g.cd;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) cd.Ric(a, b) = -2.0 * g.ps.g_value(a, b);
            synth.push_back(cd);
        }
        std::vector<std::pair<const PointStructure*, const CurvatureData*>> samples;
        for (std::size_t i = 0; i < geos.size(); ++i)
            samples.emplace_back(&geos[i].ps, &synth[i]);
        const EinsteinFit fit = classify_einstein(samples, 1e-6);
        CHECK(close(fit.lambda, -2.0, 1e-9));
        CHECK(close(fit.mu, 0.0, 1e-9));
        CHECK(fit.verdict == EinsteinVerdict::Einstein);
    }

    SUBCASE("recovery of random eta-Einstein coefficients") {
        SplitMix64 rng(101);
        for (int trial = 0; trial < 20; ++trial) {
            const double lambda0 = 4.0 * rng.next_double() - 2.0;
            const double mu0 = 4.0 * rng.next_double() - 2.0;
            std::vector<CurvatureData> synth;
            synth.reserve(geos.size());
            for (const auto& g : geos) {
                CurvatureData cd = g.cd;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        cd.Ric(a, b) = lambda0 * g.ps.g_value(a, b) +
                                       mu0 * g.ps.eta_value(a) * g.ps.eta_value(b);
                synth.push_back(cd);
            }
            std::vector<std::pair<const PointStructure*, const CurvatureData*>> samples;
            for (std::size_t i = 0; i < geos.size(); ++i)
                samples.emplace_back(&geos[i].ps, &synth[i]);
            const EinsteinFit fit = classify_einstein(samples, 1e-6);
            CHECK(close(fit.lambda, lambda0, 1e-9));
            CHECK(close(fit.mu, mu0, 1e-9));
            CHECK(fit.fit_residual < 1e-9);
        }
    }

    SUBCASE("the flat model is einstein with (0, 0)") {
        const ModelSpec flat = builtin_model("flat3");
        const auto fpts = sample_points(flat, 10, 1);
        std::vector<PointGeometry> fgeos;
        for (const auto& p : fpts) fgeos.push_back(compute_geometry(flat, p));
        std::vector<std::pair<const PointStructure*, const CurvatureData*>> samples;
        for (const auto& g : fgeos) samples.emplace_back(&g.ps, &g.cd);
        const EinsteinFit fit = classify_einstein(samples, 1e-6);
        CHECK(fit.lambda == 0.0);
        CHECK(fit.mu == 0.0);
        CHECK(fit.verdict == EinsteinVerdict::Einstein);
    }
}

TEST_CASE("standing assumption check") {
    const ModelSpec ex = builtin_model("example25");
    const ModelSpec flat = builtin_model("flat3");
    CHECK(standing_assumption_check(flat, sample_points(flat, 10, 42)).met);
    const auto r = standing_assumption_check(ex, sample_points(ex, 50, 42));
    CHECK_FALSE(r.met);
    CHECK(r.residual > 1e-3);
}

TEST_CASE("equation coverage is complete and consistent with the catalogs") {
    const auto& cov = equation_coverage();

    // frozen list of in-scope statements
    const std::vector<std::string> expected = {
        "eq-2.1",  "eq-2.2",    "eq-2.3",       "eq-2.4",       "eq-2.5",  "eq-2.6",
        "eq-2.7",  "eq-2.8",    "eq-2.9",       "normality",    "eq-3.10", "eq-3.11",
        "eq-3.12", "eq-3.13",   "prop-3.2",     "eq-3.14",      "eq-3.15", "eq-3.16",
        "eq-3.17", "eq-3.18",   "eq-3.19",      "eq-3.20-3.23", "eq-3.24-3.30",
        "eq-3.31", "eq-3.32-3.34", "eq-3.35-3.39", "eq-3.40",   "eq-3.41-3.45",
        "eq-3.46", "eq-3.47-3.48", "eq-3.49",   "eq-3.50-3.52", "eq-3.53-3.58",
        "pc-bochner", "eq-3.59", "eq-3.60-3.61"};
    REQUIRE(cov.size() == expected.size());
    for (std::size_t i = 0; i < cov.size(); ++i) CHECK(cov[i].equation == expected[i]);

    // the claim-kind subset is exactly the claim catalog
    std::set<std::string> claim_keys;
    for (const auto& c : cov)
        if (c.kind == CoverageKind::Claim) claim_keys.insert(c.key);
    const auto ids = claim_ids();
    CHECK(claim_keys == std::set<std::string>(ids.begin(), ids.end()));

    // every theorem key exists in the theorem catalog
    const auto tids = theorem_ids();
    for (const auto& c : cov)
        if (c.kind == CoverageKind::Theorem || c.kind == CoverageKind::Conditional)
            CHECK(std::find(tids.begin(), tids.end(), c.key) != tids.end());
}

TEST_CASE("reference-table comparison flags exactly the two known lines") {
    const auto table = example25_table_comparison(builtin_model("example25"));
    CHECK(table.size() == 18);
    std::vector<std::string> mismatches;
    for (const auto& l : table)
        if (!l.match) mismatches.push_back(l.line);
    REQUIRE(mismatches.size() == 2);
    CHECK(mismatches[0] == "[E1,E3]");
    CHECK(mismatches[1] == "nabla_E1 xi");
}

TEST_CASE("run_suite reports") {
    const ModelSpec ex = builtin_model("example25");
    RunOptions opt;
    opt.points = 40;
    opt.seed = 42;

    SUBCASE("identical options give byte-identical JSON") {
        const std::string a = report_json(run_suite(ex, opt));
        const std::string b = report_json(run_suite(ex, opt));
        CHECK(a == b);
    }
    SUBCASE("JSON carries the schema keys in stable order") {
        const std::string j = report_json(run_suite(ex, opt));
        const auto pos = [&](const char* key) { return j.find(key); };
        CHECK(pos("\"model\"") < pos("\"seed\""));
        CHECK(pos("\"seed\"") < pos("\"points\""));
        CHECK(pos("\"points\"") < pos("\"tolerances\""));
        CHECK(pos("\"tolerances\"") < pos("\"claims\""));
        CHECK(pos("\"claims\"") < pos("\"theorems\""));
        CHECK(pos("\"theorems\"") < pos("\"einstein_fit\""));
        CHECK(pos("\"einstein_fit\"") < pos("\"alpha_beta_summary\""));
        CHECK(pos("\"alpha_beta_summary\"") < pos("\"notes\""));
        CHECK(pos("\"notes\"") != std::string::npos);
    }
    SUBCASE("all checks pass on both builtin models") {
        CHECK(run_suite(ex, opt).all_checks_pass());
        CHECK(run_suite(builtin_model("flat3"), opt).all_checks_pass());
    }
    SUBCASE("every claim passes with at least 10x tolerance headroom on shipped models") {
        for (const char* name : {"example25", "flat3"}) {
            const Report rep = run_suite(builtin_model(name), opt);
            for (const auto& c : rep.claims) CHECK(c.max_residual * 10.0 <= c.tolerance);
        }
    }
    SUBCASE("a different seed moves the points but never flips a verdict") {
        RunOptions other = opt;
        other.seed = 20240808;
        const Report a = run_suite(ex, opt);
        const Report b = run_suite(ex, other);
        REQUIRE(a.claims.size() == b.claims.size());
        for (std::size_t i = 0; i < a.claims.size(); ++i)
            CHECK(a.claims[i].pass == b.claims[i].pass);
        REQUIRE(a.theorems.size() == b.theorems.size());
        for (std::size_t i = 0; i < a.theorems.size(); ++i)
            CHECK(a.theorems[i].status == b.theorems[i].status);
    }
    SUBCASE("tolerance overrides are honored") {
        RunOptions strict = opt;
        strict.tolerances.overrides["eq-2.7"] = 1e-30;
        const Report rep = run_suite(ex, strict);
        bool found = false;
        for (const auto& c : rep.claims)
            if (c.id == "eq-2.7") {
                found = true;
                CHECK(c.tolerance == 1e-30);
                CHECK_FALSE(c.pass);
            }
        CHECK(found);
        CHECK_FALSE(rep.all_checks_pass());
    }
    SUBCASE("alpha-beta summary holds the box-center values") {
        const Report rep = run_suite(ex, opt);
        CHECK(close(rep.alpha_beta.alpha, 0.5, 1e-12));
        CHECK(close(rep.alpha_beta.beta, 1.0, 1e-12));
        CHECK(close(rep.alpha_beta.xi_alpha, 1.0, 1e-12));
    }
}
