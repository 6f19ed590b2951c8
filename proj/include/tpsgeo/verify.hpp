#pragma once

#include "tpsgeo/curvfamily.hpp"
#include "tpsgeo/paracontact.hpp"
#include "tpsgeo/sampling.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace tpsgeo {

/// Tolerance classes: residuals grow roughly one order of magnitude per
/// differentiation level, so identities are grouped by how many derivatives
/// of the inputs they consume.
enum class TolClass { Algebraic, FirstOrder, Curvature, Normality, Fd };

std::string to_string(TolClass c);

struct ToleranceSet {
    double algebraic = 1e-9;
    double first_order = 1e-7;
    double curvature = 1e-6;
    double normality = 1e-6;
    double fd = 1e-3;
    std::map<std::string, double> overrides; // keyed by check id or class name

    double class_default(TolClass c) const;
    double resolve(const std::string& id, TolClass c) const;
};

struct ClaimInfo {
    std::string id;
    std::string description;
    TolClass tol_class;
};

/// The claim catalog: one entry per numbered identity checked as an
/// unconditional pointwise residual.
const std::vector<ClaimInfo>& claim_catalog();
std::vector<std::string> claim_ids();

struct ClaimResult {
    std::string id;
    int points_tested = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0; // mean over points of the per-point max
    double tolerance = 0.0;
    bool pass = false;
};

struct TheoremInfo {
    std::string id;
    std::string description;
};

const std::vector<TheoremInfo>& theorem_catalog();
std::vector<std::string> theorem_ids();

enum class TheoremStatus { Verified, Vacuous, RefutedAtTolerance };
std::string to_string(TheoremStatus s);

/// A conditional theorem check: the hypothesis tensor is measured, and the
/// conclusion is asserted only when the hypothesis (and the standing
/// assumption gate) is met. Vacuous results never assert conclusions.
struct TheoremResult {
    std::string id;
    double hypothesis_residual = 0.0;
    bool hypothesis_met = false;
    double conclusion_residual = 0.0;
    bool standing_assumption_met = false;
    TheoremStatus status = TheoremStatus::Vacuous;
    double alternate_residual = -1.0; // >= 0 only when an alternate form is logged
};

enum class EinsteinVerdict { Einstein, EtaEinstein, Neither };
std::string to_string(EinsteinVerdict v);

struct EinsteinFit {
    double lambda = 0.0;
    double mu = 0.0;
    double fit_residual = 0.0;
    EinsteinVerdict verdict = EinsteinVerdict::Neither;
};

/// Everything the checks need at one point, computed once and shared.
struct PointGeometry {
    PointStructure ps;
    ChristoffelData ch;
    CurvatureData cd;
    AlphaBeta ab;
};

PointGeometry compute_geometry(const ModelSpec& spec, std::span<const double> point);

ClaimResult run_claim(const std::string& id, const ModelSpec& spec,
                      const std::vector<std::vector<double>>& points,
                      const ToleranceSet& tol = {});

TheoremResult run_theorem(const std::string& id, const ModelSpec& spec,
                          const std::vector<std::vector<double>>& points,
                          const ToleranceSet& tol = {});

/// Pooled least-squares fit Ric = lambda g + mu eta (x) eta across samples.
EinsteinFit classify_einstein(
    const std::vector<std::pair<const PointStructure*, const CurvatureData*>>& samples,
    double tol = 1e-6);

struct StandingAssumptionResult {
    double residual = 0.0;
    bool met = false;
};

/// Max-norm of phi(grad alpha) + (2n-1) grad beta across the points; the
/// boolean gates every conditional theorem check.
StandingAssumptionResult standing_assumption_check(const ModelSpec& spec,
                                                   const std::vector<std::vector<double>>& points,
                                                   const ToleranceSet& tol = {});

/// How each numbered in-scope statement is covered by the engine; the
/// completeness test freezes this table.
enum class CoverageKind { Claim, Theorem, Definition, Conditional, Excluded };

struct Coverage {
    std::string equation;
    CoverageKind kind;
    std::string key; // claim/theorem id or operation name
};

const std::vector<Coverage>& equation_coverage();

/// Comparison of recomputed brackets, frame-connection coefficients and
/// nabla-xi / nabla-eta lines against the reference table shipped with the
/// example25 model, evaluated at the origin.
struct TableLine {
    std::string line;
    std::vector<double> reference;
    std::vector<double> computed;
    bool match = false;
};

std::vector<TableLine> example25_table_comparison(const ModelSpec& spec);

struct RunOptions {
    int points = 100;
    std::uint64_t seed = 42;
    ToleranceSet tolerances;
};

struct AlphaBetaSummary {
    double alpha = 0.0;
    double beta = 0.0;
    double xi_alpha = 0.0;
    double xi_beta = 0.0;
};

struct Report {
    std::string model;
    std::uint64_t seed = 0;
    int points = 0;
    ToleranceSet tolerances;
    std::vector<ClaimResult> claims;
    std::vector<TheoremResult> theorems;
    EinsteinFit einstein_fit;
    StandingAssumptionResult standing;
    AlphaBetaSummary alpha_beta;
    std::vector<std::string> notes;

    /// True when every claim passes and no theorem is refuted at tolerance.
    bool all_checks_pass() const;
};

Report run_suite(const ModelSpec& spec, const RunOptions& opt = {});

/// Stable-key-order JSON rendering; identical options give identical bytes.
std::string report_json(const Report& r);
std::string report_text(const Report& r);

} // namespace tpsgeo
