#pragma once

#include "tpsgeo/expr.hpp"

#include <string>
#include <vector>

namespace tpsgeo {

/// A fully parsed manifold model: frame fields on R^d (d = 2n+1), the
/// constant frame metric signs, the phi action on the frame, which frame
/// field is xi, the pseudo-projective parameters and the sampling box.
struct ModelSpec {
    std::string name;
    int n = 1;
    std::vector<std::string> coords;              // d names
    std::vector<std::vector<ScalarExpr>> frame;   // frame[i][a]: component of E_i along coord a
    std::vector<int> epsilon;                     // d signs, g(E_i,E_j) = eps_i delta_ij
    std::vector<std::vector<int>> phi_frame;      // phi E_i = sum_j phi_frame[j][i] E_j
    int xi_index = 0;                             // 0-based frame index of xi
    double pp_a = 1.0, pp_b = 1.0;                // pseudo-projective constants
    std::vector<double> box_lo, box_hi;           // per-coordinate closed intervals

    int dim() const { return 2 * n + 1; }
    std::vector<double> box_center() const;
};

/// Checks every ModelSpec invariant (signature count, frame-level phi
/// axioms, nonzero pseudo-projective constants, box sanity) and frame
/// invertibility at the box center. Throws ModelValidationError.
void validate_model_spec(const ModelSpec& spec);

/// Embedded reference model sources.
const std::string& example25_model_text();
const std::string& flat3_model_text();

std::vector<std::string> builtin_model_names();

/// Parse + validate one of the embedded models ("example25", "flat3").
ModelSpec builtin_model(const std::string& name);

} // namespace tpsgeo
