#pragma once

#include "tpsgeo/curvature.hpp"

namespace tpsgeo {

enum class FamilyKind {
    Projective,
    Conformal,
    Concircular,
    ProjectiveRicci,
    PseudoProjective,
    PcBochner,
};

/// One of the derived curvature tensors, with the parameters used to build
/// it. Valence (1,3) for projective / conformal / concircular /
/// pseudo-projective (slots [X][Y][Z][out]), (0,2) for the projective Ricci
/// tensor, (0,4) for the PC-Bochner tensor.
struct FamilyTensor {
    FamilyKind kind;
    TensorAtPoint components;
    double a = 0.0, b = 0.0; // pseudo-projective constants
    double k = 0.0;          // PC-Bochner scalar -(scal - 2n)/(2n + 2)
};

/// P(X,Y)Z = R(X,Y)Z - (1/2n)(Ric(Y,Z)X - Ric(X,Z)Y)
FamilyTensor projective(const PointStructure& ps, const CurvatureData& cd);

/// Weyl conformal tensor with the Ricci-operator terms and the scalar term
/// scal/(2n(2n-1)); identically zero in dimension 3.
FamilyTensor conformal(const PointStructure& ps, const CurvatureData& cd);

/// R(X,Y)Z - scal/(2n(2n+1)) (g(Y,Z)X - g(X,Z)Y)
FamilyTensor concircular(const PointStructure& ps, const CurvatureData& cd);

/// (0,2): (2n+1)/2n Ric - scal/2n g
FamilyTensor projective_ricci(const PointStructure& ps, const CurvatureData& cd);

/// a R + b (Ric wedge) - ((a + 2nb) scal / (2n(2n+1))) (g wedge); both
/// constants must be nonzero.
FamilyTensor pseudo_projective(const PointStructure& ps, const CurvatureData& cd, double a,
                               double b);

/// PC-Bochner tensor in fully lowered (0,4) form, k recomputed per point.
FamilyTensor pc_bochner(const PointStructure& ps, const CurvatureData& cd);

/// Curvature acting as a derivation: for T of valence (1,3) or (0,4) the
/// result carries two extra covariant slots (X, Y) in front; for (0,2) it is
/// the two-argument truncation -T(R(X,Y)U, V) - T(U, R(X,Y)V).
TensorAtPoint derivation_action(const CurvatureData& cd, const TensorAtPoint& t);

} // namespace tpsgeo
