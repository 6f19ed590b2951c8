#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tpsgeo {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic left the domain of a jet operation (division by zero, log of
/// a non-positive value). Carries the offending value.
struct JetDomainError : Error {
    JetDomainError(const std::string& op, double value);
    double offending_value;
};

/// A matrix whose value part is singular or too ill-conditioned to invert.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(double cond, const std::string& context = "");
    double condition_estimate;
};

/// Least-squares design matrix is rank deficient.
struct RankDeficientError : Error {
    explicit RankDeficientError(int column);
    int dependent_column;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t offset, std::vector<std::string> expected);
    std::size_t offset;
    std::vector<std::string> expected;
};

struct UnknownIdentifierError : Error {
    UnknownIdentifierError(std::size_t offset, const std::string& name,
                           std::vector<std::string> candidates);
    std::size_t offset;
    std::string name;
    std::vector<std::string> candidates;
};

/// A model file parsed but violates a ModelSpec invariant.
struct ModelValidationError : Error {
    ModelValidationError(const std::string& field, const std::string& rule);
    std::string field;
    std::string rule;
};

/// A structure tensor failed an assembly postcondition at a point.
struct AssemblyError : Error {
    using Error::Error;
};

/// Bad tangent-vector argument (isotropic, not orthogonal, not normalized).
struct VectorArgumentError : Error {
    using Error::Error;
};

struct ValenceMismatchError : Error {
    using Error::Error;
};

/// Lookup of a claim, theorem or tensor name that is not in the catalog.
struct UnknownKeyError : Error {
    UnknownKeyError(const std::string& kind, const std::string& key,
                    std::vector<std::string> catalog);
    std::string key;
    std::vector<std::string> catalog;
};

} // namespace tpsgeo
