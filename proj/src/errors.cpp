#include "tpsgeo/errors.hpp"

#include <sstream>

namespace tpsgeo {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += items[i];
    }
    return out;
}

} // namespace

JetDomainError::JetDomainError(const std::string& op, double value)
    : Error("domain error in " + op + ": offending value " + std::to_string(value)),
      offending_value(value) {}

SingularMatrixError::SingularMatrixError(double cond, const std::string& context)
    : Error("singular or ill-conditioned matrix (condition estimate " +
            std::to_string(cond) + (context.empty() ? "" : ", " + context) + ")"),
      condition_estimate(cond) {}

RankDeficientError::RankDeficientError(int column)
    : Error("rank-deficient least-squares design: column " + std::to_string(column) +
            " is linearly dependent"),
      dependent_column(column) {}

SyntaxError::SyntaxError(std::size_t off, std::vector<std::string> exp)
    : Error([&] {
          std::ostringstream os;
          os << "syntax error at offset " << off << ": expected " << join(exp);
          return os.str();
      }()),
      offset(off), expected(std::move(exp)) {}

UnknownIdentifierError::UnknownIdentifierError(std::size_t off, const std::string& nm,
                                               std::vector<std::string> cand)
    : Error("unknown identifier '" + nm + "' at offset " + std::to_string(off) +
            "; valid names: " + join(cand)),
      offset(off), name(nm), candidates(std::move(cand)) {}

ModelValidationError::ModelValidationError(const std::string& fld, const std::string& rl)
    : Error("invalid model: field '" + fld + "': " + rl), field(fld), rule(rl) {}

UnknownKeyError::UnknownKeyError(const std::string& kind, const std::string& key,
                                 std::vector<std::string> cat)
    : Error("unknown " + kind + " '" + key + "'; catalog: " + join(cat)),
      key(key), catalog(std::move(cat)) {}

} // namespace tpsgeo
