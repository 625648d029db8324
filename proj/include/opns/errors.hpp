#pragma once
#include <stdexcept>
#include <string>

namespace opns {

// All engine errors carry a stable kind tag so callers (CLI, tests) can
// dispatch without string-matching free-form messages.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

namespace errk {
inline constexpr const char* UndeclaredGenerator = "UndeclaredGenerator";
inline constexpr const char* DuplicateGenerator = "DuplicateGenerator";
inline constexpr const char* BadArity = "BadArity";
inline constexpr const char* SymmetryOnNonBinary = "SymmetryOnNonBinary";
inline constexpr const char* InhomogeneousIdentity = "InhomogeneousIdentity";
inline constexpr const char* SingularMap = "SingularMap";
inline constexpr const char* DuplicateLeafLabel = "DuplicateLeafLabel";
inline constexpr const char* InvalidShuffle = "InvalidShuffle";
inline constexpr const char* ArityMismatch = "ArityMismatch";
inline constexpr const char* ZeroPolynomial = "ZeroPolynomial";
inline constexpr const char* UnknownPreset = "UnknownPreset";
inline constexpr const char* OutOfBound = "OutOfBound";
inline constexpr const char* NotQuadratic = "NotQuadratic";
inline constexpr const char* PatternMismatch = "PatternMismatch";
inline constexpr const char* BoundExceeded = "BoundExceeded";
inline constexpr const char* SyntaxError = "SyntaxError";
inline constexpr const char* UnitPattern = "UnitPattern";
} // namespace errk

} // namespace opns
