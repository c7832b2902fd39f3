#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lipopt {

// Failure classes; the CLI maps these to exit codes (config=2, numeric=3, io=4).
enum class ErrorClass { Config, Numeric, Io };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }

private:
  ErrorClass cls_;
};

struct InvalidConfigError : Error {
  explicit InvalidConfigError(const std::string& m) : Error(ErrorClass::Config, m) {}
};

struct UnknownFunctionError : Error {
  explicit UnknownFunctionError(const std::string& m) : Error(ErrorClass::Config, m) {}
};

// Parse failure with the byte offset of the offending token and the token
// set the parser would have accepted there.
struct SyntaxError : Error {
  SyntaxError(std::size_t offset, std::string expected, const std::string& m)
      : Error(ErrorClass::Config, m), offset(offset), expected(std::move(expected)) {}
  std::size_t offset;
  std::string expected;
};

struct UnknownIdentifierError : Error {
  UnknownIdentifierError(std::size_t offset, const std::string& m)
      : Error(ErrorClass::Config, m), offset(offset) {}
  std::size_t offset;
};

struct DegeneratePairError : Error {
  explicit DegeneratePairError(const std::string& m) : Error(ErrorClass::Numeric, m) {}
};

struct StencilOutOfDomainError : Error {
  explicit StencilOutOfDomainError(const std::string& m) : Error(ErrorClass::Numeric, m) {}
};

struct BracketCollapseError : Error {
  explicit BracketCollapseError(const std::string& m) : Error(ErrorClass::Numeric, m) {}
};

struct NonFiniteValueError : Error {
  NonFiniteValueError(double at, const std::string& m)
      : Error(ErrorClass::Numeric, m), at(at) {}
  double at;  // evaluation point that produced the non-finite value
};

struct NonpositiveKError : Error {
  explicit NonpositiveKError(const std::string& m) : Error(ErrorClass::Numeric, m) {}
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorClass::Io, m) {}
};

}  // namespace lipopt
