#pragma once

#include <stdexcept>
#include <string>

namespace hilbtor {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
  std::size_t pos;
  SyntaxError(const std::string& msg, std::size_t at)
      : Error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

struct UnknownVariable : Error {
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'") {}
};

struct NegativeExponent : Error {
  explicit NegativeExponent(std::size_t at)
      : Error("negative exponent (at position " + std::to_string(at) + ")") {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& m = "operands live over different rings") : Error(m) {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& m = "monomials have different variable counts") : Error(m) {}
};

struct InhomogeneousInput : Error {
  explicit InhomogeneousInput(const std::string& m = "input is not homogeneous") : Error(m) {}
};

struct InhomogeneousElement : Error {
  explicit InhomogeneousElement(const std::string& m = "element is not homogeneous") : Error(m) {}
};

struct AmbientMismatch : Error {
  explicit AmbientMismatch(const std::string& m = "vector does not match the ambient free module") : Error(m) {}
};

struct ZeroElement : Error {
  explicit ZeroElement(const std::string& m = "zero element not allowed here") : Error(m) {}
};

struct InfiniteLength : Error {
  explicit InfiniteLength(const std::string& m = "module has infinite length") : Error(m) {}
};

struct NotFiniteLength : Error {
  explicit NotFiniteLength(const std::string& m = "quotient is not of finite length") : Error(m) {}
};

struct NotFiniteValue : Error {
  explicit NotFiniteValue(const std::string& m = "no finiteness route applies to this sample") : Error(m) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m = "resolution exceeded the step cap") : Error(m) {}
};

struct InvalidChainMap : Error {
  explicit InvalidChainMap(const std::string& m = "components do not commute with differentials") : Error(m) {}
};

struct TooFewSamples : Error {
  explicit TooFewSamples(const std::string& m = "not enough samples to fit") : Error(m) {}
};

struct DegreeExceedsC : Error {
  explicit DegreeExceedsC(const std::string& m = "fitted degree exceeds the reference degree c") : Error(m) {}
};

struct HypothesisViolation : Error {
  explicit HypothesisViolation(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error(m) {}
};

struct TimedOut : Error {
  explicit TimedOut(const std::string& m = "check exceeded its time budget") : Error(m) {}
};

}  // namespace hilbtor
