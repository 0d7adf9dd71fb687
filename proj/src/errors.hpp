#pragma once

#include <stdexcept>
#include <string>

namespace anum {

// Error categories map one-to-one onto C API status codes / CLI exit codes.
enum class ErrorKind {
  invalid_input,  // bad parameters or usage
  internal,       // consistency failure inside the engine (a bug, not bad input)
  resource,       // guard tripped (field too large, genus cap)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w = "division by zero in F_p")
      : Error(ErrorKind::invalid_input, w) {}
};

struct ModulusMismatch : Error {
  explicit ModulusMismatch(const std::string& w = "operands carry different moduli")
      : Error(ErrorKind::invalid_input, w) {}
};

struct UndefinedPower : Error {
  explicit UndefinedPower(const std::string& w = "0^0 is undefined")
      : Error(ErrorKind::invalid_input, w) {}
};

struct InvalidPrime : Error {
  explicit InvalidPrime(const std::string& w) : Error(ErrorKind::invalid_input, w) {}
};

struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& w) : Error(ErrorKind::invalid_input, w) {}
};

struct ZeroGenus : Error {
  explicit ZeroGenus(const std::string& w = "curve has genus 0; no holomorphic differentials")
      : Error(ErrorKind::invalid_input, w) {}
};

struct NonDivisibleExponent : Error {
  explicit NonDivisibleExponent(const std::string& w)
      : Error(ErrorKind::internal, w) {}
};

struct BasisCountMismatch : Error {
  explicit BasisCountMismatch(const std::string& w) : Error(ErrorKind::internal, w) {}
};

struct ImageOutsideBasis : Error {
  explicit ImageOutsideBasis(const std::string& w) : Error(ErrorKind::internal, w) {}
};

struct FieldTooLarge : Error {
  explicit FieldTooLarge(const std::string& w) : Error(ErrorKind::resource, w) {}
};

struct GenusCapExceeded : Error {
  explicit GenusCapExceeded(const std::string& w) : Error(ErrorKind::resource, w) {}
};

struct IoFailure : Error {
  explicit IoFailure(const std::string& w) : Error(ErrorKind::invalid_input, w) {}
};

}  // namespace anum
