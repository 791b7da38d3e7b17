#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieinv {

/// Base of every error raised by the library. `module()` names the
/// component that raised it so the CLI can report provenance.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)) {}
  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("expr", what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& name)
      : ParseError(offset, "unknown identifier '" + name + "'") {}
};

class MalformedJetIndex : public ParseError {
 public:
  MalformedJetIndex(std::size_t offset, const std::string& name)
      : ParseError(offset, "malformed jet index in '" + name + "'") {}
};

class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name)
      : Error("expr", "unbound symbol '" + name + "'") {}
};

class SingularEvaluation : public Error {
 public:
  explicit SingularEvaluation(const std::string& subexpr)
      : Error("expr", "singular evaluation at " + subexpr), subexpr_(subexpr) {}
  const std::string& subexpression() const noexcept { return subexpr_; }

 private:
  std::string subexpr_;
};

class Unsampleable : public Error {
 public:
  explicit Unsampleable(const std::string& what) : Error("expr", "unsampleable: " + what) {}
};

class Unsupported : public Error {
 public:
  Unsupported(std::string module, const std::string& what) : Error(std::move(module), what) {}
};

class ContextMismatch : public Error {
 public:
  explicit ContextMismatch(const std::string& what) : Error("jet", "context mismatch: " + what) {}
};

class OrderOverflow : public Error {
 public:
  explicit OrderOverflow(const std::string& what) : Error("jet", "order overflow: " + what) {}
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(int i, int j, int k, int l)
      : Error("liealg", "Jacobi identity violated at (i,j,k,l)=(" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + "," +
                            std::to_string(l) + ")"),
        i_(i), j_(j), k_(k), l_(l) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }

 private:
  int i_, j_, k_, l_;
};

class EigenvalueUnsupported : public Error {
 public:
  explicit EigenvalueUnsupported(const std::string& what) : Error("liealg", what) {}
};

class VerificationFailed : public Error {
 public:
  VerificationFailed(std::string module, const std::string& what)
      : Error(std::move(module), "verification failed: " + what) {}
};

class CatalogError : public Error {
 public:
  explicit CatalogError(const std::string& what) : Error("liealg", what) {}
};

class NotRescaleInvariant : public Error {
 public:
  explicit NotRescaleInvariant(const std::string& what)
      : Error("covariant", "not rescale invariant: " + what) {}
};

class NotHomogeneous : public Error {
 public:
  explicit NotHomogeneous(const std::string& what)
      : Error("covariant", "not homogeneous: " + what) {}
};

class ResidualDependence : public Error {
 public:
  explicit ResidualDependence(const std::string& what)
      : Error("invariants", "residual dependence: " + what) {}
};

class SingularRealization : public Error {
 public:
  explicit SingularRealization(const std::string& what)
      : Error("invariants", "singular realization: " + what) {}
};

}  // namespace lieinv
