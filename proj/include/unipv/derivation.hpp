#pragma once

#include <map>

#include "unipv/ratfunc.hpp"

namespace unipv {

/// The derivation ' on E. z' = 1 and every parameter is a constant; each generator
/// x[i,j] takes its image from the table. Generators missing from the table are an
/// error rather than silently constant.
class Derivation {
 public:
  Derivation() = default;
  /// Throws DomainError when a key is not a generator or a value mentions a generator
  /// without its own entry.
  explicit Derivation(std::map<Variable, RatFunc> table);

  const std::map<Variable, RatFunc>& table() const { return table_; }
  bool has(Variable v) const;
  /// Image of a single variable.
  RatFunc of(Variable v) const;

  RatFunc derive(const MPoly& p) const;
  RatFunc derive(const RatFunc& u) const;
  /// k-th derivative, k >= 0.
  RatFunc derive(const RatFunc& u, unsigned k) const;
  bool is_constant(const RatFunc& u) const { return derive(u).is_zero(); }

 private:
  std::map<Variable, RatFunc> table_;
};

}  // namespace unipv
