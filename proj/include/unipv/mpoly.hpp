#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unipv/variable.hpp"

namespace unipv {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive denominator).
using Scalar = mpq_class;

struct VarPower {
  Variable var;
  unsigned exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
  friend std::strong_ordering operator<=>(const VarPower&, const VarPower&) = default;
};

/// A power product stored sparsely, sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Variable v, unsigned exp = 1);
  /// Builds from arbitrary (variable, exponent) pairs; zero exponents are dropped.
  static Monomial from_powers(std::vector<VarPower> powers);

  const std::vector<VarPower>& powers() const { return powers_; }
  unsigned degree() const { return degree_; }
  unsigned degree_in(Variable v) const;
  bool is_one() const { return powers_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) to hold for `divisor`.
  Monomial divided_by(const Monomial& divisor) const;
  Monomial gcd(const Monomial& other) const;
  /// Removes every power of v.
  Monomial without(Variable v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers_ == b.powers_; }
  /// Degree-lexicographic order, z most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<VarPower> powers_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Multivariate polynomial over Q with terms kept in strictly decreasing deglex order.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);  // NOLINT: implicit scalars are convenient in formulas
  MPoly(const Scalar& c);  // NOLINT
  explicit MPoly(Variable v);
  MPoly(const Scalar& c, Monomial m);

  /// Takes unsorted terms with possible duplicates and zero coefficients.
  static MPoly from_terms(std::vector<Term> terms);
  /// Terms must already be strictly decreasing with nonzero coefficients.
  static MPoly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }
  /// Constant term value; zero when absent.
  Scalar constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const;
  unsigned degree_in(Variable v) const;
  bool contains(Variable v) const;
  bool contains_kind(VarKind kind) const;
  std::vector<Variable> variables() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Scalar& c) const;
  MPoly times_term(const Scalar& c, const Monomial& m) const;
  MPoly pow(unsigned e) const;

  /// Exact quotient when `divisor` divides this polynomial, nullopt otherwise.
  std::optional<MPoly> try_divide(const MPoly& divisor) const;
  /// Exact quotient; throws DomainError when the division is not exact.
  MPoly divide_exact(const MPoly& divisor) const;

  MPoly partial(Variable v) const;
  /// Coefficients with respect to v: result[k] multiplies v^k.
  std::vector<MPoly> coefficients_in(Variable v) const;
  static MPoly from_coefficients(Variable v, std::span<const MPoly> coeffs);

  /// Scales so the deglex leading coefficient is 1; zero stays zero.
  MPoly monic() const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  std::string text() const;
  std::string latex() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor with leading coefficient 1; gcd(0, b) = monic(b).
MPoly poly_gcd(const MPoly& a, const MPoly& b);
MPoly poly_lcm(const MPoly& a, const MPoly& b);

}  // namespace unipv
