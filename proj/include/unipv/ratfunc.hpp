#pragma once

#include <string>
#include <string_view>

#include "unipv/mpoly.hpp"

namespace unipv {

/// Element of Q(z, a1.., x[i,j]..) kept in canonical form: gcd(num, den) = 1 and
/// den has deglex leading coefficient 1. Equal values have equal representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Scalar& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  explicit RatFunc(Variable v) : num_(v), den_(1) {}
  /// Normalizes num/den; throws DivisionByZero when den is zero.
  RatFunc(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool contains(Variable v) const { return num_.contains(v) || den_.contains(v); }
  bool contains_kind(VarKind k) const { return num_.contains_kind(k) || den_.contains_kind(k); }
  /// True when the value lies in F = Q(a)(z), i.e. no x[i,j] occurs.
  bool in_base_field() const { return !contains_kind(VarKind::X); }
  /// True when the value is a constant of the differential field: only parameters occur.
  bool is_parameter_only() const { return !contains_kind(VarKind::X) && !contains_kind(VarKind::Z); }
  std::vector<Variable> variables() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws DivisionByZero when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  /// Integer power; negative exponents invert (zero base then throws).
  RatFunc pow(long e) const;
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Canonical text in the expression grammar; parse_expr(text()) == *this.
  std::string text() const;
  std::string latex() const;

 private:
  struct Normalized {};
  RatFunc(MPoly num, MPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  MPoly num_;
  MPoly den_;
};

/// Parses text in the expression grammar. Parameters a_i must satisfy i <= max_param
/// and generators x[i,j] must fit an extension of that size.
RatFunc parse_expr(std::string_view text, unsigned max_param);

}  // namespace unipv
