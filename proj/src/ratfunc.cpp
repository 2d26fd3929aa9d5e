#include "unipv/ratfunc.hpp"

#include <algorithm>

#include "unipv/errors.hpp"

namespace unipv {

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  MPoly g = poly_gcd(num, den);
  MPoly n = g.is_one() ? num : num.divide_exact(g);
  MPoly d = g.is_one() ? den : den.divide_exact(g);
  Scalar lc = d.leading_coeff();
  num_ = n.scaled(1 / lc);
  den_ = d.scaled(1 / lc);
}

std::vector<Variable> RatFunc::variables() const {
  auto a = num_.variables();
  auto b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, RatFunc::Normalized{});
  if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::Normalized{});
  MPoly g = poly_gcd(a.den_, b.den_);
  MPoly ad = a.den_.divide_exact(g);
  MPoly bd = b.den_.divide_exact(g);
  MPoly num = a.num_ * bd + b.num_ * ad;
  // Only factors of g can be shared by the new numerator and denominator.
  MPoly h = poly_gcd(num, g);
  if (!h.is_one()) {
    num = num.divide_exact(h);
    g = g.divide_exact(h);
  }
  MPoly den = ad * bd * g;
  Scalar lc = den.leading_coeff();
  return RatFunc(num.scaled(1 / lc), den.scaled(1 / lc), RatFunc::Normalized{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, MPoly(1), RatFunc::Normalized{});
  MPoly g1 = poly_gcd(a.num_, b.den_);
  MPoly g2 = poly_gcd(b.num_, a.den_);
  MPoly num = (g1.is_one() ? a.num_ : a.num_.divide_exact(g1)) * (g2.is_one() ? b.num_ : b.num_.divide_exact(g2));
  MPoly den = (g2.is_one() ? a.den_ : a.den_.divide_exact(g2)) * (g1.is_one() ? b.den_ : b.den_.divide_exact(g1));
  Scalar lc = den.leading_coeff();
  return RatFunc(num.scaled(1 / lc), den.scaled(1 / lc), RatFunc::Normalized{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar lc = num_.leading_coeff();
  return RatFunc(den_.scaled(1 / lc), num_.scaled(1 / lc), Normalized{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of coprime polynomials stay coprime.
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Normalized{});
}

namespace {

bool needs_parens_as_denominator(const MPoly& p) {
  if (p.size() != 1) return true;
  const Term& t = p.leading_term();
  return t.coeff != 1 || t.mono.powers().size() != 1;
}

}  // namespace

std::string RatFunc::text() const {
  if (den_.is_one()) return num_.text();
  std::string n = num_.size() > 1 ? "(" + num_.text() + ")" : num_.text();
  std::string d = needs_parens_as_denominator(den_) ? "(" + den_.text() + ")" : den_.text();
  return n + "/" + d;
}

std::string RatFunc::latex() const {
  if (den_.is_one()) return num_.latex();
  return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

}  // namespace unipv
