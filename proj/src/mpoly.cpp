#include "unipv/mpoly.hpp"

#include <algorithm>
#include <utility>

#include "unipv/errors.hpp"

namespace unipv {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Variable v, unsigned exp) {
  if (exp > 0) {
    powers_.push_back({v, exp});
    degree_ = exp;
  }
}

Monomial Monomial::from_powers(std::vector<VarPower> powers) {
  std::sort(powers.begin(), powers.end(), [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& p : powers) {
    if (p.exp == 0) continue;
    if (!m.powers_.empty() && m.powers_.back().var == p.var) {
      m.powers_.back().exp += p.exp;
    } else {
      m.powers_.push_back(p);
    }
    m.degree_ += p.exp;
  }
  return m;
}

unsigned Monomial::degree_in(Variable v) const {
  for (const auto& p : powers_) {
    if (p.var == v) return p.exp;
    if (v < p.var) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->var < b->var)) {
      r.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->var < a->var) {
      r.powers_.push_back(*b++);
    } else {
      r.powers_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto b = other.powers_.begin();
  for (const auto& p : powers_) {
    while (b != other.powers_.end() && b->var < p.var) ++b;
    if (b == other.powers_.end() || b->var != p.var || b->exp < p.exp) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial r;
  auto d = divisor.powers_.begin();
  for (const auto& p : powers_) {
    unsigned e = p.exp;
    if (d != divisor.powers_.end() && d->var == p.var) {
      e -= d->exp;
      ++d;
    }
    if (e > 0) r.powers_.push_back({p.var, e});
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  auto b = other.powers_.begin();
  for (const auto& p : powers_) {
    while (b != other.powers_.end() && b->var < p.var) ++b;
    if (b != other.powers_.end() && b->var == p.var) {
      unsigned e = std::min(p.exp, b->exp);
      r.powers_.push_back({p.var, e});
      r.degree_ += e;
    }
  }
  return r;
}

Monomial Monomial::without(Variable v) const {
  Monomial r;
  for (const auto& p : powers_) {
    if (p.var == v) continue;
    r.powers_.push_back(p);
    r.degree_ += p.exp;
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.powers_.size(), b.powers_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pa = a.powers_[i];
    const auto& pb = b.powers_[i];
    // The monomial carrying the more significant variable is larger.
    if (pa.var != pb.var) return pa.var < pb.var ? std::strong_ordering::greater : std::strong_ordering::less;
    if (pa.exp != pb.exp) return pa.exp <=> pb.exp;
  }
  return a.powers_.size() <=> b.powers_.size();
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(long c) : MPoly(Scalar(c)) {}

MPoly::MPoly(const Scalar& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MPoly::MPoly(Variable v) { terms_.push_back({Monomial(v), Scalar(1)}); }

MPoly::MPoly(const Scalar& c, Monomial m) {
  if (c != 0) terms_.push_back({std::move(m), c});
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MPoly r;
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff += t.coeff;
    } else {
      if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
  return r;
}

MPoly MPoly::from_sorted(std::vector<Term> terms) {
  MPoly r;
  r.terms_ = std::move(terms);
  return r;
}

Scalar MPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MPoly::degree_in(Variable v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

bool MPoly::contains(Variable v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree_in(v) > 0; });
}

bool MPoly::contains_kind(VarKind kind) const {
  for (const auto& t : terms_)
    for (const auto& p : t.mono.powers())
      if (p.var.kind() == kind) return true;
  return false;
}

std::vector<Variable> MPoly::variables() const {
  std::vector<Variable> vs;
  for (const auto& t : terms_)
    for (const auto& p : t.mono.powers()) vs.push_back(p.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <bool Subtract>
MPoly merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->mono > i->mono) {
      out.push_back(*j++);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      Scalar c = Subtract ? Scalar(i->coeff - j->coeff) : Scalar(i->coeff + j->coeff);
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return MPoly::from_sorted(std::move(out));
}

}  // namespace

MPoly MPoly::operator+(const MPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return merge<false>(terms_, o.terms_);
}

MPoly MPoly::operator-(const MPoly& o) const {
  if (o.is_zero()) return *this;
  return merge<true>(terms_, o.terms_);
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  if (o.terms_.size() == 1) return times_term(o.terms_[0].coeff, o.terms_[0].mono);
  if (terms_.size() == 1) return o.times_term(terms_[0].coeff, terms_[0].mono);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(std::move(out));
}

MPoly MPoly::scaled(const Scalar& c) const {
  if (c == 0) return MPoly();
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MPoly MPoly::times_term(const Scalar& c, const Monomial& m) const {
  if (c == 0) return MPoly();
  MPoly r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves a monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<MPoly> MPoly::try_divide(const MPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return MPoly();
  if (divisor.is_constant()) return scaled(1 / divisor.leading_coeff());
  if (divisor.total_degree() > total_degree()) return std::nullopt;
  for (const auto& p : divisor.leading_term().mono.powers())
    if (degree_in(p.var) < p.exp) return std::nullopt;

  const Term& lead = divisor.leading_term();
  std::vector<Term> quotient;
  MPoly rem = *this;
  while (!rem.is_zero()) {
    const Term& rt = rem.leading_term();
    if (!lead.mono.divides(rt.mono)) return std::nullopt;
    Scalar c = rt.coeff / lead.coeff;
    Monomial m = rt.mono.divided_by(lead.mono);
    rem = rem - divisor.times_term(c, m);
    quotient.push_back({std::move(m), std::move(c)});
  }
  // Quotient terms are produced in decreasing order.
  return from_sorted(std::move(quotient));
}

MPoly MPoly::divide_exact(const MPoly& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw DomainError("polynomial division is not exact");
  return *std::move(q);
}

MPoly MPoly::partial(Variable v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.degree_in(v);
    if (e == 0) continue;
    std::vector<VarPower> ps = t.mono.powers();
    for (auto& p : ps)
      if (p.var == v) --p.exp;
    out.push_back({Monomial::from_powers(std::move(ps)), t.coeff * e});
  }
  return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coefficients_in(Variable v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& t : terms_) buckets[t.mono.degree_in(v)].push_back({t.mono.without(v), t.coeff});
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::from_coefficients(Variable v, std::span<const MPoly> coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial vk(v, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms()) out.push_back({t.mono * vk, t.coeff});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(1 / leading_coeff());
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- printing

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (const auto& p : m.powers()) {
    if (!s.empty()) s += '*';
    s += p.var.text();
    if (p.exp > 1) s += "^" + std::to_string(p.exp);
  }
  return s;
}

std::string monomial_latex(const Monomial& m) {
  std::string s;
  for (const auto& p : m.powers()) {
    if (!s.empty()) s += ' ';
    s += p.var.latex();
    if (p.exp > 1) s += "^{" + std::to_string(p.exp) + "}";
  }
  return s;
}

std::string scalar_latex(const Scalar& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

}  // namespace

std::string MPoly::text() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    Scalar mag = abs(t.coeff);
    if (t.coeff < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    if (t.mono.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += monomial_text(t.mono);
    } else {
      s += mag.get_str() + "*" + monomial_text(t.mono);
    }
  }
  return s;
}

std::string MPoly::latex() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    Scalar mag = abs(t.coeff);
    if (t.coeff < 0) {
      s += s.empty() ? "-" : " - ";
    } else if (!s.empty()) {
      s += " + ";
    }
    if (t.mono.is_one()) {
      s += scalar_latex(mag);
    } else if (mag == 1) {
      s += monomial_latex(t.mono);
    } else {
      s += scalar_latex(mag) + " " + monomial_latex(t.mono);
    }
  }
  return s;
}

}  // namespace unipv
