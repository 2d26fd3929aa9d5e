#include "unipv/condition_c.hpp"

#include <algorithm>

#include "unipv/derivation.hpp"
#include "unipv/errors.hpp"

namespace unipv {
namespace {

const Variable kZ = Variable::z();

// Dense polynomial in z over the constants K = Q(a); index = power of z.
using KPoly = std::vector<RatFunc>;

void trim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly to_kpoly(const MPoly& p) {
  KPoly out;
  for (auto& c : p.coefficients_in(kZ)) out.emplace_back(std::move(c));
  trim(out);
  return out;
}

KPoly mul(const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Euclidean division over K.
std::pair<KPoly, KPoly> divmod(KPoly a, const KPoly& b) {
  if (b.empty()) throw DivisionByZero();
  KPoly q;
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  const RatFunc lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const RatFunc t = a.back() * lead_inv;
    q[shift] = t;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= t * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

// p(t + s): re-expands p around z = s.
KPoly shift(const KPoly& p, const RatFunc& s) {
  KPoly out;
  for (std::size_t i = p.size(); i-- > 0;) {
    out = mul(out, KPoly{s, RatFunc(1)});
    if (out.empty()) out.resize(1);
    out[0] += p[i];
    trim(out);
  }
  return out;
}

// First `count` power-series coefficients of a/b at t = 0; b(0) != 0.
KPoly series_divide(const KPoly& a, const KPoly& b, std::size_t count) {
  KPoly s(count);
  const RatFunc b0_inv = b.at(0).inverse();
  for (std::size_t k = 0; k < count; ++k) {
    RatFunc acc = k < a.size() ? a[k] : RatFunc();
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * s[k - j];
    s[k] = acc * b0_inv;
  }
  return s;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) throw DomainError("denominator coefficients too large to search for rational poles");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_root(const MPoly& p, const Scalar& r) {
  Scalar acc = 0;
  const auto coeffs = p.coefficients_in(kZ);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + it->constant_value();
  return acc == 0;
}

// Splits a monic denominator into (z - location)^order factors.
std::vector<Pole> split_denominator(const MPoly& den) {
  std::vector<Pole> poles;
  MPoly rest = den;
  for (Variable v : den.variables()) {
    if (!v.is_param()) continue;
    const MPoly factor = MPoly(kZ) + MPoly(v);
    unsigned order = 0;
    while (auto q = rest.try_divide(factor)) {
      rest = *std::move(q);
      ++order;
    }
    if (order > 0) poles.push_back({-RatFunc(v), order});
  }
  if (rest.contains_kind(VarKind::Param) || rest.contains_kind(VarKind::X))
    throw DomainError("unsupported denominator factor " + rest.monic().text() +
                      " (poles must be -a_k or rational)");

  // Rational roots of the remaining univariate factor.
  while (rest.total_degree() > 0) {
    mpz_class scale = 1;
    for (const auto& t : rest.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coeff.get_den_mpz_t());
    const MPoly ip = rest.scaled(Scalar(scale));
    const auto coeffs = ip.coefficients_in(kZ);
    std::optional<Scalar> root;
    if (coeffs[0].is_zero()) {
      root = Scalar(0);
    } else {
      for (const auto& p : divisors(coeffs[0].constant_value().get_num())) {
        for (const auto& q : divisors(coeffs.back().constant_value().get_num())) {
          for (int sign : {1, -1}) {
            Scalar r(p * sign, q);
            r.canonicalize();
            if (is_root(ip, r)) root = r;
            if (root) break;
          }
          if (root) break;
        }
        if (root) break;
      }
    }
    if (!root) throw DomainError("unsupported denominator factor " + rest.monic().text() + " (irrational poles)");
    const MPoly factor = MPoly(kZ) - MPoly(*root);
    unsigned order = 0;
    while (auto q = rest.try_divide(factor)) {
      rest = *std::move(q);
      ++order;
    }
    poles.push_back({RatFunc(*root), order});
  }
  return poles;
}

bool same_location(const RatFunc& a, const RatFunc& b) { return a == b; }

// Partial fractions of u: polynomial part plus principal parts at each pole.
struct PartialFractions {
  KPoly polynomial;
  std::vector<Pole> poles;
  // principal[p][k-1] multiplies 1/(z - location)^k.
  std::vector<KPoly> principal;
};

PartialFractions partial_fractions(const RatFunc& u) {
  if (!u.in_base_field()) throw DomainError("condition C inputs must lie in F: " + u.text());
  PartialFractions pf;
  const KPoly num = to_kpoly(u.num());
  const KPoly den = to_kpoly(u.den());
  auto [poly, rem] = divmod(num, den);
  pf.polynomial = std::move(poly);
  pf.poles = split_denominator(u.den());
  for (const auto& pole : pf.poles) {
    // den = (z - loc)^m * cofactor; expand rem / cofactor around z = loc.
    const KPoly linear{-pole.location, RatFunc(1)};
    KPoly cofactor = den;
    for (unsigned k = 0; k < pole.order; ++k) cofactor = divmod(cofactor, linear).first;
    const KPoly s = series_divide(shift(rem, pole.location), shift(cofactor, pole.location), pole.order);
    KPoly principal(pole.order);
    for (unsigned k = 0; k < pole.order; ++k) principal[pole.order - 1 - k] = s[k];
    pf.principal.push_back(std::move(principal));
  }
  return pf;
}

// Antiderivative of everything except the simple-pole terms.
RatFunc integrate_non_residue(const PartialFractions& pf) {
  RatFunc acc;
  RatFunc power(kZ);
  for (std::size_t k = 0; k < pf.polynomial.size(); ++k) {
    acc += pf.polynomial[k] * power / RatFunc(static_cast<long>(k + 1));
    power *= RatFunc(kZ);
  }
  for (std::size_t p = 0; p < pf.poles.size(); ++p) {
    const RatFunc linear = RatFunc(kZ) - pf.poles[p].location;
    for (std::size_t k = 2; k <= pf.principal[p].size(); ++k) {
      const RatFunc& a = pf.principal[p][k - 1];
      if (a.is_zero()) continue;
      acc -= a / (RatFunc(static_cast<long>(k - 1)) * linear.pow(static_cast<long>(k - 1)));
    }
  }
  return acc;
}

RatFunc residue_at(const PartialFractions& pf, const RatFunc& location) {
  for (std::size_t p = 0; p < pf.poles.size(); ++p)
    if (same_location(pf.poles[p].location, location)) return pf.principal[p][0];
  return RatFunc();
}

// Column echelon data over K: pivot columns and the reduced matrix.
struct Echelon {
  Matrix<RatFunc> reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon row_reduce(Matrix<RatFunc> m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pivot = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(row, k), m(pivot, k));
    const RatFunc inv = m(row, c).inverse();
    for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const RatFunc factor = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= factor * m(row, k);
    }
    e.pivot_cols.push_back(c);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

RatFunc integrate_residue_free(const RatFunc& u) {
  const PartialFractions pf = partial_fractions(u);
  for (const auto& p : pf.principal)
    if (!p[0].is_zero()) throw DomainError("function has a nonzero residue and no antiderivative in F");
  return integrate_non_residue(pf);
}

ConditionCReport check_condition_c(const std::vector<RatFunc>& f) {
  if (f.empty()) throw DomainError("condition C needs at least one function");
  std::vector<PartialFractions> parts;
  parts.reserve(f.size());
  for (const auto& fi : f) parts.push_back(partial_fractions(fi));

  ConditionCReport report;
  for (const auto& pf : parts)
    for (const auto& pole : pf.poles) {
      auto it = std::find_if(report.poles.begin(), report.poles.end(),
                             [&](const Pole& p) { return same_location(p.location, pole.location); });
      if (it == report.poles.end()) {
        report.poles.push_back(pole);
      } else {
        it->order = std::max(it->order, pole.order);
      }
    }

  const std::size_t n = f.size();
  report.residues = Matrix<RatFunc>(report.poles.size(), n);
  for (std::size_t p = 0; p < report.poles.size(); ++p)
    for (std::size_t i = 0; i < n; ++i) report.residues(p, i) = residue_at(parts[i], report.poles[p].location);

  const Echelon e = row_reduce(report.residues);
  report.rank = static_cast<unsigned>(e.pivot_cols.size());
  report.holds = report.rank == n;
  if (report.holds) return report;

  // Kernel vector from the first free column, scaled so its first nonzero entry is 1.
  std::size_t free_col = 0;
  while (std::find(e.pivot_cols.begin(), e.pivot_cols.end(), free_col) != e.pivot_cols.end()) ++free_col;
  std::vector<RatFunc> c(n);
  c[free_col] = RatFunc(1);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) c[e.pivot_cols[r]] = -e.reduced(r, free_col);
  const RatFunc lead = *std::find_if(c.begin(), c.end(), [](const RatFunc& x) { return !x.is_zero(); });
  for (auto& ci : c) ci /= lead;

  // The residues of sum c_i f_i cancel, so the rest integrates termwise.
  RatFunc antiderivative;
  RatFunc combination;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].is_zero()) continue;
    antiderivative += c[i] * integrate_non_residue(parts[i]);
    combination += c[i] * f[i];
  }
  if (!(Derivation().derive(antiderivative) == combination))
    throw Error("internal error: condition C witness failed verification");
  report.witness = ConditionCWitness{std::move(c), std::move(antiderivative)};
  return report;
}

std::string to_text(const ConditionCReport& report) {
  std::string s = std::string("holds=") + (report.holds ? "true" : "false") + "\n";
  s += "rank=" + std::to_string(report.rank) + "\n";
  s += "residue_matrix:\n";
  for (std::size_t p = 0; p < report.poles.size(); ++p) {
    s += "  z=" + report.poles[p].location.text() + ":";
    for (std::size_t i = 0; i < report.residues.cols(); ++i) s += " " + report.residues(p, i).text();
    s += "\n";
  }
  s += "note: polynomial parts and poles of order >= 2 are always integrable in F\n";
  if (report.witness) {
    s += "witness.c:";
    for (const auto& c : report.witness->c) s += " " + c.text();
    s += "\nwitness.f=" + report.witness->antiderivative.text() + "\n";
  }
  return s;
}

}  // namespace unipv
