// Multivariate gcd over Q. The heuristic integer gcd (evaluate, recurse,
// reconstruct, verify by division) is tried first; the subresultant remainder
// sequence in a chosen main variable is the fallback and is always exact.

#include <algorithm>
#include <map>
#include <utility>

#include "unipv/errors.hpp"
#include "unipv/mpoly.hpp"

namespace unipv {
namespace {

// Dense univariate polynomial with multivariate coefficients, index = power.
using UPoly = std::vector<MPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

MPoly gcd_nonzero(const MPoly& a, const MPoly& b);

MPoly monomial_gcd(const Monomial& m, const MPoly& p) {
  Monomial g = m;
  for (const auto& t : p.terms()) {
    g = g.gcd(t.mono);
    if (g.is_one()) break;
  }
  return MPoly(Scalar(1), g);
}

// gcd of a family, folding from the smallest element.
MPoly gcd_of(std::vector<MPoly> polys, MPoly start = MPoly()) {
  std::sort(polys.begin(), polys.end(), [](const MPoly& x, const MPoly& y) { return x.size() < y.size(); });
  MPoly g = std::move(start);
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : gcd_nonzero(g, p);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

UPoly prem(UPoly a, const UPoly& b) {
  const int n = degree(b);
  const MPoly& lb = b.back();
  int e = degree(a) - n + 1;
  while (!a.empty() && degree(a) >= n) {
    const int shift = degree(a) - n;
    MPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= n; ++k) a[k + shift] -= la * b[k];
    trim(a);
    --e;
  }
  if (e > 0) {
    MPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

UPoly primitive_part(const UPoly& p) {
  MPoly c = gcd_of(p);
  if (c.is_one()) return p;
  UPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x.divide_exact(c));
  return out;
}

// gcd of two primitive polynomials in the main variable.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  MPoly g(1);
  MPoly h(1);
  while (true) {
    const int d = degree(a) - degree(b);
    UPoly r = prem(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return UPoly{MPoly(1)};
    a = std::move(b);
    MPoly divisor = g * h.pow(static_cast<unsigned>(d));
    for (auto& c : r) c = c.divide_exact(divisor);
    b = std::move(r);
    g = a.back();
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      h = g.pow(static_cast<unsigned>(d)).divide_exact(h.pow(static_cast<unsigned>(d - 1)));
    }
  }
  return primitive_part(b);
}

// Coefficients of p grouped by the part of each monomial built from `vars`.
std::vector<MPoly> coefficients_over(const MPoly& p, const std::vector<Variable>& vars) {
  std::map<std::vector<VarPower>, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<VarPower> key;
    std::vector<VarPower> rest;
    for (const auto& vp : t.mono.powers()) {
      if (std::binary_search(vars.begin(), vars.end(), vp.var)) {
        key.push_back(vp);
      } else {
        rest.push_back(vp);
      }
    }
    groups[key].push_back({Monomial::from_powers(std::move(rest)), t.coeff});
  }
  std::vector<MPoly> out;
  out.reserve(groups.size());
  for (auto& [_, terms] : groups) out.push_back(MPoly::from_terms(std::move(terms)));
  return out;
}

// ------------------------------------------------- heuristic integer gcd

mpz_class max_norm(const MPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class c = abs(t.coeff.get_num());
    if (c > m) m = c;
  }
  return m;
}

// Integer content with the sign of the leading coefficient; p has integer coefficients.
mpz_class integer_content(const MPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  if (!p.is_zero() && p.leading_coeff() < 0) g = -g;
  return g;
}

// Scales p to a primitive integer polynomial with positive leading coefficient.
MPoly integer_primitive(const MPoly& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  MPoly q = l == 1 ? p : p.scaled(Scalar(l));
  mpz_class c = integer_content(q);
  return c == 1 ? q : q.scaled(Scalar(1) / Scalar(c));
}

MPoly evaluate_at(const MPoly& p, Variable v, const mpz_class& x) {
  std::vector<Term> out;
  out.reserve(p.size());
  mpz_class power;
  for (const auto& t : p.terms()) {
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), t.mono.degree_in(v));
    out.push_back({t.mono.without(v), t.coeff * Scalar(power)});
  }
  return MPoly::from_terms(std::move(out));
}

// Inverse of evaluate_at for a polynomial whose coefficients in v are small compared to x.
MPoly interpolate(MPoly h, Variable v, const mpz_class& x) {
  std::vector<MPoly> coeffs;
  const mpz_class half = x / 2;
  while (!h.is_zero()) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) digit.push_back({t.mono, Scalar(r)});
    }
    MPoly g = MPoly::from_sorted(std::move(digit));
    h = (h - g).scaled(Scalar(1) / Scalar(x));
    coeffs.push_back(std::move(g));
  }
  return MPoly::from_coefficients(v, coeffs);
}

// gcd of primitive-or-not integer polynomials, up to sign; nullopt when the
// heuristic gives up.
std::optional<MPoly> heuristic_gcd(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() && g.is_constant()) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), f.leading_coeff().get_num_mpz_t(), g.leading_coeff().get_num_mpz_t());
    return MPoly(Scalar(r));
  }
  const mpz_class cf = integer_content(f);
  const mpz_class cg = integer_content(g);
  mpz_class content;
  mpz_gcd(content.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const MPoly pf = f.scaled(Scalar(1) / Scalar(cf));
  const MPoly pg = g.scaled(Scalar(1) / Scalar(cg));
  if (pf.is_constant() || pg.is_constant()) return MPoly(Scalar(content));

  auto vars = pf.variables();
  const auto vg = pg.variables();
  vars.insert(vars.end(), vg.begin(), vg.end());
  const Variable v = *std::max_element(vars.begin(), vars.end());

  const mpz_class nf = max_norm(pf);
  const mpz_class ng = max_norm(pg);
  // Evaluation points above twice the smaller norm make a verified candidate the true gcd.
  mpz_class x = 2 * std::min(nf, ng) + 29;

  for (int attempt = 0; attempt < 6; ++attempt) {
    const MPoly ef = evaluate_at(pf, v, x);
    const MPoly eg = evaluate_at(pg, v, x);
    if (!ef.is_zero() && !eg.is_zero()) {
      if (auto h = heuristic_gcd(ef, eg)) {
        MPoly cand = integer_primitive(interpolate(*h, v, x));
        if (!cand.is_zero() && pf.try_divide(cand) && pg.try_divide(cand)) return cand.scaled(Scalar(content));
        if (auto cofactor = ef.try_divide(*h)) {
          MPoly cff = interpolate(*cofactor, v, x);
          if (!cff.is_zero()) {
            if (auto q = pf.try_divide(cff)) {
              MPoly c2 = integer_primitive(*q);
              if (pg.try_divide(c2)) return c2.scaled(Scalar(content));
            }
          }
        }
      }
    }
    x = x * 73794 * sqrt(sqrt(x)) / 27011;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- dispatcher

MPoly gcd_nonzero(const MPoly& a, const MPoly& b) {
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a.size() == 1) return monomial_gcd(a.leading_term().mono, b);
  if (b.size() == 1) return monomial_gcd(b.leading_term().mono, a);
  if (a == b || a.monic() == b.monic()) return a.monic();

  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& large = a.size() <= b.size() ? b : a;
  if (large.try_divide(small)) return small.monic();

  const auto va = a.variables();
  const auto vb = b.variables();
  std::vector<Variable> only_a, only_b, common;
  std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(only_a));
  std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::back_inserter(only_b));
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (common.empty()) return MPoly(1);

  // A variable present in only one argument cannot occur in the gcd, so the gcd
  // divides each coefficient with respect to those variables.
  if (!only_a.empty()) return gcd_of(coefficients_over(a, only_a), b.monic());
  if (!only_b.empty()) return gcd_of(coefficients_over(b, only_b), a.monic());

  if (auto h = heuristic_gcd(integer_primitive(a), integer_primitive(b))) return h->monic();

  Variable v = common.front();
  auto cost = [&](Variable x) { return std::max(a.degree_in(x), b.degree_in(x)); };
  for (Variable x : common)
    if (cost(x) < cost(v)) v = x;

  UPoly ua = a.coefficients_in(v);
  UPoly ub = b.coefficients_in(v);
  MPoly ca = gcd_of(ua);
  MPoly cb = gcd_of(ub);
  MPoly content = gcd_nonzero(ca, cb);
  if (!ca.is_one())
    for (auto& c : ua) c = c.divide_exact(ca);
  if (!cb.is_one())
    for (auto& c : ub) c = c.divide_exact(cb);
  UPoly g = subresultant_gcd(std::move(ua), std::move(ub));
  return (content * MPoly::from_coefficients(v, g)).monic();
}

}  // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_nonzero(a, b).monic();
}

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  return (a * b.divide_exact(poly_gcd(a, b))).monic();
}

}  // namespace unipv
