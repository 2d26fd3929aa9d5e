#include "unipv/hyperlog.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <sstream>

#include "unipv/errors.hpp"
#include "unipv/pv_extension.hpp"

namespace unipv {
namespace {

constexpr int kMaxLevel = 40;
constexpr int kMaxPanels = 4000;

template <unsigned N>
double gauss_rule(const std::function<double(double)>& f, double a, double b) {
  using rule = boost::math::quadrature::gauss<double, N>;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      sum += w[i] * f(mid);
    } else {
      sum += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
    }
  }
  return sum * half;
}

// G20 accepted when it agrees with G10; otherwise bisect with half the tolerance each.
double adaptive(const std::function<double(double)>& f, double a, double b, double tol, int level, int& panels) {
  const double coarse = gauss_rule<10>(f, a, b);
  const double fine = gauss_rule<20>(f, a, b);
  const double floor = 64 * std::numeric_limits<double>::epsilon() * std::abs(fine);
  if (std::abs(fine - coarse) <= std::max(tol, floor)) return fine;
  if (level >= kMaxLevel || ++panels > kMaxPanels)
    throw NumericError("quadrature refinement exceeded its subdivision cap");
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, 0.5 * tol, level + 1, panels) + adaptive(f, mid, b, 0.5 * tol, level + 1, panels);
}

void check_segment(std::span<const double> alphas, double z0, double z) {
  const double lo = std::min(z0, z), hi = std::max(z0, z);
  for (double a : alphas) {
    if (!std::isfinite(a)) throw NumericError("non-finite alpha");
    if (lo <= -a && -a <= hi) {
      std::ostringstream os;
      os << "pole on path: z=" << -a << " lies on [" << lo << ", " << hi << "]";
      throw NumericError(os.str());
    }
  }
}

double hyperlog_unchecked(std::span<const double> alphas, double z0, double z, double tol) {
  if (alphas.empty()) return 1.0;
  if (z == z0) return 0.0;
  const double a = alphas.front();
  if (alphas.size() == 1) return std::log((z + a) / (z0 + a));
  const auto rest = alphas.subspan(1);
  const double inner_tol = 0.1 * tol;
  return integrate_adaptive([&](double s) { return hyperlog_unchecked(rest, z0, s, inner_tol) / (s + a); }, z0, z,
                            tol);
}

double evaluate_poly(const MPoly& p, const std::function<double(Variable)>& value, std::map<Variable, double>& cache) {
  double acc = 0.0;
  for (const auto& t : p.terms()) {
    double m = t.coeff.get_d();
    for (const auto& vp : t.mono.powers()) {
      auto it = cache.find(vp.var);
      if (it == cache.end()) it = cache.emplace(vp.var, value(vp.var)).first;
      m *= std::pow(it->second, static_cast<double>(vp.exp));
    }
    acc += m;
  }
  return acc;
}

// alphas[q-1 .. p+q-2] for generator x[p,q].
std::span<const double> generator_alphas(const std::vector<double>& alphas, unsigned p, unsigned q) {
  return std::span<const double>(alphas).subspan(q - 1, p);
}

void finish(NumericCheckReport& r, double tol) {
  r.tol = tol;
  r.samples = r.per_sample.size();
  r.max_residual = 0.0;
  for (const auto& s : r.per_sample) {
    if (!std::isfinite(s.residual)) throw NumericError("non-finite residual at z=" + std::to_string(s.z));
    r.max_residual = std::max(r.max_residual, s.residual);
  }
  r.passed = r.max_residual < tol;
}

// One async task per grid point; results kept in grid order.
template <class F>
std::vector<NumericSample> per_grid_point(const std::vector<double>& grid, F&& body) {
  std::vector<std::future<std::vector<NumericSample>>> jobs;
  for (double z : grid) jobs.push_back(std::async(std::launch::async, body, z));
  std::vector<NumericSample> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw NumericError("tolerance must be positive");
  if (a == b) return 0.0;
  int panels = 0;
  return adaptive(f, a, b, tol, 0, panels);
}

double eval_hyperlog(std::span<const double> alphas, double z0, double z, double tol) {
  if (!(tol > 0.0)) throw NumericError("tolerance must be positive");
  if (!std::isfinite(z0) || !std::isfinite(z)) throw NumericError("non-finite endpoint");
  check_segment(alphas, z0, z);
  return hyperlog_unchecked(alphas, z0, z, tol);
}

double eval_hyperlog(const HyperlogSpec& spec) { return eval_hyperlog(spec.alphas, spec.z0, spec.z, spec.tol); }

double evaluate(const RatFunc& u, const std::function<double(Variable)>& value) {
  std::map<Variable, double> cache;
  const double den = evaluate_poly(u.den(), value, cache);
  if (den == 0.0) throw NumericError("evaluation at a pole of " + u.text());
  return evaluate_poly(u.num(), value, cache) / den;
}

NumericCheckReport numeric_derivation_check(const std::vector<double>& alphas, unsigned n,
                                            const std::vector<double>& grid, double tol, double z0, double quad_tol) {
  if (alphas.size() < n) throw NumericError("need " + std::to_string(n) + " alpha values");
  NumericCheckReport report;
  report.per_sample = per_grid_point(grid, [&](double z) {
    std::vector<NumericSample> out;
    // Step: 1e-2 unless a pole is closer; the stencil must stay on the pole-free side.
    double dist = std::numeric_limits<double>::infinity();
    for (unsigned j = 0; j < n; ++j) {
      check_segment(std::span<const double>(&alphas[j], 1), z0, z);
      dist = std::min(dist, std::abs(z + alphas[j]));
    }
    const double h = std::min(1e-2, 0.2 * dist);
    for (unsigned p = 1; p <= n; ++p)
      for (unsigned q = 1; p + q <= n + 1; ++q) {
        const auto a = generator_alphas(alphas, p, q);
        auto L = [&](double s) { return eval_hyperlog(a, z0, s, quad_tol); };
        auto stencil = [&](double k) { return (L(z - 2 * k) - 8 * L(z - k) + 8 * L(z + k) - L(z + 2 * k)) / (12 * k); };
        // One Richardson step on the O(h^4) stencil.
        const double fd = (16 * stencil(0.5 * h) - stencil(h)) / 15;
        const double rhs = eval_hyperlog(a.subspan(1), z0, z, quad_tol) / (z + a[0]);
        out.push_back({z, "x[" + std::to_string(p) + "," + std::to_string(q) + "]",
                       std::abs(fd - rhs) / std::max(1.0, std::abs(rhs))});
      }
    return out;
  });
  finish(report, tol);
  return report;
}

NumericCheckReport numeric_operator_residual(const DiffOperator& op, const std::vector<RatFunc>& functions,
                                             const std::vector<double>& alphas, const std::vector<double>& grid,
                                             double tol, double z0, double quad_tol) {
  if (op.order() < 1) throw NumericError("operator of order 0");
  const unsigned n = op.order() - 1;
  if (alphas.size() < n) throw NumericError("need " + std::to_string(n) + " alpha values");
  const PVExtension ext = build_standard_extension(std::max(n, 1u));
  const Derivation& D = ext.derivation();

  // Symbolic derivatives y^(k), k = 0..order; evaluated numerically per grid point.
  std::vector<std::vector<RatFunc>> derivs;
  for (const auto& y : functions) {
    std::vector<RatFunc> d{y};
    for (unsigned k = 1; k <= op.order(); ++k) d.push_back(D.derive(d.back()));
    derivs.push_back(std::move(d));
  }

  NumericCheckReport report;
  report.per_sample = per_grid_point(grid, [&](double z) {
    check_segment(std::span<const double>(alphas).first(n), z0, z);
    std::map<Variable, double> phi;
    auto value = [&](Variable v) -> double {
      if (v.is_z()) return z;
      if (v.is_param()) {
        if (v.index() > alphas.size()) throw NumericError("no value for " + v.text());
        return alphas[v.index() - 1];
      }
      auto it = phi.find(v);
      if (it == phi.end())
        it = phi.emplace(v, eval_hyperlog(generator_alphas(alphas, v.row(), v.col()), z0, z, quad_tol)).first;
      return it->second;
    };
    std::vector<double> coeffs;
    for (const auto& c : op.coeffs()) coeffs.push_back(evaluate(c, value));
    std::vector<NumericSample> out;
    for (std::size_t i = 0; i < functions.size(); ++i) {
      double acc = evaluate(derivs[i][op.order()], value);
      for (unsigned k = 0; k < op.order(); ++k) acc += coeffs[k] * evaluate(derivs[i][k], value);
      out.push_back({z, functions[i].text(), std::abs(acc)});
    }
    return out;
  });
  finish(report, tol);
  return report;
}

NumericCheckReport numeric_operator_residual(const DiffOperator& op, const std::vector<double>& alphas,
                                             const std::vector<double>& grid, double tol, double z0, double quad_tol) {
  std::vector<RatFunc> basis{RatFunc(1)};
  for (unsigned p = 1; p + 1 <= op.order(); ++p) basis.emplace_back(Variable::x(p, 1));
  return numeric_operator_residual(op, basis, alphas, grid, tol, z0, quad_tol);
}

std::string to_text(const NumericCheckReport& r) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific;
  os << "passed=" << (r.passed ? "true" : "false") << "\n";
  os << "max_residual=" << r.max_residual << "\n";
  os << "tol=" << r.tol << "\n";
  os << "samples=" << r.samples << "\n";
  for (const auto& s : r.per_sample) os << "  z=" << s.z << " " << s.label << " residual=" << s.residual << "\n";
  return os.str();
}

}  // namespace unipv
