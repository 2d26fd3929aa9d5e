#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "unipv/operator.hpp"
#include "unipv/ratfunc.hpp"

namespace unipv {

/// L(alphas | z, z0): iterated integral with kernels 1/(s + alpha). Depth 0 is 1 and
///   L(a1, a2, ..., ak | z) = int_{z0}^{z} L(a2, ..., ak | s) ds / (s + a1).
struct HyperlogSpec {
  std::vector<double> alphas;
  double z0 = 1.0;
  double z = 1.0;
  double tol = 1e-12;
};

/// Adaptive Gauss-Legendre quadrature (G10 vs G20 per panel, bisection on disagreement)
/// to absolute error tol. Throws NumericError past the subdivision cap.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol);

/// Throws NumericError when some -alpha lies on the closed segment [z0, z] or when
/// adaptive refinement exceeds its subdivision cap.
double eval_hyperlog(const HyperlogSpec& spec);
double eval_hyperlog(std::span<const double> alphas, double z0, double z, double tol);

struct NumericSample {
  double z;
  std::string label;  // which entry or function was checked
  double residual;
};

struct NumericCheckReport {
  double max_residual = 0.0;
  std::size_t samples = 0;
  double tol = 0.0;
  bool passed = false;
  std::vector<NumericSample> per_sample;
};

/// Checks d/dz L(a_q..a_{p+q-1}) = L(a_{q+1}..a_{p+q-1}) / (z + a_q) for every generator
/// x[p,q] of size n by five-point central differences. Residuals are relative to max(1, |rhs|).
/// quad_tol, here and below, is the absolute target of every hyperlog evaluation.
NumericCheckReport numeric_derivation_check(const std::vector<double>& alphas, unsigned n,
                                            const std::vector<double>& grid, double tol, double z0 = 1.0, double quad_tol = 1e-10);

/// max |L(y)| over the grid for y = 1, x[1,1], ..., x[n,1] evaluated through
/// x[p,q] -> L(a_q..a_{p+q-1} | z, z0). Derivatives of y come from the derivation table.
NumericCheckReport numeric_operator_residual(const DiffOperator& op, const std::vector<double>& alphas,
                                             const std::vector<double>& grid, double tol, double z0 = 1.0, double quad_tol = 1e-10);

/// Same, for arbitrary functions of z, a and the generators x[i,j].
NumericCheckReport numeric_operator_residual(const DiffOperator& op, const std::vector<RatFunc>& functions,
                                             const std::vector<double>& alphas, const std::vector<double>& grid,
                                             double tol, double z0 = 1.0, double quad_tol = 1e-10);

/// Floating-point value of u under the given variable assignment.
double evaluate(const RatFunc& u, const std::function<double(Variable)>& value);

std::string to_text(const NumericCheckReport& report);

}  // namespace unipv
