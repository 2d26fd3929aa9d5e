#pragma once

#include <string>
#include <vector>

#include "unipv/matrix.hpp"
#include "unipv/pv_extension.hpp"

namespace unipv {

/// Monic linear differential operator Y^(k) + a_{k-1} Y^(k-1) + ... + a_0 Y.
class DiffOperator {
 public:
  DiffOperator() = default;
  /// coeffs[i] multiplies Y^(i); the order is coeffs.size().
  explicit DiffOperator(std::vector<RatFunc> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const RatFunc& coeff(unsigned i) const { return coeffs_.at(i); }

  /// e.g. d^2/dz^2+(1/(z+a1))*d/dz
  std::string text() const;
  std::string latex() const;

  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  std::vector<RatFunc> coeffs_;
};

/// Fraction-free determinant of a square polynomial matrix.
MPoly bareiss_determinant(Matrix<MPoly> m);

/// Determinant of a square matrix over E: clears each column's denominators, runs
/// Bareiss elimination over polynomials, then divides the cleared factors back.
RatFunc determinant(const Matrix<RatFunc>& m);

/// Rows 0..rows-1 hold the successive derivatives of ys.
Matrix<RatFunc> derivative_matrix(const std::vector<RatFunc>& ys, const Derivation& d, std::size_t rows);

/// w(y_1..y_k): determinant of the k x k derivative matrix.
RatFunc wronskian(const std::vector<RatFunc>& ys, const Derivation& d);

/// L(Y) = w(Y, y_1..y_k) / w(y_1..y_k), made monic. Coefficients come from the
/// cofactors of the symbolic Y column; the minors are evaluated concurrently.
/// Throws DomainError when the Wronskian of ys vanishes.
DiffOperator operator_from_basis(const std::vector<RatFunc>& ys, const Derivation& d);

/// The operator annihilating (1, x[1,1], ..., x[n,1]).
DiffOperator pv_operator(const PVExtension& ext);

RatFunc apply_operator(const DiffOperator& op, const RatFunc& y, const Derivation& d);

/// True iff no coefficient mentions a generator x[i,j].
bool coeffs_in_base_field(const DiffOperator& op);

}  // namespace unipv
