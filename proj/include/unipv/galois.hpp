#pragma once

#include <map>

#include "unipv/matrix.hpp"
#include "unipv/pv_extension.hpp"

namespace unipv {

/// A unitriangular (n+1)x(n+1) matrix over the constants Q(a1..an), laid out like g:
/// entry c(i, j) sits at matrix position (j, j+i), 1-indexed.
class GaloisElement {
 public:
  static GaloisElement identity(unsigned n);
  /// Throws DomainError unless m is square, unitriangular, and every entry above the
  /// diagonal involves parameters only.
  static GaloisElement from_matrix(const Matrix<RatFunc>& m);

  unsigned n() const { return static_cast<unsigned>(m_.rows()) - 1; }
  /// c_{i,j} for 1 <= i <= n, 1 <= j <= n+1-i.
  const RatFunc& c(unsigned i, unsigned j) const { return m_(j - 1, j - 1 + i); }
  const Matrix<RatFunc>& matrix() const { return m_; }
  bool is_identity() const;

  /// Unitriangular inverse by back substitution.
  GaloisElement inverse() const;

  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;

 private:
  Matrix<RatFunc> m_;
};

/// Matrix product M N. Throws DomainError on a size mismatch.
GaloisElement compose(const GaloisElement& m, const GaloisElement& n);

/// Images sigma_M(x[i,j]) read off from sigma_M(g) = g M.
std::map<Variable, RatFunc> sigma_images(const PVExtension& ext, const GaloisElement& m);

/// Substitution homomorphism fixing z and the parameters.
RatFunc substitute(const RatFunc& u, const std::map<Variable, RatFunc>& images);

/// sigma_M(u). Throws DomainError when M does not match the extension size.
RatFunc apply_sigma(const PVExtension& ext, const GaloisElement& m, const RatFunc& u);

/// True iff sigma_M commutes with the derivation on every generator and fixes z and
/// the parameters.
bool verify_diff_automorphism(const PVExtension& ext, const GaloisElement& m);

}  // namespace unipv
