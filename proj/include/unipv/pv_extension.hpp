#pragma once

#include <vector>

#include "unipv/derivation.hpp"
#include "unipv/matrix.hpp"

namespace unipv {

/// An entry of A strictly above the superdiagonal, 1-indexed (col >= row + 2).
struct ExtraEntry {
  unsigned row;
  unsigned col;
  RatFunc value;
  friend bool operator==(const ExtraEntry&, const ExtraEntry&) = default;
};

/// The differential field E = F(x[i,j]) with g' = A g.
///
/// g is the (n+1)x(n+1) unitriangular matrix with g(k, k+i) = x[i,k] (1-indexed) and
/// A is strictly upper triangular with superdiagonal f_1..f_n plus optional extra
/// entries. The Galois-group statements only cover the case without extra entries.
class PVExtension {
 public:
  unsigned n() const { return n_; }
  const std::vector<RatFunc>& f() const { return f_; }
  const std::vector<ExtraEntry>& extra() const { return extra_; }
  const Matrix<RatFunc>& A() const { return a_; }
  const Matrix<RatFunc>& g() const { return g_; }
  const Derivation& derivation() const { return d_; }

  /// x[1,1], x[1,2], ..., x[n,1] in variable order; n(n+1)/2 of them.
  std::vector<Variable> generators() const;
  /// (1, x[1,1], x[2,1], ..., x[n,1]): the first row of g.
  std::vector<RatFunc> solution_basis() const;

  /// Same extension data with a replaced derivation table (used for negative controls
  /// and by deserialization checks).
  PVExtension with_derivation(Derivation d) const;

  friend PVExtension build_extension(unsigned n, std::vector<RatFunc> f, std::vector<ExtraEntry> extra);

 private:
  unsigned n_ = 0;
  std::vector<RatFunc> f_;
  std::vector<ExtraEntry> extra_;
  Matrix<RatFunc> a_;
  Matrix<RatFunc> g_;
  Derivation d_;
};

/// Builds E with derivation read off from g' = A g.
/// Throws DomainError if some f_j is zero or not in F, or an extra entry is malformed.
PVExtension build_extension(unsigned n, std::vector<RatFunc> f, std::vector<ExtraEntry> extra = {});

/// Convenience: f_j = 1/(z + a_j), j = 1..n.
PVExtension build_standard_extension(unsigned n);

/// True iff applying the derivation entrywise to g gives exactly A g.
bool check_matrix_identity(const PVExtension& ext);

}  // namespace unipv
