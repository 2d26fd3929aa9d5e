#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unipv/matrix.hpp"
#include "unipv/ratfunc.hpp"

namespace unipv {

/// A pole z = location of order up to `order`, written as the root of (z - location).
struct Pole {
  RatFunc location;
  unsigned order;
};

/// Evidence that condition C fails: sum_i c_i f_i = antiderivative'.
struct ConditionCWitness {
  std::vector<RatFunc> c;
  RatFunc antiderivative;
};

struct ConditionCReport {
  bool holds = false;
  unsigned rank = 0;
  std::vector<Pole> poles;
  /// poles x n; entry (p, i) is the residue of f_i at poles[p].
  Matrix<RatFunc> residues;
  std::optional<ConditionCWitness> witness;
};

/// Decides whether no nontrivial constant combination of the f_i is a derivative in
/// F = Q(a)(z). Each f_i must be free of generators and its denominator must split into
/// factors z + a_k and z + q with q rational; anything else raises DomainError.
///
/// Polynomial parts and poles of order >= 2 always integrate inside F, so only the
/// residues constrain: condition C holds iff the residue matrix has full column rank.
ConditionCReport check_condition_c(const std::vector<RatFunc>& f);

/// Antiderivative in F of a z/parameter-only function with zero residues at every pole.
/// Throws DomainError when some residue is nonzero or the denominator is unsupported.
RatFunc integrate_residue_free(const RatFunc& u);

std::string to_text(const ConditionCReport& report);

}  // namespace unipv
