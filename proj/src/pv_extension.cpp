#include "unipv/pv_extension.hpp"

#include <algorithm>

#include "unipv/errors.hpp"

namespace unipv {
namespace {

void require_base_field(const RatFunc& u, const std::string& what) {
  if (!u.in_base_field()) throw DomainError(what + " must involve only z and parameters: " + u.text());
}

}  // namespace

std::vector<Variable> PVExtension::generators() const {
  std::vector<Variable> vs;
  for (unsigned i = 1; i <= n_; ++i)
    for (unsigned j = 1; j + i <= n_ + 1; ++j) vs.push_back(Variable::x(i, j));
  return vs;
}

std::vector<RatFunc> PVExtension::solution_basis() const {
  std::vector<RatFunc> basis;
  for (unsigned c = 0; c <= n_; ++c) basis.push_back(g_(0, c));
  return basis;
}

PVExtension PVExtension::with_derivation(Derivation d) const {
  PVExtension e = *this;
  e.d_ = std::move(d);
  return e;
}

PVExtension build_extension(unsigned n, std::vector<RatFunc> f, std::vector<ExtraEntry> extra) {
  if (n < 1) throw DomainError("extension size must be at least 1");
  if (f.size() != n) throw DomainError("expected " + std::to_string(n) + " entries f, got " + std::to_string(f.size()));
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) throw DomainError("f" + std::to_string(j + 1) + " must be nonzero");
    require_base_field(f[j], "f" + std::to_string(j + 1));
  }
  std::sort(extra.begin(), extra.end(),
            [](const ExtraEntry& a, const ExtraEntry& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
  for (std::size_t k = 0; k < extra.size(); ++k) {
    const auto& e = extra[k];
    const std::string where = "extra entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ")";
    if (e.row < 1 || e.col > n + 1 || e.col < e.row + 2) throw DomainError(where + " is not above the superdiagonal");
    if (k > 0 && extra[k - 1].row == e.row && extra[k - 1].col == e.col) throw DomainError(where + " given twice");
    require_base_field(e.value, where);
  }

  PVExtension ext;
  ext.n_ = n;
  const std::size_t size = n + 1;
  ext.a_ = Matrix<RatFunc>(size, size);
  ext.g_ = Matrix<RatFunc>::identity(size);
  for (unsigned j = 0; j < n; ++j) ext.a_(j, j + 1) = f[j];
  for (const auto& e : extra) ext.a_(e.row - 1, e.col - 1) = e.value;
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = r + 1; c < size; ++c)
      ext.g_(r, c) = RatFunc(Variable::x(static_cast<unsigned>(c - r), static_cast<unsigned>(r + 1)));

  // x[i,k]' = (A g)(k, k+i), 1-indexed.
  const Matrix<RatFunc> ag = ext.a_ * ext.g_;
  std::map<Variable, RatFunc> table;
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = r + 1; c < size; ++c)
      table.emplace(Variable::x(static_cast<unsigned>(c - r), static_cast<unsigned>(r + 1)), ag(r, c));
  ext.d_ = Derivation(std::move(table));
  ext.f_ = std::move(f);
  ext.extra_ = std::move(extra);
  return ext;
}

PVExtension build_standard_extension(unsigned n) {
  std::vector<RatFunc> f;
  for (unsigned j = 1; j <= n; ++j) f.emplace_back(MPoly(1), MPoly(Variable::z()) + MPoly(Variable::param(j)));
  return build_extension(n, std::move(f));
}

bool check_matrix_identity(const PVExtension& ext) {
  const Matrix<RatFunc> ag = ext.A() * ext.g();
  const auto& g = ext.g();
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      try {
        if (!(ext.derivation().derive(g(r, c)) == ag(r, c))) return false;
      } catch (const DomainError&) {
        return false;
      }
    }
  return true;
}

}  // namespace unipv
