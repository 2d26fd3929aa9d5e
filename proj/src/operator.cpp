#include "unipv/operator.hpp"

#include <future>

#include "unipv/errors.hpp"

namespace unipv {

DiffOperator::DiffOperator(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("operator order must be at least 1");
}

namespace {

std::string derivative_text(unsigned i) {
  if (i == 1) return "d/dz";
  return "d^" + std::to_string(i) + "/dz^" + std::to_string(i);
}

std::string derivative_latex(unsigned i) {
  if (i == 1) return "\\frac{d}{dz}";
  return "\\frac{d^{" + std::to_string(i) + "}}{dz^{" + std::to_string(i) + "}}";
}

}  // namespace

std::string DiffOperator::text() const {
  std::string s = derivative_text(order());
  for (unsigned i = order(); i-- > 0;) {
    const RatFunc& c = coeffs_[i];
    if (c.is_zero()) continue;
    s += "+(" + c.text() + ")";
    if (i > 0) s += "*" + derivative_text(i);
  }
  return s;
}

std::string DiffOperator::latex() const {
  std::string s = derivative_latex(order());
  for (unsigned i = order(); i-- > 0;) {
    const RatFunc& c = coeffs_[i];
    if (c.is_zero()) continue;
    s += " + ";
    if (c.is_one() && i > 0) {
      s += derivative_latex(i);
      continue;
    }
    const bool wrap = c.is_polynomial() && c.num().size() > 1;
    s += wrap ? "\\left(" + c.latex() + "\\right)" : c.latex();
    if (i > 0) s += " " + derivative_latex(i);
  }
  return s;
}

MPoly bareiss_determinant(Matrix<MPoly> m) {
  const std::size_t k = m.rows();
  if (k != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (k == 0) return MPoly(1);
  bool negate = false;
  MPoly previous(1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    // Smallest nonzero pivot keeps the intermediate polynomials small.
    std::size_t best = k;
    for (std::size_t r = i; r < k; ++r)
      if (!m(r, i).is_zero() && (best == k || m(r, i).size() < m(best, i).size())) best = r;
    if (best == k) return MPoly();
    if (best != i) {
      for (std::size_t c = i; c < k; ++c) std::swap(m(i, c), m(best, c));
      negate = !negate;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        MPoly v = m(r, c) * m(i, i) - m(r, i) * m(i, c);
        m(r, c) = previous.is_one() ? std::move(v) : v.divide_exact(previous);
      }
      m(r, i) = MPoly();
    }
    previous = m(i, i);
  }
  return negate ? -m(k - 1, k - 1) : m(k - 1, k - 1);
}

namespace {

struct ClearedMatrix {
  Matrix<MPoly> entries;
  MPoly cleared;  // product of the per-column multipliers
};

ClearedMatrix clear_denominators(const Matrix<RatFunc>& m) {
  ClearedMatrix out{Matrix<MPoly>(m.rows(), m.cols()), MPoly(1)};
  for (std::size_t c = 0; c < m.cols(); ++c) {
    MPoly l(1);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).den().is_one()) l = poly_lcm(l, m(r, c).den());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const RatFunc& e = m(r, c);
      out.entries(r, c) = e.den().is_one() ? e.num() * l : e.num() * l.divide_exact(e.den());
    }
    out.cleared *= l;
  }
  return out;
}

}  // namespace

RatFunc determinant(const Matrix<RatFunc>& m) {
  ClearedMatrix cm = clear_denominators(m);
  return RatFunc(bareiss_determinant(std::move(cm.entries)), cm.cleared);
}

Matrix<RatFunc> derivative_matrix(const std::vector<RatFunc>& ys, const Derivation& d, std::size_t rows) {
  Matrix<RatFunc> m(rows, ys.size());
  for (std::size_t c = 0; c < ys.size(); ++c) {
    if (rows == 0) break;
    m(0, c) = ys[c];
    for (std::size_t r = 1; r < rows; ++r) m(r, c) = d.derive(m(r - 1, c));
  }
  return m;
}

RatFunc wronskian(const std::vector<RatFunc>& ys, const Derivation& d) {
  if (ys.empty()) throw DomainError("wronskian of an empty family");
  return determinant(derivative_matrix(ys, d, ys.size()));
}

DiffOperator operator_from_basis(const std::vector<RatFunc>& ys, const Derivation& d) {
  if (ys.empty()) throw DomainError("operator of an empty family");
  const std::size_t k = ys.size();
  // Rows 0..k of derivatives; deleting row i gives the cofactor of Y^(i).
  ClearedMatrix cm = clear_denominators(derivative_matrix(ys, d, k + 1));
  std::vector<std::future<MPoly>> minors;
  minors.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    minors.push_back(std::async(std::launch::async, bareiss_determinant, cm.entries.without_row(i)));
  std::vector<MPoly> values;
  values.reserve(k + 1);
  for (auto& f : minors) values.push_back(f.get());

  // The common column multipliers cancel in the ratios a_i = (-1)^(k-i) M_i / M_k.
  const MPoly& top = values[k];
  if (top.is_zero()) throw DomainError("singular Wronskian: the family is linearly dependent over the constants");
  std::vector<RatFunc> coeffs;
  coeffs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const MPoly num = (k - i) % 2 == 0 ? values[i] : -values[i];
    coeffs.emplace_back(num, top);
  }
  return DiffOperator(std::move(coeffs));
}

DiffOperator pv_operator(const PVExtension& ext) { return operator_from_basis(ext.solution_basis(), ext.derivation()); }

RatFunc apply_operator(const DiffOperator& op, const RatFunc& y, const Derivation& d) {
  RatFunc acc;
  RatFunc dy = y;
  for (unsigned i = 0; i < op.order(); ++i) {
    if (!op.coeff(i).is_zero()) acc += op.coeff(i) * dy;
    dy = d.derive(dy);
  }
  return acc + dy;
}

bool coeffs_in_base_field(const DiffOperator& op) {
  for (const auto& c : op.coeffs())
    if (!c.in_base_field()) return false;
  return true;
}

}  // namespace unipv
