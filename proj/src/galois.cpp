#include "unipv/galois.hpp"

#include "unipv/errors.hpp"

namespace unipv {

GaloisElement GaloisElement::identity(unsigned n) {
  GaloisElement e;
  e.m_ = Matrix<RatFunc>::identity(n + 1);
  return e;
}

GaloisElement GaloisElement::from_matrix(const Matrix<RatFunc>& m) {
  if (m.rows() != m.cols() || m.rows() < 2) throw DomainError("Galois matrix must be square of size at least 2");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const RatFunc& e = m(r, c);
      const std::string where = "Galois matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (c < r && !e.is_zero()) throw DomainError(where + " below the diagonal must be 0");
      if (c == r && !e.is_one()) throw DomainError(where + " on the diagonal must be 1");
      if (c > r && !e.is_parameter_only()) throw DomainError(where + " is not a constant: " + e.text());
    }
  GaloisElement g;
  g.m_ = m;
  return g;
}

bool GaloisElement::is_identity() const { return m_ == Matrix<RatFunc>::identity(m_.rows()); }

GaloisElement GaloisElement::inverse() const {
  const std::size_t size = m_.rows();
  Matrix<RatFunc> inv = Matrix<RatFunc>::identity(size);
  // Column by column: inv(r, c) = -sum_{r<k<=c} m(r, k) inv(k, c).
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t r = c; r-- > 0;) {
      RatFunc acc;
      for (std::size_t k = r + 1; k <= c; ++k) acc += m_(r, k) * inv(k, c);
      inv(r, c) = -acc;
    }
  GaloisElement g;
  g.m_ = std::move(inv);
  return g;
}

GaloisElement compose(const GaloisElement& m, const GaloisElement& n) {
  if (m.n() != n.n()) throw DomainError("cannot compose Galois elements of different sizes");
  return GaloisElement::from_matrix(m.matrix() * n.matrix());
}

namespace {

void require_size(const PVExtension& ext, const GaloisElement& m) {
  if (m.n() != ext.n())
    throw DomainError("Galois matrix has size " + std::to_string(m.n() + 1) + ", extension needs " +
                      std::to_string(ext.n() + 1));
}

RatFunc substitute(const MPoly& p, const std::map<Variable, RatFunc>& images) {
  std::map<std::pair<Variable, unsigned>, RatFunc> powers;
  auto power = [&](Variable v, unsigned e) -> const RatFunc& {
    auto key = std::pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      auto img = images.find(v);
      RatFunc base = img == images.end() ? RatFunc(v) : img->second;
      it = powers.emplace(key, base.pow(e)).first;
    }
    return it->second;
  };
  // Terms free of substituted variables are collected as one polynomial.
  std::vector<Term> untouched;
  RatFunc acc;
  for (const auto& t : p.terms()) {
    std::vector<VarPower> kept;
    RatFunc factor(1);
    bool touched = false;
    for (const auto& vp : t.mono.powers()) {
      if (images.contains(vp.var)) {
        factor *= power(vp.var, vp.exp);
        touched = true;
      } else {
        kept.push_back(vp);
      }
    }
    if (!touched) {
      untouched.push_back(t);
      continue;
    }
    acc += factor * RatFunc(MPoly(t.coeff, Monomial::from_powers(std::move(kept))));
  }
  return acc + RatFunc(MPoly::from_terms(std::move(untouched)));
}

}  // namespace

std::map<Variable, RatFunc> sigma_images(const PVExtension& ext, const GaloisElement& m) {
  require_size(ext, m);
  const Matrix<RatFunc> gm = ext.g() * m.matrix();
  std::map<Variable, RatFunc> images;
  for (std::size_t r = 0; r < gm.rows(); ++r)
    for (std::size_t c = r + 1; c < gm.cols(); ++c)
      images.emplace(Variable::x(static_cast<unsigned>(c - r), static_cast<unsigned>(r + 1)), gm(r, c));
  return images;
}

RatFunc substitute(const RatFunc& u, const std::map<Variable, RatFunc>& images) {
  const RatFunc num = substitute(u.num(), images);
  if (u.is_polynomial()) return num;
  return num / substitute(u.den(), images);
}

RatFunc apply_sigma(const PVExtension& ext, const GaloisElement& m, const RatFunc& u) {
  return substitute(u, sigma_images(ext, m));
}

bool verify_diff_automorphism(const PVExtension& ext, const GaloisElement& m) {
  const auto images = sigma_images(ext, m);
  const Derivation& d = ext.derivation();
  for (const auto& [v, image] : images) {
    if (!(substitute(d.of(v), images) == d.derive(image))) return false;
  }
  if (!(substitute(RatFunc(Variable::z()), images) == RatFunc(Variable::z()))) return false;
  for (unsigned i = 1; i <= ext.n(); ++i) {
    const RatFunc a(Variable::param(i));
    if (!(substitute(a, images) == a)) return false;
  }
  return true;
}

}  // namespace unipv
