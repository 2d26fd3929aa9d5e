#include "unipv/derivation.hpp"

#include "unipv/errors.hpp"

namespace unipv {

Derivation::Derivation(std::map<Variable, RatFunc> table) : table_(std::move(table)) {
  for (const auto& [v, image] : table_) {
    if (!v.is_x()) throw DomainError("derivation table key " + v.text() + " is not a generator");
    for (Variable w : image.variables())
      if (w.is_x() && !table_.contains(w))
        throw DomainError("derivation of " + v.text() + " mentions " + w.text() + " which has no table entry");
  }
}

bool Derivation::has(Variable v) const { return !v.is_x() || table_.contains(v); }

RatFunc Derivation::of(Variable v) const {
  switch (v.kind()) {
    case VarKind::Z:
      return RatFunc(1);
    case VarKind::Param:
      return RatFunc();
    case VarKind::X:
      break;
  }
  auto it = table_.find(v);
  if (it == table_.end()) throw DomainError("no derivation known for " + v.text());
  return it->second;
}

RatFunc Derivation::derive(const MPoly& p) const {
  // p' = sum_v (dp/dv) v', put over the lcm of the images' denominators.
  std::vector<std::pair<MPoly, RatFunc>> parts;
  MPoly common(1);
  for (Variable v : p.variables()) {
    RatFunc image = of(v);
    if (image.is_zero()) continue;
    if (!image.den().is_one()) common = poly_lcm(common, image.den());
    parts.emplace_back(p.partial(v), std::move(image));
  }
  MPoly num;
  for (const auto& [dp, image] : parts) {
    MPoly scale = image.den().is_one() ? common : common.divide_exact(image.den());
    num += dp * image.num() * scale;
  }
  return RatFunc(num, common);
}

RatFunc Derivation::derive(const RatFunc& u) const {
  const RatFunc dp = derive(u.num());
  if (u.is_polynomial()) return dp;
  const RatFunc dq = derive(u.den());
  // (p/q)' = (p'q - pq')/q^2 with p' = Np/Lp and q' = Nq/Lq.
  const MPoly& q = u.den();
  MPoly num = dp.num() * dq.den() * q - u.num() * dq.num() * dp.den();
  MPoly den = dp.den() * dq.den() * q * q;
  return RatFunc(num, den);
}

RatFunc Derivation::derive(const RatFunc& u, unsigned k) const {
  RatFunc r = u;
  for (unsigned i = 0; i < k; ++i) r = derive(r);
  return r;
}

}  // namespace unipv
