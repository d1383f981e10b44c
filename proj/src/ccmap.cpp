#include "clusterhall/ccmap.hpp"

#include <functional>

#include "clusterhall/error.hpp"
#include "clusterhall/grassmannian.hpp"

namespace clusterhall {

IntVector character_exponent(const Quiver& q, const IntVector& d, const IntVector& e) {
  const int n = q.num_vertices();
  const IntVector rest = sub(d, e);
  IntVector v(n);
  for (int i = 0; i < n; ++i) {
    const IntVector a = unit_vector(n, i);
    v[i] = static_cast<int>(-euler_form(q, e, a) - euler_form(q, a, rest));
  }
  return v;
}

const std::vector<GrassmannEntry>& Characters::grassmannians(int root) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = grass_.find(root);
    if (it != grass_.end()) return *it->second;
  }
  const Context& ctx = cat_.context();
  const IsoType m = IsoType::single(ctx.num_roots(), root);
  auto table = std::make_unique<std::vector<GrassmannEntry>>();
  for (const IntVector& e : sub_dimension_vectors(ctx.root(root))) {
    QPoly poly = grassmann_poly(ctx, m, e);
    if (poly.is_zero()) continue;
    BigInt chi = euler_char(poly);
    table->push_back({e, std::move(poly), std::move(chi)});
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = grass_.emplace(root, std::move(table));
  return *it->second;
}

LaurentPoly Characters::x_module(const IsoType& m) const {
  const Context& ctx = cat_.context();
  const IntVector d = ctx.dim(m);
  LaurentPoly x(n());
  for (const IntVector& e : sub_dimension_vectors(d)) {
    const BigInt chi = euler_char(ctx, m, e);
    if (chi != 0) x.add_term(character_exponent(ctx.quiver(), d, e), chi);
  }
  return x;
}

const LaurentPoly& Characters::x_indecomposable(int idx) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = x_.find(idx);
    if (it != x_.end()) return *it->second;
  }
  const Context& ctx = cat_.context();
  const int r = ctx.num_roots();
  if (idx < 0 || idx >= cat_.num_indecomposables()) throw InvalidInput("indecomposable index out of range");
  LaurentPoly x(n());
  if (idx >= r) {
    x = LaurentPoly::variable(n(), idx - r);
  } else {
    for (const GrassmannEntry& g : grassmannians(idx))
      if (g.chi != 0) x.add_term(character_exponent(ctx.quiver(), ctx.root(idx), g.e), g.chi);
  }
  auto owned = std::make_unique<LaurentPoly>(std::move(x));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = x_.emplace(idx, std::move(owned));
  return *it->second;
}

LaurentPoly Characters::x_of(const CCObject& x) const {
  LaurentPoly out = LaurentPoly::constant(n(), 1);
  for (auto [idx, mult] : cat_.summands(x)) out = out * x_indecomposable(idx).pow(mult);
  return out;
}

std::optional<IntVector> cone_coefficients(const IntMatrix& b, const IntVector& vertex, const IntVector& point,
                                           const IntVector& bound) {
  const int n = static_cast<int>(bound.size());
  const IntVector target = sub(vertex, point);
  IntVector c(n, 0);
  std::optional<IntVector> found;
  std::function<void(int)> walk = [&](int i) {
    if (found) return;
    if (i == n) {
      if (b.apply(c) == target) found = c;
      return;
    }
    for (int v = 0; v <= bound[i] && !found; ++v) {
      c[i] = v;
      walk(i + 1);
    }
    c[i] = 0;
  };
  walk(0);
  return found;
}

}  // namespace clusterhall
