#include "clusterhall/hall.hpp"

#include <functional>

#include "clusterhall/error.hpp"
#include "clusterhall/grassmannian.hpp"

namespace clusterhall {

std::map<std::pair<IsoType, IsoType>, QPoly> hall_polynomials(const Context& ctx, const IsoType& x,
                                                              const IntVector& e) {
  using Key = std::pair<IsoType, IsoType>;
  const IntVector d = ctx.dim(x);
  if (!leq(e, d) || !is_nonnegative(e)) return {};
  const std::function<std::map<Key, BigInt>(std::uint32_t)> count = [&](std::uint32_t p) {
    const Rep rep = ctx.realize(x, p);
    std::map<Key, BigInt> tally;
    for_each_submodule(rep, e, ctx.settings().subspace_budget, [&](const std::vector<FMatrix>& basis) {
      const IsoType sub = decompose(ctx, subrep(rep, basis));
      const IsoType quo = decompose(ctx, quotient(rep, basis));
      tally[{quo, sub}] += 1;
    });
    return tally;
  };
  return interpolate_counts<Key>(grassmann_degree_bound(d, e), ctx.settings().primes, count);
}

QPoly hall_polynomial(const Context& ctx, const IsoType& m, const IsoType& n, const IsoType& x) {
  if (add(ctx.dim(m), ctx.dim(n)) != ctx.dim(x))
    throw InvalidInput("Hall polynomial needs dim M + dim N = dim X");
  const auto all = hall_polynomials(ctx, x, ctx.dim(n));
  auto it = all.find({m, n});
  return it == all.end() ? QPoly() : it->second;
}

std::map<IsoType, BigInt> b_product(const Context& ctx, const IntVector& e_quotient, const IntVector& e_sub) {
  std::map<IsoType, BigInt> out;
  for (const IsoType& x : isotypes_with_dim(ctx, add(e_quotient, e_sub))) {
    BigInt total = 0;
    for (const auto& [key, poly] : hall_polynomials(ctx, x, e_sub)) total += poly.eval(1);
    if (total != 0) out[x] = total;
  }
  return out;
}

MultiplicationReport verify_multiplication(const Engine& engine, const CCObject& n, const CCObject& m,
                                           MiddleTermMode mode) {
  const Category& cat = engine.category();
  const Characters& chars = engine.characters();
  MultiplicationReport rep;
  rep.n = n;
  rep.m = m;
  rep.ext = cat.ext1(n, m);
  if (cat.ext1(m, n) != rep.ext) rep.failures.push_back("Ext^1(N,M) and Ext^1(M,N) differ in dimension");
  const LaurentPoly product = chars.x_of(n) * chars.x_of(m);
  if (rep.ext == 0) {
    rep.lhs = product;
    rep.rhs = chars.x_of(n + m);
  } else {
    rep.forward = cat.middle_terms(n, m, mode);
    rep.backward = cat.middle_terms(m, n, mode);
    rep.lhs = product * BigInt(rep.ext);
    rep.rhs = LaurentPoly(engine.n());
    for (const TriangleCount* tc : {&rep.forward, &rep.backward})
      for (const MiddleTermClass& cls : tc->classes) rep.rhs += chars.x_of(cls.middle) * cls.chi;
  }
  if (rep.lhs != rep.rhs) rep.failures.push_back("multiplication identity fails");
  return rep;
}

std::vector<ElementaryStep> elementary_degenerations(const Category& cat, const CCObject& x) {
  std::vector<ElementaryStep> out;
  const auto parts = cat.summands(x);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (int dir = 0; dir < 2; ++dir) {
        auto [u, zu] = parts[dir ? b : a];
        auto [v, zv] = parts[dir ? a : b];
        if (cat.ext1(v, u) == 0) continue;
        const CCObject rest = x - cat.indecomposable(u) - cat.indecomposable(v);
        for (const MiddleTermClass& cls : cat.middle_terms(v, u).classes) {
          ElementaryStep s;
          s.from = x;
          s.to = rest + cls.middle;
          s.first = u;
          s.second = v;
          s.middle = cls.middle;
          s.c = cls.chi;
          s.z_first = zu;
          s.z_second = zv;
          if (cat.ext1(s.to, s.to) >= cat.ext1(x, x))
            throw InvariantViolation("elementary degeneration does not lower the self-extension dimension");
          out.push_back(std::move(s));
        }
      }
  return out;
}

std::string to_string(Convention c) { return c == Convention::cluster_ext ? "cluster_ext" : "module_ext"; }

Convention parse_convention(const std::string& s) {
  if (s == "cluster_ext") return Convention::cluster_ext;
  if (s == "module_ext") return Convention::module_ext;
  throw InvalidInput("unknown convention '" + s + "' (cluster_ext or module_ext)");
}

ChainSolver::ChainSolver(const Category& cat, Convention convention, bool exceptional_targets)
    : cat_(cat), convention_(convention), exceptional_targets_(exceptional_targets) {}

Rational ChainSolver::ratio(const ElementaryStep& s) const {
  const int denom = convention_ == Convention::cluster_ext ? cat_.ext1(s.from, s.from) : cat_.module_self_ext(s.from);
  return Rational(s.c * s.z_first * s.z_second) / denom;
}

const std::vector<ElementaryStep>& ChainSolver::steps(const CCObject& x) {
  auto it = steps_.find(x);
  if (it == steps_.end()) it = steps_.emplace(x, elementary_degenerations(cat_, x)).first;
  return it->second;
}

const std::map<CCObject, Rational>& ChainSolver::reach(const CCObject& x) {
  auto it = memo_.find(x);
  if (it != memo_.end()) return it->second;
  if (memo_.size() >= cat_.context().settings().chain_budget)
    throw BudgetExceeded("degeneration chain memo exceeds the chain budget");
  std::map<CCObject, Rational> acc;
  const std::vector<ElementaryStep>& local = steps(x);
  if (!exceptional_targets_ || local.empty()) acc[x] = 1;
  for (const ElementaryStep& s : local) {
    const Rational w = ratio(s);
    if (w == 0) continue;
    const std::map<CCObject, Rational>& below = reach(s.to);
    work_ += below.size();
    if (work_ > cat_.context().settings().search_budget)
      throw BudgetExceeded("degeneration chain sums exceed the search budget");
    for (const auto& [k, r] : below) acc[k] += w * r;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return memo_.emplace(x, std::move(acc)).first->second;
}

Rational ChainSolver::r(const CCObject& x, const CCObject& k) {
  const auto& all = reach(x);
  auto it = all.find(k);
  return it == all.end() ? Rational(0) : it->second;
}

std::vector<Chain> ChainSolver::chains(const CCObject& x, const CCObject& k, std::size_t limit) {
  std::vector<Chain> out;
  std::vector<ElementaryStep> path;
  std::function<void(const CCObject&, Rational)> walk = [&](const CCObject& y, Rational w) {
    if (out.size() >= limit) return;
    if (y == k) out.push_back({path, w});
    const std::vector<ElementaryStep> local = steps(y);
    for (const ElementaryStep& s : local) {
      path.push_back(s);
      walk(s.to, w * ratio(s));
      path.pop_back();
    }
  };
  walk(x, 1);
  return out;
}

Rational r_coefficient(const Category& cat, const CCObject& x, const CCObject& k, Convention convention) {
  ChainSolver solver(cat, convention);
  return solver.r(x, k);
}

Expansion expand_in_basis(const Engine& engine, const LaurentPoly& p, const EpsilonForm& eps, int max_iterations) {
  const Category& cat = engine.category();
  Expansion out;
  LaurentPoly residual = p;
  while (!residual.is_zero()) {
    if (out.iterations >= max_iterations) return out;
    ++out.iterations;
    const Leading lead = graded_leading(residual, eps);
    const CCObject k = cat.exceptional_from_lambda(lead.exponent);
    residual -= engine.characters().x_of(k) * lead.coefficient;
    out.coeffs[k] += lead.coefficient;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  out.complete = true;
  return out;
}

LaurentPoly contract(const Engine& engine, const Expansion& e) {
  LaurentPoly out(engine.n());
  for (const auto& [k, c] : e.coeffs) out += engine.characters().x_of(k) * c;
  return out;
}

HallMultiplyReport hall_multiply(const Engine& engine, const CCObject& m, const CCObject& n, Convention convention,
                                 const EpsilonForm& eps) {
  const Category& cat = engine.category();
  HallMultiplyReport rep;
  rep.m = m;
  rep.n = n;
  rep.convention = convention;
  ChainSolver solver(cat, convention, true);
  const CCObject x = m + n;
  std::map<CCObject, Rational> r;
  for (const auto& [k, v] : solver.reach(x))
    if (cat.is_exceptional(k)) r[k] = v;
  const Expansion expansion =
      expand_in_basis(engine, engine.characters().x_of(m) * engine.characters().x_of(n), eps);
  if (!expansion.complete) throw InvariantViolation("basis expansion did not terminate");
  std::map<CCObject, std::pair<Rational, BigInt>> merged;
  for (const auto& [k, v] : r) merged[k].first = v;
  for (const auto& [k, c] : expansion.coeffs) merged[k].second = c;
  for (const auto& [k, pr] : merged) {
    HallEntry e;
    e.k = k;
    e.r = pr.first;
    e.expansion = pr.second;
    e.match = e.r == Rational(e.expansion);
    if (!e.match) {
      rep.matches = false;
      e.chains = solver.chains(x, k, 64);
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

ConjectureReport conjecture_64_report(const Engine& engine, int bound) {
  const Category& cat = engine.category();
  ConjectureReport rep;
  rep.bound = bound;
  const int total = cat.num_indecomposables();
  double count = 1;
  for (int i = 0; i < total; ++i) count *= bound + 1;
  if (bound < 0 || count > static_cast<double>(engine.context().settings().search_budget))
    throw BudgetExceeded("conjecture sweep exceeds the search budget");
  for (Convention conv : {Convention::module_ext, Convention::cluster_ext}) {
    ConjectureSide side;
    side.convention = conv;
    ChainSolver solver(cat, conv, true);
    std::vector<int> mult(total, 0);
    std::size_t objects = 0;
    while (true) {
      int k = 0;
      while (k < total && mult[k] == bound) mult[k++] = 0;
      if (k == total) break;
      ++mult[k];
      CCObject x = CCObject::zero(engine.context());
      for (int i = 0; i < total; ++i)
        if (mult[i]) x = x + cat.indecomposable(i).times(mult[i]);
      ++objects;
      for (const auto& [target, v] : solver.reach(x)) {
        if (!cat.is_exceptional(target)) continue;
        ++side.pairs;
        if (v < 0) ++side.negative;
        if (!side.min_r || v < *side.min_r) {
          side.min_r = v;
          side.min_witness = std::make_pair(x, target);
        }
      }
    }
    rep.objects = objects;
    rep.sides.push_back(std::move(side));
  }
  return rep;
}

}  // namespace clusterhall
