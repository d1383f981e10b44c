#include "clusterhall/category.hpp"

#include <algorithm>
#include <functional>

#include "clusterhall/error.hpp"

namespace clusterhall {

CCObject CCObject::zero(const Context& ctx) {
  return {std::vector<int>(ctx.num_roots(), 0), std::vector<int>(ctx.n(), 0)};
}

CCObject CCObject::of_module(const Context& ctx, const IsoType& t) {
  CCObject x = zero(ctx);
  x.module = t.mult;
  return x;
}

CCObject CCObject::of_root(const Context& ctx, int root, int mult) {
  CCObject x = zero(ctx);
  x.module.at(root) = mult;
  return x;
}

CCObject CCObject::of_shifted(const Context& ctx, int vertex, int mult) {
  CCObject x = zero(ctx);
  x.shifted.at(vertex) = mult;
  return x;
}

IsoType CCObject::shifted_part_as_projectives(const Context& ctx) const {
  IsoType t = IsoType::zero(ctx.num_roots());
  for (int i = 0; i < ctx.n(); ++i) t.mult[ctx.projective(i)] += shifted[i];
  return t;
}

bool CCObject::is_zero() const { return summands() == 0; }

int CCObject::summands() const {
  int s = 0;
  for (int m : module) s += m;
  for (int m : shifted) s += m;
  return s;
}

CCObject CCObject::operator+(const CCObject& o) const {
  CCObject r = *this;
  for (std::size_t k = 0; k < module.size(); ++k) r.module[k] += o.module[k];
  for (std::size_t k = 0; k < shifted.size(); ++k) r.shifted[k] += o.shifted[k];
  return r;
}

CCObject CCObject::operator-(const CCObject& o) const {
  CCObject r = *this;
  for (std::size_t k = 0; k < module.size(); ++k) r.module[k] -= o.module[k];
  for (std::size_t k = 0; k < shifted.size(); ++k) r.shifted[k] -= o.shifted[k];
  for (int m : r.module)
    if (m < 0) throw InvalidInput("object difference has a negative multiplicity");
  for (int m : r.shifted)
    if (m < 0) throw InvalidInput("object difference has a negative multiplicity");
  return r;
}

CCObject CCObject::times(int k) const {
  CCObject r = *this;
  for (int& m : r.module) m *= k;
  for (int& m : r.shifted) m *= k;
  return r;
}

const MiddleTermClass* TriangleCount::find(const CCObject& y) const {
  for (const auto& c : classes)
    if (c.middle == y) return &c;
  return nullptr;
}

BigInt TriangleCount::total_chi() const {
  BigInt s = 0;
  for (const auto& c : classes) s += c.chi;
  return s;
}

int ExtBlocks::nonzero_blocks() const {
  return (module_ext > 0) + (dual_module_ext > 0) + (from_projective > 0) + (to_injective > 0);
}

CCObject Category::indecomposable(int idx) const {
  const int r = ctx_.num_roots();
  if (idx < 0 || idx >= num_indecomposables()) throw InvalidInput("indecomposable index out of range");
  return idx < r ? CCObject::of_root(ctx_, idx) : CCObject::of_shifted(ctx_, idx - r);
}

std::vector<std::pair<int, int>> Category::summands(const CCObject& x) const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < ctx_.num_roots(); ++k)
    if (x.module[k]) out.emplace_back(k, x.module[k]);
  for (int i = 0; i < ctx_.n(); ++i)
    if (x.shifted[i]) out.emplace_back(ctx_.num_roots() + i, x.shifted[i]);
  return out;
}

std::string Category::label(int idx) const {
  const int r = ctx_.num_roots();
  if (idx >= r) return "SP" + std::to_string(idx - r + 1);
  return "root:" + to_string(ctx_.root(idx));
}

std::string Category::describe(const CCObject& x) const {
  std::string s;
  for (auto [idx, m] : summands(x)) {
    if (!s.empty()) s += "+";
    if (m != 1) s += std::to_string(m) + "*";
    s += label(idx);
  }
  return s.empty() ? "0" : s;
}

int Category::ext1(int a, int b) const {
  const int r = ctx_.num_roots();
  if (a < r && b < r) return ctx_.ext(a, b) + ctx_.ext(b, a);
  if (a >= r && b >= r) return 0;
  if (a >= r) return ctx_.root(b)[a - r];
  return ctx_.root(a)[b - r];
}

int Category::ext1(const CCObject& x, const CCObject& y) const {
  int s = 0;
  const auto sx = summands(x), sy = summands(y);
  for (auto [a, ma] : sx)
    for (auto [b, mb] : sy) s += ma * mb * ext1(a, b);
  return s;
}

int Category::module_self_ext(const CCObject& x) const {
  int s = ctx_.ext(x.h0(), x.h0());
  for (int i = 0; i < ctx_.n(); ++i)
    if (x.shifted[i]) s += x.shifted[i] * ctx_.dim(x.h0())[i];
  if (2 * s != ext1(x, x)) throw InvariantViolation("module self-extension is not half the cluster one");
  return s;
}

bool Category::is_exceptional(const CCObject& x) const { return ext1(x, x) == 0; }

bool Category::is_exceptional_concrete(const CCObject& x) const {
  if (ctx_.ext(x.h0(), x.h0()) != 0) return false;
  const IntVector d = ctx_.dim(x.h0());
  for (int i = 0; i < ctx_.n(); ++i)
    if (x.shifted[i] && d[i] != 0) return false;
  return true;
}

int Category::shift(int idx) const {
  const int r = ctx_.num_roots();
  if (idx >= r) return ctx_.injective(idx - r);
  if (ctx_.is_projective(idx)) return r + ctx_.projective_vertex(idx);
  return *ctx_.tau(idx, 1);
}

IntVector Category::lambda(const CCObject& x) const {
  const int n = ctx_.n();
  const IntVector d0 = ctx_.dim(x.h0());
  IntVector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = static_cast<int>(-euler_form(ctx_.quiver(), unit_vector(n, i), d0)) + x.shifted[i];
  return v;
}

CCObject Category::exceptional_from_lambda(const IntVector& v) const {
  const int n = ctx_.n();
  if (static_cast<int>(v.size()) != n) throw InvalidInput("lambda vector length mismatch");
  const Quiver& q = ctx_.quiver();
  const std::vector<int> order = q.sink_order();
  std::optional<CCObject> found;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // On the complement of the SP support, -(E d0) = v with E unitriangular.
    IntVector d0(n, 0);
    bool ok = true;
    for (int i : order) {
      if (mask >> i & 1) continue;
      long long x = -v[i];
      for (int a : q.out_arrows(i)) {
        const int j = q.arrows()[a].target;
        if (!(mask >> j & 1)) x += d0[j];
      }
      if (x < 0) {
        ok = false;
        break;
      }
      d0[i] = static_cast<int>(x);
    }
    if (!ok) continue;
    CCObject obj = CCObject::zero(ctx_);
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const long long m = v[i] + (euler_matrix(q).apply(d0))[i];
      if (m < 1) ok = false;
      obj.shifted[i] = static_cast<int>(m);
    }
    if (!ok) continue;
    obj.module = exceptional_module(ctx_, d0).mult;
    if (lambda(obj) != v) throw InvariantViolation("lambda inversion produced the wrong vector");
    if (found) throw InvariantViolation("two exceptional objects share the lambda vector " + to_string(v));
    found = obj;
  }
  if (!found) throw InvariantViolation("no exceptional object with lambda vector " + to_string(v));
  return *found;
}

std::vector<CCObject> Category::tilting_objects() const {
  const int total = num_indecomposables();
  const int n = ctx_.n();
  std::vector<std::vector<char>> compatible(total, std::vector<char>(total, 0));
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) compatible[a][b] = a != b && ext1(a, b) == 0;
  for (int a = 0; a < total; ++a)
    if (ext1(a, a) != 0) throw InvariantViolation("indecomposable with self-extensions");
  std::vector<CCObject> out;
  std::vector<int> clique;
  std::uint64_t visited = 0;
  // Bron-Kerbosch with pivoting over maximal Ext-orthogonal sets.
  std::function<void(std::vector<int>, std::vector<int>)> grow = [&](std::vector<int> cand,
                                                                      std::vector<int> excluded) {
    if (++visited > ctx_.settings().search_budget) throw BudgetExceeded("tilting object search budget exceeded");
    if (cand.empty() && excluded.empty()) {
      if (static_cast<int>(clique.size()) != n)
        throw InvariantViolation("maximal Ext-orthogonal set with " + std::to_string(clique.size()) +
                                 " summands, expected " + std::to_string(n));
      CCObject t = CCObject::zero(ctx_);
      for (int idx : clique) t = t + indecomposable(idx);
      out.push_back(t);
      return;
    }
    int pivot = cand.empty() ? excluded.front() : cand.front();
    for (int u : cand) {
      int c = 0;
      for (int w : cand) c += compatible[u][w];
      int cp = 0;
      for (int w : cand) cp += compatible[pivot][w];
      if (c > cp) pivot = u;
    }
    std::vector<int> todo;
    for (int u : cand)
      if (!compatible[pivot][u]) todo.push_back(u);
    for (int u : todo) {
      std::vector<int> nc, ne;
      for (int w : cand)
        if (compatible[u][w]) nc.push_back(w);
      for (int w : excluded)
        if (compatible[u][w]) ne.push_back(w);
      clique.push_back(u);
      grow(nc, ne);
      clique.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), u));
      excluded.push_back(u);
    }
  };
  std::vector<int> all(total);
  for (int a = 0; a < total; ++a) all[a] = a;
  grow(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

ExtBlocks Category::blocks(const CCObject& n, const CCObject& m) const {
  ExtBlocks b;
  const IsoType n0 = n.h0(), m0 = m.h0();
  b.module_ext = ctx_.ext(n0, m0);
  b.dual_module_ext = ctx_.ext(m0, n0);
  const IntVector dm = ctx_.dim(m0), dn = ctx_.dim(n0);
  for (int i = 0; i < ctx_.n(); ++i) {
    b.from_projective += n.shifted[i] * dm[i];
    b.to_injective += m.shifted[i] * dn[i];
  }
  return b;
}

BigInt Category::direct_cost(int d) const {
  if (d <= 0) return 0;
  const auto primes = prime_schedule(ctx_.settings().primes, static_cast<std::size_t>(d) + 1);
  BigInt total = 0;
  for (std::uint32_t p : primes) total += projective_space_count(d).eval(p);
  return total;
}

namespace {

using PointMap = std::function<CCObject(const std::vector<std::uint32_t>&)>;
// For a prime: dimension of the class space and the middle term of each class.
using ClassFamily = std::function<std::pair<int, PointMap>(std::uint32_t)>;

TriangleCount count_directly(int d, const ClassFamily& family, const Settings& settings) {
  const std::function<std::map<CCObject, BigInt>(std::uint32_t)> count = [&](std::uint32_t p) {
    auto [dim, middle] = family(p);
    if (dim != d) throw InvariantViolation("extension space dimension depends on the prime");
    std::map<CCObject, BigInt> tally;
    std::vector<std::uint32_t> c(d);
    for (int lead = 0; lead < d; ++lead) {
      std::fill(c.begin(), c.end(), 0);
      c[lead] = 1;
      while (true) {
        tally[middle(c)] += 1;
        int t = d - 1;
        while (t > lead && c[t] == p - 1) c[t--] = 0;
        if (t == lead) break;
        ++c[t];
      }
    }
    return tally;
  };
  const auto polys = interpolate_counts<CCObject>(d - 1, settings.primes, count);
  TriangleCount tc;
  tc.dimension = d;
  tc.method = "direct";
  QPoly sum;
  for (const auto& [y, poly] : polys) {
    tc.classes.push_back({y, poly, poly.eval(1)});
    sum = sum + poly;
  }
  if (!(sum == projective_space_count(d)))
    throw InvariantViolation("middle-term counts do not partition the projective space");
  return tc;
}

// Splits a module into (non-injective part, injective vertices as SP multiplicities).
std::pair<IsoType, std::vector<int>> split_injective(const Context& ctx, const IsoType& t) {
  IsoType rest = t;
  std::vector<int> sp(ctx.n(), 0);
  for (int i = 0; i < ctx.n(); ++i) {
    const int k = ctx.injective(i);
    sp[i] = rest.mult[k];
    rest.mult[k] = 0;
  }
  return {rest, sp};
}

std::vector<int> projective_vertices(const Context& ctx, const IsoType& t) {
  std::vector<int> sp(ctx.n(), 0);
  for (int k = 0; k < ctx.num_roots(); ++k) {
    if (!t.mult[k]) continue;
    if (!ctx.is_projective(k)) throw InvariantViolation("kernel of a map from a projective is not projective");
    sp[ctx.projective_vertex(k)] += t.mult[k];
  }
  return sp;
}

std::vector<int> injective_vertices(const Context& ctx, const IsoType& t) {
  std::vector<int> sp(ctx.n(), 0);
  for (int k = 0; k < ctx.num_roots(); ++k) {
    if (!t.mult[k]) continue;
    if (!ctx.is_injective(k)) throw InvariantViolation("cokernel of a map to an injective is not injective");
    sp[ctx.injective_vertex(k)] += t.mult[k];
  }
  return sp;
}

CCObject with_shifted(CCObject x, const std::vector<int>& sp) {
  for (std::size_t i = 0; i < sp.size(); ++i) x.shifted[i] += sp[i];
  return x;
}

}  // namespace

TriangleCount Category::module_block_direct(const CCObject& n, const CCObject& m) const {
  const Context& ctx = ctx_;
  const IsoType n0 = n.h0(), m0 = m.h0();
  const int d = ctx.ext(n0, m0);
  TriangleCount tc;
  tc.dimension = d;
  tc.method = "none";
  if (d == 0) return tc;
  if (direct_cost(d) > ctx.settings().point_budget)
    throw BudgetExceeded("direct count of a " + std::to_string(d) + "-dimensional extension space exceeds the point budget");
  CCObject passive = CCObject::zero(ctx);
  passive.shifted = n.shifted;
  passive = passive + with_shifted(CCObject::zero(ctx), m.shifted);
  ClassFamily fam = [&, passive](std::uint32_t p) {
    auto nrep = std::make_shared<Rep>(ctx.realize(n0, p));
    auto mrep = std::make_shared<Rep>(ctx.realize(m0, p));
    auto basis = std::make_shared<std::vector<Cochain>>(ext_cocycles(*nrep, *mrep));
    PointMap f = [&ctx, nrep, mrep, basis, passive](const std::vector<std::uint32_t>& c) {
      const Rep y = extension(*mrep, *nrep, combine(*basis, c, *nrep, *mrep));
      return CCObject::of_module(ctx, decompose(ctx, y)) + passive;
    };
    return std::make_pair(static_cast<int>(basis->size()), f);
  };
  return count_directly(d, fam, ctx.settings());
}

TriangleCount Category::middle_terms(const CCObject& n, const CCObject& m, MiddleTermMode mode) const {
  const Context& ctx = ctx_;
  const ExtBlocks b = blocks(n, m);
  const int d = b.total();
  if (d != ext1(n, m)) throw InvariantViolation("extension blocks do not add up");
  TriangleCount empty;
  empty.dimension = 0;
  empty.method = "none";
  if (d == 0) return empty;

  const bool decomposable = n.summands() > 1 || m.summands() > 1;
  const bool direct_ok = b.nonzero_blocks() == 1 && direct_cost(d) <= ctx.settings().point_budget;
  if (mode == MiddleTermMode::reduced || (mode == MiddleTermMode::automatic && !direct_ok)) {
    if (!decomposable) {
      if (mode == MiddleTermMode::reduced) throw InvalidInput("reduction needs a decomposable pair");
      throw BudgetExceeded("direct count of a " + std::to_string(d) +
                           "-dimensional extension space exceeds the point budget");
    }
    return reduced_middle_terms(n, m);
  }
  if (b.nonzero_blocks() != 1)
    throw InvalidInput("direct counting handles one nonzero extension block at a time");
  if (direct_cost(d) > ctx.settings().point_budget)
    throw BudgetExceeded("direct count of a " + std::to_string(d) + "-dimensional extension space exceeds the point budget");

  const IsoType n0 = n.h0(), m0 = m.h0();
  if (b.module_ext) return module_block_direct(n, m);

  if (b.dual_module_ext) {
    // Classes are maps eta: N0 -> tau M', M' the non-projective part of M0.
    IsoType m_nonproj = m0, m_proj = IsoType::zero(ctx.num_roots());
    for (int i = 0; i < ctx.n(); ++i) std::swap(m_proj.mult[ctx.projective(i)], m_nonproj.mult[ctx.projective(i)]);
    const IsoType target = ar_translate(ctx, m_nonproj, 1);
    const CCObject passive = with_shifted(CCObject::of_module(ctx, m_proj), add(n.shifted, m.shifted));
    ClassFamily fam = [&, target, passive](std::uint32_t p) {
      auto nrep = std::make_shared<Rep>(ctx.realize(n0, p));
      auto trep = std::make_shared<Rep>(ctx.realize(target, p));
      auto basis = std::make_shared<std::vector<Morphism>>(hom_space(*nrep, *trep));
      PointMap f = [&ctx, nrep, trep, basis, passive](const std::vector<std::uint32_t>& c) {
        const Morphism eta = combine(*basis, c);
        const IsoType ker = decompose(ctx, kernel(eta, *nrep));
        const auto [coker_rest, coker_inj] = split_injective(ctx, decompose(ctx, cokernel(eta, *trep)));
        const IsoType lifted = ar_translate(ctx, coker_rest, -1);
        return with_shifted(CCObject::of_module(ctx, ker + lifted), coker_inj) + passive;
      };
      return std::make_pair(static_cast<int>(basis->size()), f);
    };
    return count_directly(d, fam, ctx.settings());
  }

  if (b.from_projective) {
    // Classes are maps f: P -> M0 for the projectives P shifted in N.
    const IsoType proj = n.shifted_part_as_projectives(ctx);
    const CCObject passive = with_shifted(CCObject::of_module(ctx, n0), m.shifted);
    ClassFamily fam = [&, proj, passive](std::uint32_t p) {
      auto prep = std::make_shared<Rep>(ctx.realize(proj, p));
      auto mrep = std::make_shared<Rep>(ctx.realize(m0, p));
      auto basis = std::make_shared<std::vector<Morphism>>(hom_space(*prep, *mrep));
      PointMap f = [&ctx, prep, mrep, basis, passive](const std::vector<std::uint32_t>& c) {
        const Morphism g = combine(*basis, c);
        const IsoType coker = decompose(ctx, cokernel(g, *mrep));
        const auto sp = projective_vertices(ctx, decompose(ctx, kernel(g, *prep)));
        return with_shifted(CCObject::of_module(ctx, coker), sp) + passive;
      };
      return std::make_pair(static_cast<int>(basis->size()), f);
    };
    return count_directly(d, fam, ctx.settings());
  }

  // Classes are maps g: N0 -> I for the injectives I matching SP summands of M.
  IsoType inj = IsoType::zero(ctx.num_roots());
  for (int i = 0; i < ctx.n(); ++i) inj.mult[ctx.injective(i)] += m.shifted[i];
  const CCObject passive = with_shifted(CCObject::of_module(ctx, m0), n.shifted);
  ClassFamily fam = [&, inj, passive](std::uint32_t p) {
    auto nrep = std::make_shared<Rep>(ctx.realize(n0, p));
    auto irep = std::make_shared<Rep>(ctx.realize(inj, p));
    auto basis = std::make_shared<std::vector<Morphism>>(hom_space(*nrep, *irep));
    PointMap f = [&ctx, nrep, irep, basis, passive](const std::vector<std::uint32_t>& c) {
      const Morphism g = combine(*basis, c);
      const IsoType ker = decompose(ctx, kernel(g, *nrep));
      const auto sp = injective_vertices(ctx, decompose(ctx, cokernel(g, *irep)));
      return with_shifted(CCObject::of_module(ctx, ker), sp) + passive;
    };
    return std::make_pair(static_cast<int>(basis->size()), f);
  };
  return count_directly(d, fam, ctx.settings());
}

const TriangleCount& Category::middle_terms(int n_idx, int m_idx) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({n_idx, m_idx});
    if (it != cache_.end()) return *it->second;
  }
  auto tc = std::make_unique<TriangleCount>(
      middle_terms(indecomposable(n_idx), indecomposable(m_idx), MiddleTermMode::direct));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(std::make_pair(n_idx, m_idx), std::move(tc));
  return *it->second;
}

TriangleCount Category::reduced_middle_terms(const CCObject& n, const CCObject& m,
                                             bool module_block_only) const {
  const int r = ctx_.num_roots();
  std::map<CCObject, BigInt> chi;
  int d = 0;
  for (auto [j, zj] : summands(n))
    for (auto [i, zi] : summands(m)) {
      if (module_block_only && (j >= r || i >= r || ctx_.ext(j, i) == 0)) continue;
      if (ext1(j, i) == 0) continue;
      const TriangleCount& pair = middle_terms(j, i);
      d += zi * zj * pair.dimension;
      const CCObject rest = n + m - indecomposable(j) - indecomposable(i);
      for (const auto& cls : pair.classes) chi[rest + cls.middle] += BigInt(zi * zj) * cls.chi;
    }
  TriangleCount tc;
  tc.dimension = d;
  tc.method = d ? "reduced" : "none";
  for (const auto& [y, c] : chi)
    if (c != 0) tc.classes.push_back({y, std::nullopt, c});
  if (tc.total_chi() != d) throw InvariantViolation("reduced middle terms do not add up to the dimension");
  return tc;
}

}  // namespace clusterhall
