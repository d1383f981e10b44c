#include "clusterhall/context.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

#include "clusterhall/error.hpp"

namespace clusterhall {

bool IsoType::empty() const {
  return std::all_of(mult.begin(), mult.end(), [](int m) { return m == 0; });
}

int IsoType::summands() const {
  int s = 0;
  for (int m : mult) s += m;
  return s;
}

IsoType IsoType::operator+(const IsoType& o) const {
  IsoType r = *this;
  for (std::size_t k = 0; k < r.mult.size(); ++k) r.mult[k] += o.mult[k];
  return r;
}

namespace {

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Context::Context(Quiver q, Settings s)
    : quiver_(std::make_shared<const Quiver>(std::move(q))), settings_(std::move(s)) {
  if (settings_.primes.empty()) throw InvalidInput("prime list is empty");
  for (std::uint32_t p : settings_.primes)
    if (p > 64 || !is_prime(p)) throw InvalidInput("configured prime " + std::to_string(p) + " is not a prime <= 64");
  std::set<std::uint32_t> distinct(settings_.primes.begin(), settings_.primes.end());
  if (distinct.size() != settings_.primes.size()) throw InvalidInput("configured primes are not distinct");

  const int n = quiver_->num_vertices();
  roots_ = positive_roots(*quiver_);
  if (static_cast<int>(roots_.size()) != positive_root_count(quiver_->type()))
    throw InvariantViolation("positive root count does not match the Dynkin type");
  for (int k = 0; k < num_roots(); ++k) root_index_[roots_[k]] = k;

  projective_vertex_.assign(num_roots(), -1);
  injective_vertex_.assign(num_roots(), -1);
  for (int i = 0; i < n; ++i) {
    projective_.push_back(root_index(projective_dim(*quiver_, i)));
    injective_.push_back(root_index(injective_dim(*quiver_, i)));
    projective_vertex_[projective_.back()] = i;
    injective_vertex_[injective_.back()] = i;
  }
  self_test();

  const auto& reps = reps_at(settings_.primes.front());
  const int r = num_roots();
  hom_.assign(r, std::vector<int>(r, 0));
  ext_.assign(r, std::vector<int>(r, 0));
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      hom_[k][l] = hom_dim(reps[k], reps[l]);
      ext_[k][l] = static_cast<int>(hom_[k][l] - euler_form(*quiver_, roots_[k], roots_[l]));
      if (ext_[k][l] < 0) throw InvariantViolation("negative extension dimension");
    }

  // Hom ordering: transitive closure of Hom != 0, topologically sorted with
  // smallest-index tie breaking.
  std::vector<std::vector<char>> reach(r, std::vector<char>(r, 0));
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) reach[k][l] = k != l && hom_[k][l] != 0;
  for (int m = 0; m < r; ++m)
    for (int k = 0; k < r; ++k)
      if (reach[k][m])
        for (int l = 0; l < r; ++l)
          if (reach[m][l]) reach[k][l] = 1;
  std::vector<int> indeg(r, 0);
  for (int k = 0; k < r; ++k) {
    if (reach[k][k]) throw InvariantViolation("Hom relation has a cycle");
    for (int l = 0; l < r; ++l) indeg[l] += reach[k][l];
  }
  std::set<int> ready;
  for (int k = 0; k < r; ++k)
    if (!indeg[k]) ready.insert(k);
  while (!ready.empty()) {
    const int k = *ready.begin();
    ready.erase(ready.begin());
    hom_order_.push_back(k);
    for (int l = 0; l < r; ++l)
      if (reach[k][l] && --indeg[l] == 0) ready.insert(l);
  }
  for (int k = 0; k < r; ++k) {
    if (hom_order_[k] != k) throw InvariantViolation("root numbering is not compatible with the Hom ordering");
    if (hom_[k][k] != 1) throw InvariantViolation("indecomposable with endomorphism dimension != 1");
  }

  std::string canon = quiver_->type().label() + "|" + quiver_->compact() + "|";
  for (const auto& d : roots_) canon += to_string(d);
  hash_ = fnv1a(canon);
}

void Context::self_test() const {
  const int n = quiver_->num_vertices();
  for (int i = 0; i < n; ++i) {
    const IntVector img = coxeter(*quiver_, projective_dim(*quiver_, i), 1);
    if (img != scaled(injective_dim(*quiver_, i), -1))
      throw InvariantViolation("Coxeter calibration failed: Phi(dim P_i) != -dim I_i");
    if (coxeter(*quiver_, img, -1) != projective_dim(*quiver_, i))
      throw InvariantViolation("Coxeter calibration failed: inverse");
  }
  for (int k = 0; k < num_roots(); ++k) {
    if (!is_projective(k) && !find_root(coxeter(*quiver_, roots_[k], 1)))
      throw InvariantViolation("Coxeter calibration failed: tau of a non-projective root");
    if (!is_injective(k) && !find_root(coxeter(*quiver_, roots_[k], -1)))
      throw InvariantViolation("Coxeter calibration failed: inverse tau of a non-injective root");
  }
}

std::optional<int> Context::find_root(const IntVector& d) const {
  auto it = root_index_.find(d);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

int Context::root_index(const IntVector& d) const {
  auto k = find_root(d);
  if (!k) throw InvalidInput("not a positive root: " + to_string(d));
  return *k;
}

std::optional<int> Context::tau(int k, int direction) const {
  if (direction > 0 && is_projective(k)) return std::nullopt;
  if (direction < 0 && is_injective(k)) return std::nullopt;
  return root_index(coxeter(*quiver_, roots_[k], direction > 0 ? 1 : -1));
}

int Context::hom(const IsoType& a, const IsoType& b) const {
  int s = 0;
  for (int k = 0; k < num_roots(); ++k)
    if (a.mult[k])
      for (int l = 0; l < num_roots(); ++l)
        if (b.mult[l]) s += a.mult[k] * b.mult[l] * hom_[k][l];
  return s;
}

int Context::ext(const IsoType& a, const IsoType& b) const {
  int s = 0;
  for (int k = 0; k < num_roots(); ++k)
    if (a.mult[k])
      for (int l = 0; l < num_roots(); ++l)
        if (b.mult[l]) s += a.mult[k] * b.mult[l] * ext_[k][l];
  return s;
}

const std::vector<Rep>& Context::reps_at(std::uint32_t p) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = reps_.find(p);
  if (it != reps_.end()) return *it->second;
  auto reps = std::make_unique<std::vector<Rep>>();
  for (const IntVector& d : roots_) reps->push_back(build_indecomposable(quiver_, d, p));
  const auto& ref = *reps;
  reps_.emplace(p, std::move(reps));
  return ref;
}

const Rep& Context::indecomposable(int k, std::uint32_t p) const { return reps_at(p).at(k); }

Rep Context::realize(const IsoType& t, std::uint32_t p) const {
  Rep r = zero_rep(quiver_, p);
  for (int k = 0; k < num_roots(); ++k)
    for (int m = 0; m < t.mult[k]; ++m) r = direct_sum(r, indecomposable(k, p));
  return r;
}

IntVector Context::dim(const IsoType& t) const {
  IntVector d(n(), 0);
  for (int k = 0; k < num_roots(); ++k)
    if (t.mult[k]) d = add(d, scaled(roots_[k], t.mult[k]));
  return d;
}

IsoType decompose(const Context& ctx, const Rep& m) {
  const int r = ctx.num_roots();
  std::vector<int> cand;
  for (int k = 0; k < r; ++k)
    if (leq(ctx.root(k), m.dims)) cand.push_back(k);
  std::vector<int> h(r, 0);
  for (int k : cand) h[k] = hom_dim(ctx.indecomposable(k, m.p), m);
  IsoType t = IsoType::zero(r);
  for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
    const int k = *it;
    int v = h[k];
    for (int l : cand)
      if (l > k) v -= ctx.hom(k, l) * t.mult[l];
    if (v < 0) throw InvariantViolation("decompose: negative multiplicity");
    t.mult[k] = v;
  }
  if (ctx.dim(t) != m.dims) throw InvariantViolation("decompose: multiplicities do not add up to dim M");
  return t;
}

IsoType ar_translate(const Context& ctx, const IsoType& t, int direction) {
  if (direction != 1 && direction != -1) throw InvalidInput("ar_translate direction must be +1 or -1");
  IsoType out = IsoType::zero(ctx.num_roots());
  for (int k = 0; k < ctx.num_roots(); ++k) {
    if (!t.mult[k]) continue;
    auto img = ctx.tau(k, direction);
    if (!img)
      throw InvalidInput(direction > 0 ? "ar_translate: projective summand " + to_string(ctx.root(k))
                                       : "ar_translate: injective summand " + to_string(ctx.root(k)));
    out.mult[*img] += t.mult[k];
  }
  return out;
}

IsoType exceptional_module(const Context& ctx, const IntVector& d) {
  if (static_cast<int>(d.size()) != ctx.n() || !is_nonnegative(d))
    throw InvalidInput("exceptional_module needs a nonnegative dimension vector");
  const int r = ctx.num_roots();
  IsoType cur = IsoType::zero(r);
  std::vector<int> chosen;
  std::uint64_t visited = 0;
  std::function<bool(const IntVector&, int)> dfs = [&](const IntVector& rest, int start) -> bool {
    if (is_zero(rest)) return true;
    if (++visited > ctx.settings().search_budget) throw BudgetExceeded("exceptional_module search budget exceeded");
    for (int k = start; k < r; ++k) {
      if (!leq(ctx.root(k), rest)) continue;
      bool ok = true;
      for (int l : chosen)
        if (ctx.ext(k, l) || ctx.ext(l, k)) ok = false;
      if (!ok) continue;
      int maxm = 1;
      while (leq(scaled(ctx.root(k), maxm + 1), rest)) ++maxm;
      chosen.push_back(k);
      for (int m = maxm; m >= 1; --m) {
        cur.mult[k] = m;
        if (dfs(sub(rest, scaled(ctx.root(k), m)), k + 1)) return true;
      }
      cur.mult[k] = 0;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(d, 0)) throw InvariantViolation("no rigid module with dimension vector " + to_string(d));
  return cur;
}

std::vector<IsoType> isotypes_with_dim(const Context& ctx, const IntVector& d) {
  const int r = ctx.num_roots();
  std::vector<IsoType> out;
  IsoType cur = IsoType::zero(r);
  std::uint64_t visited = 0;
  std::function<void(const IntVector&, int)> dfs = [&](const IntVector& rest, int start) {
    if (++visited > ctx.settings().search_budget) throw BudgetExceeded("iso type enumeration budget exceeded");
    if (is_zero(rest)) {
      out.push_back(cur);
      return;
    }
    for (int k = start; k < r; ++k) {
      if (!leq(ctx.root(k), rest)) continue;
      IntVector left = rest;
      int m = 0;
      while (leq(ctx.root(k), left)) {
        left = sub(left, ctx.root(k));
        cur.mult[k] = ++m;
        dfs(left, k + 1);
      }
      cur.mult[k] = 0;
    }
  };
  dfs(d, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void verify_prime_independence(const Context& ctx) {
  const int r = ctx.num_roots();
  for (std::uint32_t p : ctx.settings().primes)
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) {
        const Rep& a = ctx.indecomposable(k, p);
        const Rep& b = ctx.indecomposable(l, p);
        if (hom_dim(a, b) != ctx.hom(k, l) || ext_dim(a, b) != ctx.ext(k, l))
          throw InvariantViolation("Hom/Ext dimension depends on the prime p=" + std::to_string(p));
      }
}

}  // namespace clusterhall
