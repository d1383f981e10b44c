#include "clusterhall/grassmannian.hpp"

#include <deque>

#include "clusterhall/error.hpp"

namespace clusterhall {
namespace {

// Vertices in breadth-first order over the tree, starting at the vertex with
// the fewest candidate subspaces. Every non-root vertex is constrained only
// through the arrow to its parent at the moment it is placed.
struct Plan {
  std::vector<int> order;
  std::vector<int> parent;
  std::vector<int> parent_arrow;
  std::vector<std::vector<int>> children;
};

Plan make_plan(const Rep& m, const IntVector& e) {
  const Quiver& q = m.q();
  const int n = q.num_vertices();
  int root = 0;
  BigInt best = -1;
  for (int v = 0; v < n; ++v) {
    const BigInt c = gaussian_binomial(m.dims[v], e[v], BigInt(m.p));
    if (best < 0 || c < best) best = c, root = v;
  }
  Plan plan;
  plan.parent.assign(n, -1);
  plan.parent_arrow.assign(n, -1);
  plan.children.assign(n, {});
  std::vector<char> seen(n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    plan.order.push_back(v);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const Arrow& ar = q.arrows()[a];
      int w = -1;
      if (ar.source == v) w = ar.target;
      if (ar.target == v) w = ar.source;
      if (w < 0 || seen[w]) continue;
      seen[w] = 1;
      plan.parent[w] = v;
      plan.parent_arrow[w] = static_cast<int>(a);
      plan.children[v].push_back(w);
      queue.push_back(w);
    }
  }
  return plan;
}

// Subspaces U of M_v with L <= U <= W: U = [L | C * S^T] for S in a stream.
struct Window {
  FMatrix lower;
  FMatrix complement;
  bool feasible = false;
  int free_dim = 0;
  int pick = 0;
};

Window window_for(const Rep& m, const Plan& plan, int v, const FMatrix& parent_space, int ev) {
  const std::uint32_t p = m.p;
  const int a = plan.parent_arrow[v];
  const Arrow& ar = m.q().arrows()[a];
  FMatrix lower(m.dims[v], 0, p);
  FMatrix upper = FMatrix::identity(m.dims[v], p);
  if (ar.target == v) {
    lower = column_basis(m.maps[a] * parent_space);
  } else {
    const FMatrix annihilator = left_kernel(parent_space);
    upper = solve_kernel(annihilator * m.maps[a]);
  }
  Window w;
  w.lower = lower;
  if (ev < lower.cols() || ev > upper.cols()) return w;
  w.complement = complement_in(lower, upper);
  w.feasible = true;
  w.free_dim = w.complement.cols();
  w.pick = ev - lower.cols();
  return w;
}

FMatrix lift(const Window& w, const FMatrix& s) {
  return hstack(w.lower, w.complement * s.transpose());
}

void check_args(const Rep& m, const IntVector& e) {
  if (static_cast<int>(e.size()) != m.num_vertices() || !is_nonnegative(e) || !leq(e, m.dims))
    throw InvalidInput("submodule dimension vector " + to_string(e) + " is not between 0 and " +
                       to_string(m.dims));
}

struct Counter {
  const Rep& m;
  const IntVector& e;
  const Plan& plan;
  std::uint64_t budget;
  std::uint64_t visited = 0;

  void tick() {
    if (++visited > budget)
      throw BudgetExceeded("submodule enumeration exceeded budget " + std::to_string(budget));
  }

  // Number of ways to extend a fixed U_v over the subtree below v.
  BigInt below(int v, const FMatrix& uv) {
    BigInt total = 1;
    for (int c : plan.children[v]) {
      const Window w = window_for(m, plan, c, uv, e[c]);
      if (!w.feasible) return 0;
      BigInt sum = 0;
      if (plan.children[c].empty()) {
        sum = gaussian_binomial(w.free_dim, w.pick, BigInt(m.p));
      } else {
        SubspaceStream s = subspaces(w.free_dim, w.pick, m.p, budget);
        FMatrix basis;
        while (s.next(basis)) {
          tick();
          sum += below(c, lift(w, basis));
        }
      }
      if (sum == 0) return 0;
      total *= sum;
    }
    return total;
  }
};

}  // namespace

BigInt count_submodules(const Rep& m, const IntVector& e, std::uint64_t budget) {
  check_args(m, e);
  const Plan plan = make_plan(m, e);
  Counter counter{m, e, plan, budget};
  const int root = plan.order.front();
  SubspaceStream s = subspaces(m.dims[root], e[root], m.p, budget);
  BigInt total = 0;
  FMatrix basis;
  while (s.next(basis)) {
    counter.tick();
    total += counter.below(root, basis.transpose());
  }
  return total;
}

void for_each_submodule(const Rep& m, const IntVector& e, std::uint64_t budget,
                        const std::function<void(const std::vector<FMatrix>&)>& fn) {
  check_args(m, e);
  const Plan plan = make_plan(m, e);
  const int n = m.num_vertices();
  std::vector<FMatrix> chosen(n);
  std::uint64_t visited = 0;
  std::function<void(std::size_t)> place = [&](std::size_t t) {
    if (t == plan.order.size()) {
      fn(chosen);
      return;
    }
    const int v = plan.order[t];
    FMatrix basis;
    if (t == 0) {
      SubspaceStream s = subspaces(m.dims[v], e[v], m.p, budget);
      while (s.next(basis)) {
        if (++visited > budget) throw BudgetExceeded("submodule enumeration exceeded budget");
        chosen[v] = basis.transpose();
        place(t + 1);
      }
      return;
    }
    const Window w = window_for(m, plan, v, chosen[plan.parent[v]], e[v]);
    if (!w.feasible) return;
    SubspaceStream s = subspaces(w.free_dim, w.pick, m.p, budget);
    while (s.next(basis)) {
      if (++visited > budget) throw BudgetExceeded("submodule enumeration exceeded budget");
      chosen[v] = lift(w, basis);
      place(t + 1);
    }
  };
  place(0);
}

int grassmann_degree_bound(const IntVector& d, const IntVector& e) {
  int s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += e[i] * (d[i] - e[i]);
  return s;
}

std::vector<IntVector> sub_dimension_vectors(const IntVector& d) {
  std::vector<IntVector> out;
  IntVector e(d.size(), 0);
  while (true) {
    out.push_back(e);
    int i = static_cast<int>(d.size()) - 1;
    while (i >= 0 && e[i] == d[i]) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  return out;
}

QPoly grassmann_poly(const RepFamily& family, const IntVector& dim, const IntVector& e,
                     const Settings& settings) {
  const int bound = grassmann_degree_bound(dim, e);
  const std::function<std::map<int, BigInt>(std::uint32_t)> count = [&](std::uint32_t p) {
    const Rep m = family(p);
    if (m.dims != dim) throw InvariantViolation("representation family changes dimension with p");
    return std::map<int, BigInt>{{0, count_submodules(m, e, settings.subspace_budget)}};
  };
  auto polys = interpolate_counts<int>(bound, settings.primes, count);
  return polys.count(0) ? polys.at(0) : QPoly();
}

QPoly grassmann_poly(const Context& ctx, const IsoType& m, const IntVector& e) {
  return grassmann_poly([&](std::uint32_t p) { return ctx.realize(m, p); }, ctx.dim(m), e,
                        ctx.settings());
}

BigInt euler_char(const QPoly& poly) {
  const BigInt chi = poly.eval(1);
  if (chi < 0) throw InvariantViolation("negative Euler characteristic " + chi.str());
  if (!poly.is_zero() && chi == 0)
    throw InvariantViolation("nonempty quiver Grassmannian with Euler characteristic 0");
  return chi;
}

BigInt euler_char(const Context& ctx, const IsoType& m, const IntVector& e) {
  return euler_char(grassmann_poly(ctx, m, e));
}

}  // namespace clusterhall
