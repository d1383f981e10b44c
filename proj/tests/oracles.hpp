#pragma once

#include <functional>
#include <set>
#include <vector>

#include "clusterhall/ffalg.hpp"
#include "clusterhall/quiver.hpp"
#include "clusterhall/rep.hpp"

namespace oracle {

using clusterhall::IntVector;
using clusterhall::Quiver;

inline long long symmetric_form(const Quiver& q, const IntVector& d, const IntVector& e) {
  return clusterhall::euler_form(q, d, e) + clusterhall::euler_form(q, e, d);
}

inline IntVector reflect(const Quiver& q, const IntVector& d, int i) {
  IntVector r = d;
  r[i] -= static_cast<int>(symmetric_form(q, d, clusterhall::unit_vector(q.num_vertices(), i)));
  return r;
}

// Positive roots by closing the simple roots under simple reflections.
inline std::set<IntVector> positive_roots(const Quiver& q) {
  const int n = q.num_vertices();
  std::set<IntVector> seen;
  std::vector<IntVector> todo;
  for (int i = 0; i < n; ++i) todo.push_back(clusterhall::unit_vector(n, i));
  while (!todo.empty()) {
    IntVector d = todo.back();
    todo.pop_back();
    if (!seen.insert(d).second) continue;
    for (int i = 0; i < n; ++i) {
      IntVector r = reflect(q, d, i);
      if (clusterhall::is_nonnegative(r) && !clusterhall::is_zero(r) && !seen.count(r)) todo.push_back(r);
    }
  }
  return seen;
}

// Coxeter transformation as reflections applied in sink order.
inline IntVector coxeter(const Quiver& q, IntVector d) {
  for (int v : q.sink_order()) d = reflect(q, d, v);
  return d;
}

// Number of paths from `from` to each vertex (dim of the projective at `from`).
inline IntVector paths_from(const Quiver& q, int from) {
  IntVector count(q.num_vertices(), 0);
  std::function<void(int)> walk = [&](int v) {
    ++count[v];
    for (int a : q.out_arrows(v)) walk(q.arrows()[a].target);
  };
  walk(from);
  return count;
}

inline IntVector paths_into(const Quiver& q, int to) {
  IntVector count(q.num_vertices(), 0);
  std::function<void(int)> walk = [&](int v) {
    ++count[v];
    for (int a : q.in_arrows(v)) walk(q.arrows()[a].source);
  };
  walk(to);
  return count;
}

// Submodule count by enumerating every tuple of subspaces and testing stability.
inline long long brute_submodules(const clusterhall::Rep& m, const IntVector& e) {
  using clusterhall::FMatrix;
  const int n = m.num_vertices();
  std::vector<std::vector<FMatrix>> choices(n);
  for (int v = 0; v < n; ++v) {
    clusterhall::SubspaceStream s(m.dims[v], e[v], m.p);
    FMatrix rows;
    while (s.next(rows)) choices[v].push_back(rows.transpose());
    if (e[v] == 0) {
      choices[v].clear();
      choices[v].push_back(FMatrix(m.dims[v], 0, m.p));
    }
  }
  std::vector<int> pick(n, 0);
  long long total = 0;
  std::function<void(int)> walk = [&](int v) {
    if (v == n) {
      for (std::size_t a = 0; a < m.q().arrows().size(); ++a) {
        const auto& arrow = m.q().arrows()[a];
        const FMatrix& src = choices[arrow.source][pick[arrow.source]];
        const FMatrix& dst = choices[arrow.target][pick[arrow.target]];
        if (src.cols() == 0) continue;
        const FMatrix image = m.maps[a] * src;
        if (clusterhall::rank(clusterhall::hstack(dst, image)) != dst.cols()) return;
      }
      ++total;
      return;
    }
    for (std::size_t k = 0; k < choices[v].size(); ++k) {
      pick[v] = static_cast<int>(k);
      walk(v + 1);
    }
  };
  walk(0);
  return total;
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Cluster counts of finite type.
inline long long cluster_count(char family, int n) {
  if (family == 'A') return binomial(2 * n + 2, n + 1) / (n + 2);
  if (family == 'D') return (3 * n - 2) * binomial(2 * n - 2, n - 1) / n;
  if (n == 6) return 833;
  if (n == 7) return 4160;
  return 25080;
}

}  // namespace oracle
