#include "clusterhall/mutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "clusterhall/error.hpp"

namespace clusterhall {

std::vector<LaurentPoly> Seed::key() const {
  std::vector<LaurentPoly> k(cluster.begin(), cluster.begin() + mutable_count());
  std::sort(k.begin(), k.end());
  return k;
}

namespace {

Seed seed_with_matrix(const IntMatrix& m) {
  Seed s;
  s.matrix = m;
  for (int i = 0; i < m.rows; ++i) s.cluster.push_back(LaurentPoly::variable(m.rows, i));
  return s;
}

}  // namespace

Seed initial_seed(const Quiver& q) { return seed_with_matrix(b_matrix(q)); }

Seed principal_seed(const Quiver& q) {
  const int n = q.num_vertices();
  const IntMatrix b = b_matrix(q);
  IntMatrix m(2 * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = b(i, j);
  for (int i = 0; i < n; ++i) m(n + i, i) = 1;
  return seed_with_matrix(m);
}

IntMatrix mutate_matrix(const IntMatrix& b, int j) {
  IntMatrix out(b.rows, b.cols);
  for (int i = 0; i < b.rows; ++i)
    for (int k = 0; k < b.cols; ++k) {
      if (i == j || k == j) {
        out(i, k) = -b(i, k);
      } else {
        const long long bij = b(i, j), bjk = b(j, k);
        out(i, k) = b(i, k) + (std::llabs(bij) * bjk + bij * std::llabs(bjk)) / 2;
      }
    }
  return out;
}

Seed mutate(const Seed& s, int j) {
  if (j < 0 || j >= s.mutable_count()) throw InvalidInput("mutation direction out of range");
  const int m = s.matrix.rows;
  const int nvars = s.cluster.front().nvars();
  LaurentPoly pos = LaurentPoly::constant(nvars, 1), neg = LaurentPoly::constant(nvars, 1);
  for (int i = 0; i < m; ++i) {
    const long long b = s.matrix(i, j);
    if (b > 0) pos = pos * s.cluster[i].pow(static_cast<unsigned>(b));
    if (b < 0) neg = neg * s.cluster[i].pow(static_cast<unsigned>(-b));
  }
  auto next = (pos + neg).divide_exact(s.cluster[j]);
  if (!next) throw InvariantViolation("exchange relation is not an exact division");
  Seed out = s;
  out.cluster[j] = std::move(*next);
  out.matrix = mutate_matrix(s.matrix, j);
  return out;
}

ExchangeGraph exchange_graph(const Seed& start, std::size_t budget) {
  ExchangeGraph g;
  std::map<std::vector<LaurentPoly>, int> seen;
  std::deque<int> queue;
  g.nodes.push_back(start);
  seen.emplace(start.key(), 0);
  queue.push_back(0);
  const int n = start.mutable_count();
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      Seed next = mutate(g.nodes[u], j);
      auto key = next.key();
      auto it = seen.find(key);
      int v;
      if (it == seen.end()) {
        if (g.nodes.size() >= budget) {
          g.finite = false;
          return g;
        }
        v = static_cast<int>(g.nodes.size());
        seen.emplace(std::move(key), v);
        g.nodes.push_back(std::move(next));
        queue.push_back(v);
      } else {
        v = it->second;
      }
      if (u < v) g.edges.push_back({u, v, j});
    }
  }
  for (const Seed& s : g.nodes)
    for (int j = 0; j < n; ++j) g.variables.insert(s.cluster[j]);
  return g;
}

VariablesReport variables_vs_objects(const Engine& engine) {
  VariablesReport rep;
  const Category& cat = engine.category();
  const Characters& chars = engine.characters();
  const ExchangeGraph g = exchange_graph(initial_seed(engine.quiver()), engine.context().settings().bfs_budget);
  if (!g.finite) {
    rep.failures.push_back("exchange graph not finite within budget");
    return rep;
  }
  rep.clusters = static_cast<int>(g.nodes.size());
  rep.variables = static_cast<int>(g.variables.size());
  rep.indecomposables = cat.num_indecomposables();

  std::set<LaurentPoly> characters;
  for (int idx = 0; idx < cat.num_indecomposables(); ++idx) characters.insert(chars.x_indecomposable(idx));
  if (static_cast<int>(characters.size()) != rep.indecomposables)
    rep.failures.push_back("two indecomposables share a character");
  rep.variables_match = characters == g.variables;
  if (!rep.variables_match) rep.failures.push_back("cluster variables differ from the characters of indecomposables");

  std::set<std::vector<LaurentPoly>> clusters;
  for (const Seed& s : g.nodes) clusters.insert(s.key());
  const auto tilting = cat.tilting_objects();
  rep.tilting_objects = static_cast<int>(tilting.size());
  std::set<std::vector<LaurentPoly>> from_tilting;
  for (const CCObject& t : tilting) {
    std::vector<LaurentPoly> k;
    for (auto [idx, mult] : cat.summands(t)) {
      if (mult != 1) rep.failures.push_back("tilting object with a repeated summand: " + cat.describe(t));
      k.push_back(chars.x_indecomposable(idx));
    }
    std::sort(k.begin(), k.end());
    if (!clusters.count(k)) rep.failures.push_back("tilting object is not a cluster: " + cat.describe(t));
    from_tilting.insert(std::move(k));
  }
  rep.tilting_match = from_tilting == clusters && rep.tilting_objects == rep.clusters;
  if (!rep.tilting_match) rep.failures.push_back("clusters and tilting objects are not in bijection");
  return rep;
}

}  // namespace clusterhall
