#include "clusterhall/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "clusterhall/error.hpp"

namespace clusterhall {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw InvalidInput("matrix shape mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const long long a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (static_cast<int>(v.size()) != cols) throw InvalidInput("vector length mismatch");
  IntVector out(rows, 0);
  for (int i = 0; i < rows; ++i) {
    long long s = 0;
    for (int j = 0; j < cols; ++j) s += (*this)(i, j) * v[j];
    out[i] = static_cast<int>(s);
  }
  return out;
}

DynkinType DynkinType::parse(std::string_view label) {
  if (label.size() < 2) throw InvalidInput("bad Dynkin type label: " + std::string(label));
  DynkinType t;
  switch (label[0]) {
    case 'A':
      t.family = DynkinFamily::A;
      break;
    case 'D':
      t.family = DynkinFamily::D;
      break;
    case 'E':
      t.family = DynkinFamily::E;
      break;
    default:
      throw InvalidInput("bad Dynkin type label: " + std::string(label));
  }
  int rank = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), rank);
  if (ec != std::errc() || ptr != label.data() + label.size())
    throw InvalidInput("bad Dynkin type label: " + std::string(label));
  t.rank = rank;
  const bool ok = (t.family == DynkinFamily::A && rank >= 1 && rank <= 8) ||
                  (t.family == DynkinFamily::D && rank >= 4 && rank <= 6) ||
                  (t.family == DynkinFamily::E && rank >= 6 && rank <= 8);
  if (!ok) throw InvalidInput("unsupported Dynkin type: " + std::string(label));
  return t;
}

std::string DynkinType::label() const {
  const char c = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
  return std::string(1, c) + std::to_string(rank);
}

namespace {

void check_shape(const DynkinType& type, const std::vector<std::vector<int>>& adj) {
  const int n = type.rank;
  std::vector<int> branch_points;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) throw InvalidInput("vertex of degree > 3 in " + type.label());
    if (adj[v].size() == 3) branch_points.push_back(v);
  }
  if (type.family == DynkinFamily::A) {
    if (!branch_points.empty()) throw InvalidInput("graph is not a path, expected " + type.label());
    return;
  }
  if (branch_points.size() != 1)
    throw InvalidInput("graph does not have a single branch point, expected " + type.label());
  const int c = branch_points[0];
  std::vector<int> lengths;
  for (int start : adj[c]) {
    int prev = c, cur = start, len = 1;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  const std::vector<int> want = type.family == DynkinFamily::D ? std::vector<int>{1, 1, n - 3}
                                                               : std::vector<int>{1, 2, n - 4};
  std::vector<int> sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  if (lengths != sorted_want) throw InvalidInput("branch lengths do not match " + type.label());
}

}  // namespace

Quiver::Quiver(DynkinType type, std::vector<Arrow> arrows)
    : type_(type), arrows_(std::move(arrows)) {
  const int n = type_.rank;
  out_.assign(n, {});
  in_.assign(n, {});
  std::set<std::pair<int, int>> seen_directed;
  std::set<std::pair<int, int>> seen_edges;
  std::vector<std::vector<int>> adj(n);
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.source < 0 || ar.source >= n || ar.target < 0 || ar.target >= n)
      throw InvalidInput("arrow endpoint out of range");
    if (ar.source == ar.target) throw InvalidInput("loop at vertex " + std::to_string(ar.source + 1));
    if (!seen_directed.insert({ar.source, ar.target}).second)
      throw InvalidInput("duplicate arrow " + std::to_string(ar.source + 1) + "->" +
                         std::to_string(ar.target + 1));
    const auto edge = std::minmax(ar.source, ar.target);
    if (!seen_edges.insert(edge).second)
      throw InvalidInput("edge " + std::to_string(edge.first + 1) + "-" +
                         std::to_string(edge.second + 1) + " is oriented twice (not a tree orientation)");
    out_[ar.source].push_back(static_cast<int>(a));
    in_[ar.target].push_back(static_cast<int>(a));
    adj[ar.source].push_back(ar.target);
    adj[ar.target].push_back(ar.source);
  }
  if (static_cast<int>(arrows_.size()) != n - 1)
    throw InvalidInput(type_.label() + " needs " + std::to_string(n - 1) + " arrows, got " +
                       std::to_string(arrows_.size()));
  std::vector<char> reached(n, 0);
  std::deque<int> queue{0};
  reached[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        queue.push_back(w);
      }
  }
  if (count != n) throw InvalidInput("underlying graph is not connected");
  check_shape(type_, adj);
}

Quiver Quiver::build(std::string_view type_label, const std::vector<std::pair<int, int>>& arrows) {
  DynkinType t = DynkinType::parse(type_label);
  std::vector<Arrow> out;
  for (auto [s, d] : arrows) out.push_back({s - 1, d - 1});
  return Quiver(t, std::move(out));
}

Quiver Quiver::build(std::string_view type_label, std::string_view compact_arrows) {
  std::vector<std::pair<int, int>> arrows;
  std::string text(compact_arrows);
  text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == ' '; }), text.end());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto pos = item.find("->");
    if (pos == std::string::npos) throw InvalidInput("bad arrow '" + item + "', expected i->j");
    int s = 0, d = 0;
    const std::string ls = item.substr(0, pos), rs = item.substr(pos + 2);
    auto r1 = std::from_chars(ls.data(), ls.data() + ls.size(), s);
    auto r2 = std::from_chars(rs.data(), rs.data() + rs.size(), d);
    if (r1.ec != std::errc() || r1.ptr != ls.data() + ls.size() || r2.ec != std::errc() ||
        r2.ptr != rs.data() + rs.size())
      throw InvalidInput("bad arrow '" + item + "', expected i->j");
    arrows.emplace_back(s, d);
  }
  return build(type_label, arrows);
}

Quiver Quiver::preset(std::string_view type_label, Orientation orientation) {
  const DynkinType t = DynkinType::parse(type_label);
  const int n = t.rank;
  std::vector<std::pair<int, int>> edges;
  const int path_len = t.family == DynkinFamily::A ? n : n - 1;
  for (int i = 0; i + 1 < path_len; ++i) edges.emplace_back(i, i + 1);
  if (t.family == DynkinFamily::D) edges.emplace_back(n - 3, n - 1);
  if (t.family == DynkinFamily::E) edges.emplace_back(2, n - 1);

  std::vector<Arrow> arrows;
  if (orientation == Orientation::linear) {
    for (auto [a, b] : edges) arrows.push_back({a, b});
  } else {
    std::vector<int> colour(n, -1);
    colour[0] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [a, b] : edges) {
        if (colour[a] >= 0 && colour[b] < 0) colour[b] = 1 - colour[a], changed = true;
        if (colour[b] >= 0 && colour[a] < 0) colour[a] = 1 - colour[b], changed = true;
      }
    }
    for (auto [a, b] : edges) {
      if (colour[a] == 0)
        arrows.push_back({a, b});
      else
        arrows.push_back({b, a});
    }
  }
  return Quiver(t, std::move(arrows));
}

std::vector<int> Quiver::neighbours(int v) const {
  std::vector<int> out;
  for (int a : out_[v]) out.push_back(arrows_[a].target);
  for (int a : in_[v]) out.push_back(arrows_[a].source);
  std::sort(out.begin(), out.end());
  return out;
}

Quiver Quiver::reflected(int v) const {
  std::vector<Arrow> arrows = arrows_;
  for (Arrow& a : arrows)
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  return Quiver(type_, std::move(arrows));
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> arrows = arrows_;
  for (Arrow& a : arrows) std::swap(a.source, a.target);
  return Quiver(type_, std::move(arrows));
}

std::vector<int> Quiver::sink_order() const {
  const int n = num_vertices();
  std::vector<int> pending(n);
  for (int v = 0; v < n; ++v) pending[v] = static_cast<int>(out_[v].size());
  std::set<int> ready;
  for (int v = 0; v < n; ++v)
    if (pending[v] == 0) ready.insert(v);
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int a : in_[v]) {
      const int u = arrows_[a].source;
      if (--pending[u] == 0) ready.insert(u);
    }
  }
  return order;
}

std::string Quiver::compact() const {
  std::string s;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (a) s += ',';
    s += std::to_string(arrows_[a].source + 1) + "->" + std::to_string(arrows_[a].target + 1);
  }
  return s;
}

IntMatrix euler_matrix(const Quiver& q) {
  IntMatrix e = IntMatrix::identity(q.num_vertices());
  for (const Arrow& a : q.arrows()) e(a.source, a.target) -= 1;
  return e;
}

namespace {

void check_len(const Quiver& q, const IntVector& v) {
  if (static_cast<int>(v.size()) != q.num_vertices())
    throw InvalidInput("vector length " + std::to_string(v.size()) + " does not match " +
                       std::to_string(q.num_vertices()) + " vertices");
}

// (I - A)^{-1} = I + A + A^2 + ... ; entry (i,j) counts paths i -> j.
IntMatrix path_counts(const Quiver& q) {
  const int n = q.num_vertices();
  IntMatrix adj(n, n);
  for (const Arrow& a : q.arrows()) adj(a.source, a.target) += 1;
  IntMatrix sum = IntMatrix::identity(n);
  IntMatrix power = IntMatrix::identity(n);
  for (int k = 1; k < n; ++k) {
    power = power * adj;
    for (std::size_t t = 0; t < sum.data.size(); ++t) sum.data[t] += power.data[t];
  }
  return sum;
}

}  // namespace

long long euler_form(const Quiver& q, const IntVector& d, const IntVector& e) {
  check_len(q, d);
  check_len(q, e);
  long long s = 0;
  for (int i = 0; i < q.num_vertices(); ++i) s += static_cast<long long>(d[i]) * e[i];
  for (const Arrow& a : q.arrows()) s -= static_cast<long long>(d[a.source]) * e[a.target];
  return s;
}

long long tits_form(const Quiver& q, const IntVector& d) { return euler_form(q, d, d); }

IntMatrix coxeter_matrix(const Quiver& q) {
  const IntMatrix inv = path_counts(q);
  IntMatrix phi = inv * euler_matrix(q).transpose();
  for (auto& x : phi.data) x = -x;
  return phi;
}

IntMatrix inverse_coxeter_matrix(const Quiver& q) {
  const IntMatrix inv_t = path_counts(q).transpose();
  IntMatrix phi = inv_t * euler_matrix(q);
  for (auto& x : phi.data) x = -x;
  return phi;
}

IntVector coxeter(const Quiver& q, const IntVector& d, int power) {
  check_len(q, d);
  if (power == 0) return d;
  const IntMatrix m = power > 0 ? coxeter_matrix(q) : inverse_coxeter_matrix(q);
  IntVector v = d;
  for (int k = 0; k < std::abs(power); ++k) v = m.apply(v);
  return v;
}

IntVector projective_dim(const Quiver& q, int vertex) {
  const IntMatrix paths = path_counts(q);
  IntVector v(q.num_vertices());
  for (int j = 0; j < q.num_vertices(); ++j) v[j] = static_cast<int>(paths(vertex, j));
  return v;
}

IntVector injective_dim(const Quiver& q, int vertex) {
  const IntMatrix paths = path_counts(q);
  IntVector v(q.num_vertices());
  for (int j = 0; j < q.num_vertices(); ++j) v[j] = static_cast<int>(paths(j, vertex));
  return v;
}

IntVector unit_vector(int n, int i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

std::vector<IntVector> positive_roots(const Quiver& q) {
  const int n = q.num_vertices();
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    seen.insert(unit_vector(n, i));
    queue.push_back(unit_vector(n, i));
  }
  while (!queue.empty()) {
    IntVector d = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVector e = d;
      ++e[i];
      if (tits_form(q, e) == 1 && seen.insert(e).second) queue.push_back(e);
    }
  }

  const std::vector<int> order = q.sink_order();
  std::vector<int> rank(n);
  for (int k = 0; k < n; ++k) rank[order[k]] = k;
  std::map<IntVector, int> projective_vertex;
  for (int i = 0; i < n; ++i) projective_vertex[projective_dim(q, i)] = i;
  const IntMatrix phi = coxeter_matrix(q);

  std::vector<std::pair<std::pair<int, int>, IntVector>> keyed;
  for (const IntVector& d : seen) {
    IntVector v = d;
    int steps = 0;
    while (!projective_vertex.count(v)) {
      v = phi.apply(v);
      if (++steps > 2 * static_cast<int>(seen.size()) || !is_nonnegative(v))
        throw InvariantViolation("root " + to_string(d) + " is not preprojective under Phi");
    }
    keyed.push_back({{steps, rank[projective_vertex[v]]}, d});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<IntVector> out;
  for (auto& [key, d] : keyed) out.push_back(d);
  return out;
}

int positive_root_count(const DynkinType& t) {
  const int n = t.rank;
  switch (t.family) {
    case DynkinFamily::A:
      return n * (n + 1) / 2;
    case DynkinFamily::D:
      return n * (n - 1);
    case DynkinFamily::E:
      return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

IntMatrix b_matrix(const Quiver& q) {
  const int n = q.num_vertices();
  IntMatrix b(n, n);
  for (const Arrow& a : q.arrows()) {
    b(a.source, a.target) += 1;
    b(a.target, a.source) -= 1;
  }
  return b;
}

bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector scaled(const IntVector& a, int s) {
  IntVector r(a);
  for (int& x : r) x *= s;
  return r;
}

std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace clusterhall
