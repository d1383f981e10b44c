#include "clusterhall/rep.hpp"

#include <numeric>

#include "clusterhall/error.hpp"

namespace clusterhall {

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

void Rep::validate() const {
  if (!quiver) throw InvalidInput("representation without quiver");
  if (static_cast<int>(dims.size()) != q().num_vertices()) throw InvalidInput("dimension count mismatch");
  if (maps.size() != q().arrows().size()) throw InvalidInput("arrow map count mismatch");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const Arrow& ar = q().arrows()[a];
    if (maps[a].rows() != dims[ar.target] || maps[a].cols() != dims[ar.source] || maps[a].prime() != p)
      throw InvalidInput("arrow matrix shape does not match vertex dimensions");
  }
}

namespace {

void check_compatible(const Rep& m, const Rep& n) {
  if (m.p != n.p) throw InvalidInput("representations over different primes");
  if (!(m.q() == n.q())) throw InvalidInput("representations over different quivers");
}

void add_to(FMatrix& m, int r, int c, long long v) { m.set(r, c, static_cast<long long>(m(r, c)) + v); }

// Linear system whose kernel is Hom(M, N); variables f_i[r][c] at off[i] + r * dim M_i + c.
FMatrix hom_equations(const Rep& m, const Rep& n, std::vector<int>& off) {
  const int nv = m.num_vertices();
  off.assign(nv + 1, 0);
  for (int i = 0; i < nv; ++i) off[i + 1] = off[i] + n.dims[i] * m.dims[i];
  int neq = 0;
  for (const Arrow& a : m.q().arrows()) neq += n.dims[a.target] * m.dims[a.source];
  FMatrix eq(neq, off[nv], m.p);
  int row = 0;
  const auto& arrows = m.q().arrows();
  for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
    const int i = arrows[ai].source, j = arrows[ai].target;
    const FMatrix& ma = m.maps[ai];
    const FMatrix& na = n.maps[ai];
    for (int r = 0; r < n.dims[j]; ++r)
      for (int c = 0; c < m.dims[i]; ++c, ++row) {
        for (int k = 0; k < m.dims[j]; ++k)
          if (ma(k, c)) add_to(eq, row, off[j] + r * m.dims[j] + k, ma(k, c));
        for (int k = 0; k < n.dims[i]; ++k)
          if (na(r, k)) add_to(eq, row, off[i] + k * m.dims[i] + c, -static_cast<long long>(na(r, k)));
      }
  }
  return eq;
}

FMatrix right_inverse(const FMatrix& l) {
  const Echelon e = rref(l);
  if (e.rank() != l.rows()) throw InvariantViolation("right_inverse: rows are dependent");
  const FMatrix a = l.select_columns(e.pivots);
  const FMatrix a_inv = solve_left(a, FMatrix::identity(l.rows(), l.prime()));
  FMatrix r(l.cols(), l.rows(), l.prime());
  for (int t = 0; t < l.rows(); ++t)
    for (int j = 0; j < l.rows(); ++j) r.set(e.pivots[t], j, a_inv(t, j));
  return r;
}

}  // namespace

Rep zero_rep(std::shared_ptr<const Quiver> q, std::uint32_t p) {
  Rep r;
  r.quiver = std::move(q);
  r.p = p;
  r.dims.assign(r.q().num_vertices(), 0);
  for (std::size_t a = 0; a < r.q().arrows().size(); ++a) r.maps.emplace_back(0, 0, p);
  return r;
}

Rep simple_rep(std::shared_ptr<const Quiver> q, int vertex, std::uint32_t p) {
  Rep r = zero_rep(std::move(q), p);
  r.dims[vertex] = 1;
  for (std::size_t a = 0; a < r.maps.size(); ++a) {
    const Arrow& ar = r.q().arrows()[a];
    r.maps[a] = FMatrix(r.dims[ar.target], r.dims[ar.source], p);
  }
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  check_compatible(a, b);
  Rep r;
  r.quiver = a.quiver;
  r.p = a.p;
  r.dims.resize(a.dims.size());
  for (std::size_t i = 0; i < a.dims.size(); ++i) r.dims[i] = a.dims[i] + b.dims[i];
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    FMatrix m(a.maps[k].rows() + b.maps[k].rows(), a.maps[k].cols() + b.maps[k].cols(), a.p);
    m.copy_block(a.maps[k], 0, 0);
    m.copy_block(b.maps[k], a.maps[k].rows(), a.maps[k].cols());
    r.maps.push_back(std::move(m));
  }
  return r;
}

std::vector<Morphism> hom_space(const Rep& m, const Rep& n) {
  check_compatible(m, n);
  std::vector<int> off;
  const FMatrix basis = solve_kernel(hom_equations(m, n, off));
  std::vector<Morphism> out;
  for (int t = 0; t < basis.cols(); ++t) {
    Morphism f;
    for (int i = 0; i < m.num_vertices(); ++i) {
      FMatrix fi(n.dims[i], m.dims[i], m.p);
      for (int r = 0; r < n.dims[i]; ++r)
        for (int c = 0; c < m.dims[i]; ++c) fi.set(r, c, basis(off[i] + r * m.dims[i] + c, t));
      f.push_back(std::move(fi));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Rep& m, const Rep& n) {
  check_compatible(m, n);
  std::vector<int> off;
  const FMatrix eq = hom_equations(m, n, off);
  return eq.cols() - rank(eq);
}

int end_dim(const Rep& m) { return hom_dim(m, m); }

int ext_dim(const Rep& m, const Rep& n) {
  const long long e = hom_dim(m, n) - euler_form(m.q(), m.dims, n.dims);
  if (e < 0) throw InvariantViolation("negative extension dimension");
  return static_cast<int>(e);
}

bool is_morphism(const Morphism& f, const Rep& m, const Rep& n) {
  const auto& arrows = m.q().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (!(f[arrows[a].target] * m.maps[a] == n.maps[a] * f[arrows[a].source])) return false;
  return true;
}

Morphism zero_morphism(const Rep& m, const Rep& n) {
  Morphism f;
  for (int i = 0; i < m.num_vertices(); ++i) f.emplace_back(n.dims[i], m.dims[i], m.p);
  return f;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<std::uint32_t>& coeffs) {
  if (basis.empty()) throw InvalidInput("combine: empty basis");
  Morphism f = basis[0];
  for (auto& fi : f) fi = fi.scaled(coeffs[0]);
  for (std::size_t t = 1; t < basis.size(); ++t)
    if (coeffs[t])
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = f[i] + basis[t][i].scaled(coeffs[t]);
  return f;
}

std::vector<Cochain> ext_cocycles(const Rep& n, const Rep& m) {
  check_compatible(m, n);
  const auto& arrows = m.q().arrows();
  const int nv = m.num_vertices();
  std::vector<int> foff(nv + 1, 0);
  for (int i = 0; i < nv; ++i) foff[i + 1] = foff[i] + m.dims[i] * n.dims[i];
  std::vector<int> goff(arrows.size() + 1, 0);
  for (std::size_t a = 0; a < arrows.size(); ++a)
    goff[a + 1] = goff[a] + m.dims[arrows[a].target] * n.dims[arrows[a].source];
  // coboundary of f (f_i : N_i -> M_i) is M_a f_i - f_j N_a
  FMatrix delta(goff.back(), foff[nv], m.p);
  for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
    const int i = arrows[ai].source, j = arrows[ai].target;
    const FMatrix& ma = m.maps[ai];
    const FMatrix& na = n.maps[ai];
    for (int r = 0; r < m.dims[j]; ++r)
      for (int c = 0; c < n.dims[i]; ++c) {
        const int row = goff[ai] + r * n.dims[i] + c;
        for (int k = 0; k < m.dims[i]; ++k)
          if (ma(r, k)) add_to(delta, row, foff[i] + k * n.dims[i] + c, ma(r, k));
        for (int k = 0; k < n.dims[j]; ++k)
          if (na(k, c)) add_to(delta, row, foff[j] + r * n.dims[j] + k, -static_cast<long long>(na(k, c)));
      }
  }
  const Echelon image = rref(delta.transpose());
  std::vector<char> is_pivot(goff.back(), 0);
  for (int c : image.pivots) is_pivot[c] = 1;
  std::vector<Cochain> out;
  for (int coord = 0; coord < goff.back(); ++coord) {
    if (is_pivot[coord]) continue;
    Cochain g;
    for (std::size_t a = 0; a < arrows.size(); ++a)
      g.emplace_back(m.dims[arrows[a].target], n.dims[arrows[a].source], m.p);
    std::size_t a = 0;
    while (goff[a + 1] <= coord) ++a;
    const int local = coord - goff[a];
    const int cols = n.dims[arrows[a].source];
    g[a].set(local / cols, local % cols, 1);
    out.push_back(std::move(g));
  }
  return out;
}

Cochain combine(const std::vector<Cochain>& basis, const std::vector<std::uint32_t>& coeffs,
                const Rep& n, const Rep& m) {
  Cochain g;
  const auto& arrows = m.q().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    g.emplace_back(m.dims[arrows[a].target], n.dims[arrows[a].source], m.p);
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (coeffs[t])
      for (std::size_t a = 0; a < g.size(); ++a) g[a] = g[a] + basis[t][a].scaled(coeffs[t]);
  return g;
}

Rep extension(const Rep& m, const Rep& n, const Cochain& g) {
  check_compatible(m, n);
  Rep y = direct_sum(m, n);
  for (std::size_t a = 0; a < y.maps.size(); ++a) y.maps[a].copy_block(g[a], 0, m.maps[a].cols());
  return y;
}

Rep subrep(const Rep& m, const std::vector<FMatrix>& basis) {
  Rep r;
  r.quiver = m.quiver;
  r.p = m.p;
  for (const FMatrix& b : basis) r.dims.push_back(b.cols());
  const auto& arrows = m.q().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const FMatrix& ui = basis[arrows[a].source];
    const FMatrix& uj = basis[arrows[a].target];
    r.maps.push_back(solve_left(uj, m.maps[a] * ui));
  }
  return r;
}

Rep quotient(const Rep& m, const std::vector<FMatrix>& basis) {
  Rep r;
  r.quiver = m.quiver;
  r.p = m.p;
  std::vector<FMatrix> proj, lift;
  for (const FMatrix& b : basis) {
    proj.push_back(left_kernel(b));
    lift.push_back(right_inverse(proj.back()));
    r.dims.push_back(proj.back().rows());
  }
  const auto& arrows = m.q().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    r.maps.push_back(proj[arrows[a].target] * m.maps[a] * lift[arrows[a].source]);
  return r;
}

Rep kernel(const Morphism& f, const Rep& m) {
  std::vector<FMatrix> basis;
  for (const FMatrix& fi : f) basis.push_back(solve_kernel(fi));
  return subrep(m, basis);
}

Rep cokernel(const Morphism& f, const Rep& n) {
  std::vector<FMatrix> basis;
  for (const FMatrix& fi : f) basis.push_back(column_basis(fi));
  return quotient(n, basis);
}

Rep image(const Morphism& f, const Rep& n) {
  std::vector<FMatrix> basis;
  for (const FMatrix& fi : f) basis.push_back(column_basis(fi));
  return subrep(n, basis);
}

Rep dual(const Rep& m, std::shared_ptr<const Quiver> opposite) {
  Rep r;
  r.quiver = std::move(opposite);
  r.p = m.p;
  r.dims = m.dims;
  for (const FMatrix& a : m.maps) r.maps.push_back(a.transpose());
  r.validate();
  return r;
}

Rep reflect_at_sink(const Rep& m, int k, std::shared_ptr<const Quiver> reflected) {
  const Quiver& q = m.q();
  if (!q.is_sink(k)) throw InvalidInput("reflect_at_sink: vertex is not a sink");
  FMatrix h(m.dims[k], 0, m.p);
  std::vector<int> offsets;
  for (int a : q.in_arrows(k)) {
    offsets.push_back(h.cols());
    h = hstack(h, m.maps[a]);
  }
  const FMatrix ker = solve_kernel(h);
  Rep r = m;
  r.quiver = std::move(reflected);
  r.dims[k] = ker.cols();
  const auto& in = q.in_arrows(k);
  for (std::size_t t = 0; t < in.size(); ++t) {
    const int src = q.arrows()[in[t]].source;
    r.maps[in[t]] = ker.row_block(offsets[t], m.dims[src]);
  }
  r.validate();
  return r;
}

Rep reflect_at_source(const Rep& m, int k, std::shared_ptr<const Quiver> reflected) {
  const Quiver& q = m.q();
  if (!q.is_source(k)) throw InvalidInput("reflect_at_source: vertex is not a source");
  FMatrix h(0, m.dims[k], m.p);
  std::vector<int> offsets;
  for (int a : q.out_arrows(k)) {
    offsets.push_back(h.rows());
    h = vstack(h, m.maps[a]);
  }
  const FMatrix c = left_kernel(h);
  Rep r = m;
  r.quiver = std::move(reflected);
  r.dims[k] = c.rows();
  const auto& out = q.out_arrows(k);
  for (std::size_t t = 0; t < out.size(); ++t) {
    const int dst = q.arrows()[out[t]].target;
    r.maps[out[t]] = c.columns(offsets[t], m.dims[dst]);
  }
  r.validate();
  return r;
}

Rep build_indecomposable(std::shared_ptr<const Quiver> q, const IntVector& root, std::uint32_t p) {
  const int n = q->num_vertices();
  if (static_cast<int>(root.size()) != n || tits_form(*q, root) != 1 || !is_nonnegative(root))
    throw InvalidInput("not a positive root: " + to_string(root));
  const std::vector<int> order = q->sink_order();
  std::vector<std::shared_ptr<const Quiver>> quivers{q};
  std::vector<int> steps;
  IntVector d = root;
  int k = -1;
  for (int t = 0;; ++t) {
    if (t > 4 * n * n + 8) throw InvariantViolation("reflection sequence did not reach a simple");
    const auto& cur = quivers.back();
    k = order[t % n];
    if (!cur->is_sink(k)) throw InvariantViolation("sink ordering is not admissible");
    if (d == unit_vector(n, k)) break;
    int s = -d[k];
    for (int w : cur->neighbours(k)) s += d[w];
    if (s < 0) throw InvariantViolation("reflection produced a negative dimension");
    d[k] = s;
    quivers.push_back(std::make_shared<const Quiver>(cur->reflected(k)));
    steps.push_back(k);
  }
  Rep m = simple_rep(quivers.back(), k, p);
  for (int s = static_cast<int>(steps.size()) - 1; s >= 0; --s)
    m = reflect_at_source(m, steps[s], quivers[s]);
  if (m.dims != root) throw InvariantViolation("reflection functors produced the wrong dimension vector");
  if (end_dim(m) != 1) throw InvariantViolation("constructed representation is not a brick");
  return m;
}

}  // namespace clusterhall
