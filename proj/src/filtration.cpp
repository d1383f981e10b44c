#include "clusterhall/filtration.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <thread>

#include "clusterhall/error.hpp"
#include "clusterhall/mutation.hpp"

namespace clusterhall {

long long EpsilonForm::operator()(const IntVector& v) const {
  if (v.size() < coeffs.size()) throw InvalidInput("exponent shorter than the epsilon form");
  long long s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += static_cast<long long>(coeffs[i]) * v[i];
  return s;
}

bool satisfies_hypothesis(const Quiver& q, const EpsilonForm& eps) {
  const int n = q.num_vertices();
  if (static_cast<int>(eps.coeffs.size()) != n) return false;
  const IntMatrix b = b_matrix(q);
  for (int i = 0; i < n; ++i)
    if (eps(b.apply(unit_vector(n, i))) >= 0) return false;
  return true;
}

std::optional<EpsilonForm> find_epsilon(const Quiver& q, std::uint64_t budget) {
  const int n = q.num_vertices();
  bool alternating = true;
  for (int v = 0; v < n; ++v) alternating = alternating && (q.is_source(v) || q.is_sink(v));
  if (alternating) {
    EpsilonForm eps{IntVector(n)};
    for (int v = 0; v < n; ++v) eps.coeffs[v] = q.is_source(v) ? -1 : 1;
    if (satisfies_hypothesis(q, eps)) return eps;
  }
  const IntMatrix b = b_matrix(q);
  // The constraint at vertex i involves only its neighbours; check it as soon
  // as they are all assigned.
  std::vector<int> ready_at(n, 0);
  for (int i = 0; i < n; ++i) {
    int last = 0;
    for (int j : q.neighbours(i)) last = std::max(last, j);
    ready_at[i] = last;
  }
  std::vector<std::vector<int>> checks(n);
  for (int i = 0; i < n; ++i) checks[ready_at[i]].push_back(i);
  std::uint64_t visited = 0;
  for (int radius = 1; radius <= 16; ++radius) {
    IntVector e(n, 0);
    std::function<bool(int)> assign = [&](int k) {
      if (k == n) return true;
      for (int v = -radius; v <= radius; ++v) {
        if (++visited > budget) return false;
        e[k] = v;
        bool ok = true;
        for (int i : checks[k]) {
          long long s = 0;
          for (int j = 0; j < n; ++j) s += b(j, i) * e[j];
          if (s >= 0) {
            ok = false;
            break;
          }
        }
        if (ok && assign(k + 1)) return true;
      }
      e[k] = 0;
      return false;
    };
    if (assign(0)) return EpsilonForm{e};
    if (visited > budget) return std::nullopt;
  }
  return std::nullopt;
}

bool precedes(const EpsilonForm& eps, const IntVector& a, const IntVector& b) {
  const long long ea = eps(a), eb = eps(b);
  if (ea != eb) return ea < eb;
  return a > b;
}

Leading graded_leading(const LaurentPoly& p, const EpsilonForm& eps) {
  if (p.is_zero()) throw InvalidInput("leading term of the zero polynomial");
  Leading best;
  bool first = true;
  long long degree = 0;
  for (const auto& [exp, c] : p.terms()) {
    if (first || precedes(eps, exp, best.exponent)) {
      best.exponent = exp;
      best.coefficient = c;
      degree = eps(exp);
      first = false;
    }
  }
  for (const auto& [exp, c] : p.terms())
    if (eps(exp) == degree) ++best.terms_in_degree;
  return best;
}

namespace {

// Coordinates of point in the basis given by cols, or empty if singular.
std::optional<std::vector<Rational>> solve_rational(const std::vector<IntVector>& cols, const IntVector& point) {
  const int n = static_cast<int>(point.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n] = point[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[c], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace

FanReport fan_check(const Engine& engine, int samples, std::uint64_t seed) {
  FanReport rep;
  const Category& cat = engine.category();
  const int n = engine.n();
  std::vector<std::vector<IntVector>> cones;
  for (const CCObject& t : cat.tilting_objects()) {
    std::vector<IntVector> cols;
    for (auto [idx, mult] : cat.summands(t)) cols.push_back(cat.lambda(cat.indecomposable(idx)));
    if (!solve_rational(cols, IntVector(n, 0))) {
      rep.simplicial = false;
      rep.failures.push_back("cone of " + cat.describe(t) + " is not simplicial");
    }
    cones.push_back(std::move(cols));
  }
  rep.cones = static_cast<int>(cones.size());
  rep.samples = samples;
  if (!rep.simplicial) return rep;
  if (static_cast<std::uint64_t>(samples) * cones.size() > engine.context().settings().search_budget)
    throw BudgetExceeded("fan check exceeds the search budget");

  struct Outcome {
    int hits = 0;
    int resamples = 0;
  };
  auto run = [&](int s) {
    Outcome out;
    for (int attempt = 0;; ++attempt) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(attempt)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<int> coord(-1'000'000, 1'000'000);
      IntVector point(n);
      for (int& x : point) x = coord(rng);
      bool boundary = false;
      int hits = 0;
      for (const auto& cols : cones) {
        const auto bary = *solve_rational(cols, point);
        if (std::any_of(bary.begin(), bary.end(), [](const Rational& r) { return r < 0; })) continue;
        if (std::any_of(bary.begin(), bary.end(), [](const Rational& r) { return r == 0; })) boundary = true;
        ++hits;
      }
      if (boundary) {
        ++out.resamples;
        if (attempt > 1000) throw InvariantViolation("fan check could not avoid cone boundaries");
        continue;
      }
      out.hits = hits;
      return out;
    }
  };

  const int workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<std::vector<Outcome>>> parts;
  for (int w = 0; w < workers; ++w)
    parts.push_back(std::async(std::launch::async, [&, w] {
      std::vector<Outcome> res;
      for (int s = w; s < samples; s += workers) res.push_back(run(s));
      return res;
    }));
  std::vector<Outcome> all(samples);
  for (int w = 0; w < workers; ++w) {
    auto res = parts[w].get();
    for (std::size_t k = 0; k < res.size(); ++k) all[w + k * workers] = res[k];
  }
  for (int s = 0; s < samples; ++s) {
    rep.boundary_resamples += all[s].resamples;
    if (all[s].hits == 1)
      ++rep.unique_cone_hits;
    else
      rep.failures.push_back("sample " + std::to_string(s) + " lies in " + std::to_string(all[s].hits) + " cones");
  }
  return rep;
}

ToricReport toric_leading_check(const Engine& engine) {
  ToricReport rep;
  const Quiver& q = engine.quiver();
  const int n = q.num_vertices();
  rep.eps = find_epsilon(q, engine.context().settings().search_budget);
  if (!rep.eps) {
    rep.failures.push_back("no epsilon form for this orientation");
    return rep;
  }
  const std::size_t budget = engine.context().settings().bfs_budget;
  const ExchangeGraph lifted = exchange_graph(principal_seed(q), budget);
  const ExchangeGraph plain = exchange_graph(initial_seed(q), budget);
  if (!lifted.finite || !plain.finite) {
    rep.failures.push_back("exchange graph not finite within budget");
    return rep;
  }
  std::set<LaurentPoly> variables = lifted.variables;
  for (const LaurentPoly& frozen : std::vector<LaurentPoly>(lifted.nodes.front().cluster.begin() + n,
                                                            lifted.nodes.front().cluster.end()))
    variables.insert(frozen);
  std::set<LaurentPoly> projected;
  for (const LaurentPoly& x : variables) {
    ++rep.lifted_variables;
    const Leading lead = graded_leading(x, *rep.eps);
    if (lead.terms_in_degree == 1 && lead.coefficient == 1)
      ++rep.unitary;
    else
      rep.failures.push_back("lifted variable " + x.to_string() + " has a non-unitary leading term");
    const LaurentPoly px = x.specialize_tail(n);
    if (px == LaurentPoly::constant(px.nvars(), 1)) continue;
    projected.insert(px);
    const Leading plead = graded_leading(px, *rep.eps);
    if (plead.exponent != IntVector(lead.exponent.begin(), lead.exponent.begin() + n))
      rep.failures.push_back("projection of " + x.to_string() + " changes the leading exponent");
  }
  if (projected != plain.variables)
    rep.failures.push_back("projected lifted variables differ from the coefficient-free variables");
  return rep;
}

BasisReport basis_check(const Engine& engine, int box) {
  BasisReport rep;
  rep.box = box;
  const Category& cat = engine.category();
  const int n = engine.n();
  rep.eps = find_epsilon(engine.quiver(), engine.context().settings().search_budget);
  if (!rep.eps) {
    rep.failures.push_back("no epsilon form for this orientation");
    return rep;
  }
  std::set<CCObject> objects;
  IntVector v(n, -box);
  while (true) {
    try {
      const CCObject x = cat.exceptional_from_lambda(v);
      if (!cat.is_exceptional(x)) rep.failures.push_back("object for lambda " + to_string(v) + " is not exceptional");
      if (!objects.insert(x).second) rep.failures.push_back("lambda is not injective at " + to_string(v));
      const Leading lead = graded_leading(engine.characters().x_of(x), *rep.eps);
      if (lead.exponent != v || lead.coefficient != 1 || lead.terms_in_degree != 1)
        rep.failures.push_back("character of " + cat.describe(x) + " does not lead with x^" + to_string(v));
    } catch (const InvariantViolation& e) {
      rep.failures.push_back(e.what());
    }
    ++rep.objects;
    int k = 0;
    while (k < n && v[k] == box) v[k++] = -box;
    if (k == n) break;
    ++v[k];
  }
  return rep;
}

}  // namespace clusterhall
