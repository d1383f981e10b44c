#include "clusterhall/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace clusterhall {

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json to_json(const Rational& v) {
  namespace mp = boost::multiprecision;
  if (mp::denominator(v) == 1) return to_json(BigInt(mp::numerator(v)));
  return mp::numerator(v).str() + "/" + mp::denominator(v).str();
}

json to_json(const QPoly& p) { return p.to_string(); }

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [exp, c] : p.terms()) out.push_back({{"exp", exp}, {"coef", to_json(c)}});
  return out;
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.source + 1, a.target + 1});
  return {{"type", q.type().label()}, {"arrows", arrows}};
}

json to_json(const Settings& s) {
  return {{"primes", s.primes},
          {"subspace_budget", s.subspace_budget},
          {"point_budget", s.point_budget},
          {"bfs_budget", s.bfs_budget},
          {"chain_budget", s.chain_budget},
          {"search_budget", s.search_budget}};
}

json to_json(const Context& ctx, const IsoType& t) {
  json module = json::object();
  for (int k = 0; k < ctx.num_roots(); ++k)
    if (t.mult[k]) module[to_string(ctx.root(k))] = t.mult[k];
  return {{"module", module}, {"shifted_projectives", json::object()}};
}

json to_json(const Category& cat, const CCObject& x) {
  const Context& ctx = cat.context();
  json module = json::object(), sp = json::object();
  for (int k = 0; k < ctx.num_roots(); ++k)
    if (x.module[k]) module[to_string(ctx.root(k))] = x.module[k];
  for (int i = 0; i < ctx.n(); ++i)
    if (x.shifted[i]) sp[std::to_string(i + 1)] = x.shifted[i];
  return {{"label", cat.describe(x)}, {"module", module}, {"sp", sp}};
}

json to_json(const Category& cat, const TriangleCount& tc) {
  json classes = json::array();
  for (const MiddleTermClass& c : tc.classes)
    classes.push_back({{"middle", to_json(cat, c.middle)},
                       {"count", c.count ? json(c.count->to_string()) : json(nullptr)},
                       {"chi", to_json(c.chi)}});
  return {{"dimension", tc.dimension}, {"method", tc.method}, {"classes", classes}};
}

json to_json(const Category& cat, const MultiplicationReport& r) {
  json out = {{"n", to_json(cat, r.n)}, {"m", to_json(cat, r.m)}, {"ext", r.ext}, {"ok", r.ok()}};
  if (r.ext) {
    out["forward"] = to_json(cat, r.forward);
    out["backward"] = to_json(cat, r.backward);
  }
  out["lhs"] = to_json(r.lhs);
  out["rhs"] = to_json(r.rhs);
  out["failures"] = r.failures;
  return out;
}

json to_json(const Category& cat, const ElementaryStep& s) {
  return {{"from", cat.describe(s.from)},
          {"to", cat.describe(s.to)},
          {"pair", {cat.label(s.first), cat.label(s.second)}},
          {"middle", cat.describe(s.middle)},
          {"c", to_json(s.c)},
          {"z", {s.z_first, s.z_second}}};
}

json to_json(const Category& cat, const HallMultiplyReport& r) {
  json entries = json::array();
  for (const HallEntry& e : r.entries) {
    json entry = {{"k", to_json(cat, e.k)}, {"r", to_json(e.r)}, {"expansion", to_json(e.expansion)}, {"match", e.match}};
    if (!e.match) {
      json chains = json::array();
      for (const Chain& c : e.chains) {
        json steps = json::array();
        for (const ElementaryStep& s : c.steps) steps.push_back(to_json(cat, s));
        chains.push_back({{"weight", to_json(c.weight)}, {"steps", steps}});
      }
      entry["chains"] = chains;
    }
    entries.push_back(entry);
  }
  return {{"m", cat.describe(r.m)},
          {"n", cat.describe(r.n)},
          {"convention", to_string(r.convention)},
          {"matches", r.matches},
          {"entries", entries}};
}

json to_json(const Category& cat, const ConjectureReport& r) {
  json sides = json::array();
  for (const ConjectureSide& s : r.sides) {
    json side = {{"convention", to_string(s.convention)}, {"pairs_checked", s.pairs}, {"negative", s.negative}};
    side["min_r"] = s.min_r ? to_json(*s.min_r) : json(nullptr);
    if (s.min_witness)
      side["min_witness"] = {cat.describe(s.min_witness->first), cat.describe(s.min_witness->second)};
    side["nonnegative"] = s.negative == 0;
    sides.push_back(side);
  }
  return {{"bound", r.bound}, {"objects", r.objects}, {"conventions", sides}};
}

json to_json(const Category& cat, const Expansion& e) {
  json coeffs = json::array();
  for (const auto& [k, c] : e.coeffs) coeffs.push_back({{"object", to_json(cat, k)}, {"coef", to_json(c)}});
  return {{"complete", e.complete}, {"iterations", e.iterations}, {"coefficients", coeffs}};
}

json to_json(const VariablesReport& r) {
  return {{"clusters", r.clusters},
          {"variables", r.variables},
          {"indecomposables", r.indecomposables},
          {"tilting_objects", r.tilting_objects},
          {"variables_match", r.variables_match},
          {"tilting_match", r.tilting_match},
          {"failures", r.failures}};
}

json to_json(const FanReport& r) {
  return {{"samples", r.samples},
          {"unique_cone_hits", r.unique_cone_hits},
          {"boundary_resamples", r.boundary_resamples},
          {"cones", r.cones},
          {"simplicial", r.simplicial},
          {"failures", r.failures}};
}

json to_json(const EpsilonForm& e) { return e.coeffs; }

json to_json(const ToricReport& r) {
  return {{"epsilon", r.eps ? to_json(*r.eps) : json(nullptr)},
          {"lifted_variables", r.lifted_variables},
          {"unitary", r.unitary},
          {"failures", r.failures}};
}

json to_json(const BasisReport& r) {
  return {{"epsilon", r.eps ? to_json(*r.eps) : json(nullptr)},
          {"box", r.box},
          {"objects", r.objects},
          {"failures", r.failures}};
}

namespace {

std::vector<IntVector> node_label(const Seed& s) {
  std::vector<IntVector> label;
  for (int j = 0; j < s.mutable_count(); ++j) label.push_back(denominator(s.cluster[j]));
  std::sort(label.begin(), label.end());
  return label;
}

std::string label_text(const std::vector<IntVector>& label) {
  std::string out;
  for (const IntVector& d : label) out += (out.empty() ? "" : " ") + to_string(d);
  return out;
}

}  // namespace

json graph_json(const ExchangeGraph& g) {
  json nodes = json::array(), links = json::array(), variables = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    nodes.push_back({{"id", i}, {"label", node_label(g.nodes[i])}});
  for (const ExchangeEdge& e : g.edges)
    links.push_back({{"source", e.from}, {"target", e.to}, {"direction", e.direction + 1}});
  for (const LaurentPoly& x : g.variables) variables.push_back(to_json(x));
  return {{"finite", g.finite},
          {"clusters", g.nodes.size()},
          {"variables", g.variables.size()},
          {"nodes", nodes},
          {"links", links},
          {"cluster_variables", variables}};
}

std::string graph_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << label_text(node_label(g.nodes[i])) << "\"];\n";
  for (const ExchangeEdge& e : g.edges)
    out << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.direction + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace clusterhall
