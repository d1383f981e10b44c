#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clusterhall/error.hpp"
#include "clusterhall/filtration.hpp"
#include "clusterhall/grassmannian.hpp"
#include "clusterhall/hall.hpp"
#include "clusterhall/kernels.hpp"
#include "clusterhall/mutation.hpp"
#include "clusterhall/objspec.hpp"
#include "clusterhall/serialize.hpp"

using namespace clusterhall;

namespace {

struct RunConfig {
  std::string type = "A2";
  std::string arrows;
  std::string orientation = "linear";
  Settings settings;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string simd = "auto";
};

struct Outcome {
  json result;
  std::vector<std::string> failures;
  std::optional<std::string> text;  // replaces the JSON artifact
  int budget_exit = 0;
};

std::vector<std::uint32_t> parse_primes(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw InvalidInput("bad prime list '" + s + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty prime list");
  return out;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config file is not valid JSON: ") + e.what());
  }
  try {
    if (j.contains("type")) cfg.type = j["type"].get<std::string>();
    if (j.contains("orientation")) cfg.orientation = j["orientation"].get<std::string>();
    if (j.contains("arrows")) {
      if (j["arrows"].is_string()) {
        cfg.arrows = j["arrows"].get<std::string>();
      } else {
        std::string compact;
        for (const auto& a : j["arrows"]) {
          if (!compact.empty()) compact += ",";
          compact += std::to_string(a.at(0).get<int>()) + "->" + std::to_string(a.at(1).get<int>());
        }
        cfg.arrows = compact;
      }
    }
    if (j.contains("primes")) cfg.settings.primes = j["primes"].get<std::vector<std::uint32_t>>();
    const json& b = j.contains("budgets") ? j["budgets"] : j;
    if (b.contains("subspace_budget")) cfg.settings.subspace_budget = b["subspace_budget"].get<std::uint64_t>();
    if (b.contains("point_budget")) cfg.settings.point_budget = b["point_budget"].get<std::uint64_t>();
    if (b.contains("bfs_budget")) cfg.settings.bfs_budget = b["bfs_budget"].get<std::size_t>();
    if (b.contains("chain_budget")) cfg.settings.chain_budget = b["chain_budget"].get<std::size_t>();
    if (b.contains("search_budget")) cfg.settings.search_budget = b["search_budget"].get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("simd")) cfg.simd = j["simd"].get<std::string>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad config field: ") + e.what());
  }
}

void validate(const RunConfig& cfg) {
  const Settings& s = cfg.settings;
  if (!s.subspace_budget || !s.point_budget || !s.bfs_budget || !s.chain_budget || !s.search_budget)
    throw InvalidInput("budgets must be positive");
  if (cfg.format != "json" && cfg.format != "dot") throw InvalidInput("format must be json or dot");
  if (cfg.orientation != "linear" && cfg.orientation != "alternating")
    throw InvalidInput("orientation must be linear or alternating");
}

Quiver build_quiver(const RunConfig& cfg) {
  if (!cfg.arrows.empty()) return Quiver::build(cfg.type, cfg.arrows);
  return Quiver::preset(cfg.type, cfg.orientation == "alternating" ? Orientation::alternating : Orientation::linear);
}

void select_kernels(const std::string& simd) {
  if (simd == "auto") return;
  if (simd == "scalar") return kernels::select(kernels::Isa::scalar);
  if (simd == "avx2") return kernels::select(kernels::Isa::avx2);
  if (simd == "neon") return kernels::select(kernels::Isa::neon);
  throw InvalidInput("simd must be auto, scalar, avx2 or neon");
}

EpsilonForm require_epsilon(const Engine& engine) {
  auto eps = find_epsilon(engine.quiver(), engine.context().settings().search_budget);
  if (!eps) throw InvalidInput("no epsilon form exists for this orientation; try --orientation alternating");
  return *eps;
}

json root_entry(const Engine& engine, int k) {
  const Context& ctx = engine.context();
  json e = {{"index", k + 1}, {"dim", ctx.root(k)}};
  if (ctx.is_projective(k)) e["projective"] = ctx.projective_vertex(k) + 1;
  if (ctx.is_injective(k)) e["injective"] = ctx.injective_vertex(k) + 1;
  return e;
}

Outcome cmd_roots(const Engine& engine) {
  const Context& ctx = engine.context();
  Outcome o;
  json roots = json::array();
  for (int k = 0; k < ctx.num_roots(); ++k) roots.push_back(root_entry(engine, k));
  o.result = {{"count", ctx.num_roots()}, {"roots", roots}};
  if (ctx.num_roots() != positive_root_count(ctx.quiver().type()))
    o.failures.push_back("root count differs from the closed formula");
  return o;
}

Outcome cmd_indecomposables(const Engine& engine) {
  const Category& cat = engine.category();
  Outcome o;
  json list = json::array();
  for (int idx = 0; idx < cat.num_indecomposables(); ++idx) {
    const CCObject x = cat.indecomposable(idx);
    list.push_back({{"label", cat.label(idx)},
                    {"dim", engine.context().dim(x.h0())},
                    {"lambda", cat.lambda(x)},
                    {"shift", cat.label(cat.shift(idx))},
                    {"x", to_json(engine.characters().x_indecomposable(idx))}});
  }
  o.result = {{"count", cat.num_indecomposables()}, {"indecomposables", list}};
  return o;
}

Outcome cmd_cluster_var(const Engine& engine, const std::string& spec) {
  const Category& cat = engine.category();
  const CCObject x = parse_object(cat, spec);
  const LaurentPoly p = engine.characters().x_of(x);
  Outcome o;
  o.result = {{"object", to_json(cat, x)},
              {"exceptional", cat.is_exceptional(x)},
              {"lambda", cat.lambda(x)},
              {"denominator", denominator(p)},
              {"x", to_json(p)},
              {"text", p.to_string()}};
  return o;
}

Outcome cmd_mutate_bfs(const Engine& engine, const RunConfig& cfg) {
  const ExchangeGraph g = exchange_graph(initial_seed(engine.quiver()), engine.context().settings().bfs_budget);
  Outcome o;
  o.result = graph_json(g);
  if (!g.finite) {
    o.failures.push_back("not finite within budget");
    o.budget_exit = 3;
  }
  if (cfg.format == "dot") o.text = graph_dot(g);
  return o;
}

Outcome cmd_verify_mult(const Engine& engine, const std::string& pairs, int max_mult) {
  const Category& cat = engine.category();
  std::vector<std::pair<CCObject, CCObject>> todo;
  if (pairs == "all") {
    if (max_mult < 1) throw InvalidInput("--max-mult must be at least 1");
    std::vector<CCObject> objects;
    for (int idx = 0; idx < cat.num_indecomposables(); ++idx)
      for (int k = 1; k <= max_mult; ++k) objects.push_back(cat.indecomposable(idx).times(k));
    for (const CCObject& n : objects)
      for (const CCObject& m : objects) todo.emplace_back(n, m);
  } else {
    const auto objs = parse_object_list(cat, pairs);
    if (objs.size() != 2) throw InvalidInput("--pairs takes 'all' or 'N;M'");
    todo.emplace_back(objs[0], objs[1]);
  }
  Outcome o;
  json reports = json::array();
  int nonzero = 0;
  for (const auto& [n, m] : todo) {
    const MultiplicationReport r = verify_multiplication(engine, n, m);
    if (r.ext) ++nonzero;
    for (const std::string& f : r.failures) o.failures.push_back(cat.describe(n) + " ; " + cat.describe(m) + ": " + f);
    if (r.ext || pairs != "all") reports.push_back(to_json(cat, r));
  }
  o.result = {{"pairs", todo.size()}, {"pairs_with_ext", nonzero}, {"reports", reports}};
  return o;
}

Outcome cmd_verify_denominators(const Engine& engine) {
  const Context& ctx = engine.context();
  const Category& cat = engine.category();
  Outcome o;
  json rows = json::array();
  for (int idx = 0; idx < cat.num_indecomposables(); ++idx) {
    const IntVector expected = ctx.dim(cat.indecomposable(idx).h0());
    const IntVector got = denominator(engine.characters().x_indecomposable(idx));
    rows.push_back({{"label", cat.label(idx)}, {"denominator", got}, {"ok", got == expected}});
    if (got != expected) o.failures.push_back("denominator of " + cat.label(idx) + " is " + to_string(got));
  }
  o.result = {{"checked", rows.size()}, {"objects", rows}};
  return o;
}

Outcome cmd_verify_positivity(const Engine& engine) {
  const Context& ctx = engine.context();
  const Category& cat = engine.category();
  const Characters& chars = engine.characters();
  Outcome o;
  std::size_t grassmannians = 0, characters = 0;
  auto check_poly = [&](const LaurentPoly& p, const std::string& what) {
    ++characters;
    for (const auto& [e, c] : p.terms())
      if (c < 0) o.failures.push_back("negative coefficient in X of " + what);
  };
  for (int k = 0; k < ctx.num_roots(); ++k) {
    try {
      for (const GrassmannEntry& g : chars.grassmannians(k)) {
        ++grassmannians;
        if (g.chi <= 0) o.failures.push_back("chi(Gr_" + to_string(g.e) + "(" + cat.label(k) + ")) = " + g.chi.str());
      }
    } catch (const InvariantViolation& e) {
      o.failures.push_back(cat.label(k) + ": " + e.what());
    }
    check_poly(chars.x_indecomposable(k), cat.label(k));
  }
  for (const CCObject& t : cat.tilting_objects()) check_poly(chars.x_of(t), cat.describe(t));
  o.result = {{"grassmannians", grassmannians}, {"characters", characters}};
  return o;
}

Outcome cmd_tilting(const Engine& engine) {
  const Category& cat = engine.category();
  Outcome o;
  json list = json::array();
  const auto tilting = cat.tilting_objects();
  for (const CCObject& t : tilting) list.push_back(cat.describe(t));
  const VariablesReport v = variables_vs_objects(engine);
  o.result = {{"count", tilting.size()}, {"tilting_objects", list}, {"clusters", to_json(v)}};
  o.failures = v.failures;
  return o;
}

Outcome cmd_fan(const Engine& engine, const RunConfig& cfg, int samples) {
  const FanReport r = fan_check(engine, samples, cfg.seed);
  return {to_json(r), r.failures, std::nullopt};
}

Outcome cmd_basis(const Engine& engine, int box) {
  const BasisReport r = basis_check(engine, box);
  return {to_json(r), r.failures, std::nullopt};
}

Outcome cmd_expand(const Engine& engine, const std::string& spec) {
  const Category& cat = engine.category();
  const EpsilonForm eps = require_epsilon(engine);
  LaurentPoly p = LaurentPoly::constant(engine.n(), 1);
  json factors = json::array();
  for (const CCObject& x : parse_object_list(cat, spec)) {
    p = p * engine.characters().x_of(x);
    factors.push_back(cat.describe(x));
  }
  const Expansion e = expand_in_basis(engine, p, eps);
  Outcome o;
  o.result = {{"factors", factors}, {"epsilon", to_json(eps)}, {"expansion", to_json(cat, e)}};
  if (!e.complete) o.failures.push_back("not in span: expansion did not terminate");
  else if (contract(engine, e) != p) o.failures.push_back("contraction does not reproduce the input");
  return o;
}

IsoType module_only(const Category& cat, const std::string& spec) {
  const CCObject x = parse_object(cat, spec);
  for (int s : x.shifted)
    if (s) throw InvalidInput("Hall polynomials take modules, not shifted projectives: '" + spec + "'");
  return x.h0();
}

Outcome cmd_hall_poly(const Engine& engine, const std::string& m, const std::string& n, const std::string& x) {
  const Context& ctx = engine.context();
  const Category& cat = engine.category();
  const IsoType tm = module_only(cat, m), tn = module_only(cat, n), tx = module_only(cat, x);
  const QPoly poly = hall_polynomial(ctx, tm, tn, tx);
  Outcome o;
  o.result = {{"M", to_json(ctx, tm)}, {"N", to_json(ctx, tn)}, {"X", to_json(ctx, tx)}, {"poly", to_json(poly)},
              {"at_1", to_json(poly.eval(1))}};
  return o;
}

Outcome cmd_hall_mult(const Engine& engine, const std::string& m, const std::string& n, const std::string& conv) {
  const Category& cat = engine.category();
  const EpsilonForm eps = require_epsilon(engine);
  const CCObject om = parse_object(cat, m), on = parse_object(cat, n);
  std::vector<Convention> conventions;
  if (conv == "both")
    conventions = {Convention::module_ext, Convention::cluster_ext};
  else
    conventions = {parse_convention(conv)};
  Outcome o;
  json reports = json::array();
  for (Convention c : conventions) reports.push_back(to_json(cat, hall_multiply(engine, om, on, c, eps)));
  o.result = {{"epsilon", to_json(eps)}, {"reports", reports}};
  return o;
}

Outcome cmd_toric(const Engine& engine) {
  const ToricReport r = toric_leading_check(engine);
  return {to_json(r), r.failures, std::nullopt};
}

Outcome cmd_conjecture(const Engine& engine, int bound) {
  const ConjectureReport r = conjecture_64_report(engine, bound);
  return {to_json(engine.category(), r), {}, std::nullopt};
}

void emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + cfg.out);
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cluster-category computations for Dynkin quivers"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string config_path, primes;
  app.add_option("--config", config_path, "JSON run configuration");
  auto* o_type = app.add_option("--type", flags.type, "Dynkin type, A1..A8, D4..D6, E6..E8");
  auto* o_arrows = app.add_option("--arrows", flags.arrows, "arrows as 1->2,3->2");
  auto* o_orient = app.add_option("--orientation", flags.orientation, "linear or alternating preset");
  auto* o_primes = app.add_option("--primes", primes, "comma separated primes, at most 64");
  auto* o_sub = app.add_option("--subspace-budget", flags.settings.subspace_budget);
  auto* o_pt = app.add_option("--point-budget", flags.settings.point_budget);
  auto* o_bfs = app.add_option("--bfs-budget", flags.settings.bfs_budget);
  auto* o_chain = app.add_option("--chain-budget", flags.settings.chain_budget);
  auto* o_search = app.add_option("--search-budget", flags.settings.search_budget);
  auto* o_seed = app.add_option("--seed", flags.seed);
  auto* o_out = app.add_option("--out", flags.out, "write the artifact here instead of stdout");
  auto* o_format = app.add_option("--format", flags.format, "json or dot");
  auto* o_simd = app.add_option("--simd", flags.simd, "auto, scalar, avx2 or neon");

  std::string object, pairs = "all", product, hm, hn, hx, convention = "both";
  int max_mult = 2, box = 3, samples = 200, bound = 2;

  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : std::vector<std::pair<const char*, const char*>>{
           {"roots", "positive roots in Hom order"},
           {"indecomposables", "indecomposable objects with dimension vectors and shifts"},
           {"mutate-bfs", "exchange graph from the initial seed"},
           {"verify-denominators", "denominator vectors of module characters"},
           {"verify-positivity", "signs of character coefficients and Grassmannian Euler characteristics"},
           {"tilting", "tilting objects"},
           {"toric-check", "leading terms of cluster variables with principal coefficients"},
           {"cluster-var", "character of one object"},
           {"verify-mult", "multiplication identity for pairs of objects"},
           {"fan-check", "random points against the lambda cones of tilting objects"},
           {"basis", "lambda vectors and leading terms of exceptional objects in a box"},
           {"expand", "expansion of a product of characters in the exceptional basis"},
           {"hall-poly", "Hall polynomial counting submodules N of X with quotient M"},
           {"hall-mult", "degeneration-chain coefficients against the basis expansion"},
           {"conjecture-6.4", "signs of degeneration-chain coefficients over small objects"}})
    sub[name] = app.add_subcommand(name, help);
  sub["cluster-var"]->add_option("object", object)->required();
  sub["verify-mult"]->add_option("--pairs", pairs, "all or N;M");
  sub["verify-mult"]->add_option("--max-mult", max_mult, "largest multiple of an indecomposable in --pairs all");
  sub["fan-check"]->add_option("--samples", samples);
  sub["basis"]->add_option("--box", box);
  sub["expand"]->add_option("product", product, "objects separated by ';'")->required();
  sub["hall-poly"]->add_option("M", hm)->required();
  sub["hall-poly"]->add_option("N", hn)->required();
  sub["hall-poly"]->add_option("X", hx)->required();
  sub["hall-mult"]->add_option("M", hm)->required();
  sub["hall-mult"]->add_option("N", hn)->required();
  sub["hall-mult"]->add_option("--convention", convention, "module_ext, cluster_ext or both");
  sub["conjecture-6.4"]->add_option("--bound", bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (auto& [name, s] : sub)
    if (s->parsed()) command = name;

  try {
    RunConfig cfg;
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (o_type->count()) cfg.type = flags.type;
    if (o_arrows->count()) cfg.arrows = flags.arrows;
    if (o_orient->count()) {
      cfg.orientation = flags.orientation;
      if (!o_arrows->count()) cfg.arrows.clear();
    }
    if (o_primes->count()) cfg.settings.primes = parse_primes(primes);
    if (o_sub->count()) cfg.settings.subspace_budget = flags.settings.subspace_budget;
    if (o_pt->count()) cfg.settings.point_budget = flags.settings.point_budget;
    if (o_bfs->count()) cfg.settings.bfs_budget = flags.settings.bfs_budget;
    if (o_chain->count()) cfg.settings.chain_budget = flags.settings.chain_budget;
    if (o_search->count()) cfg.settings.search_budget = flags.settings.search_budget;
    if (o_seed->count()) cfg.seed = flags.seed;
    if (o_out->count()) cfg.out = flags.out;
    if (o_format->count()) cfg.format = flags.format;
    if (o_simd->count()) cfg.simd = flags.simd;
    validate(cfg);
    select_kernels(cfg.simd);

    const Engine engine(build_quiver(cfg), cfg.settings);
    Outcome out;
    if (command == "roots") out = cmd_roots(engine);
    else if (command == "indecomposables") out = cmd_indecomposables(engine);
    else if (command == "cluster-var") out = cmd_cluster_var(engine, object);
    else if (command == "mutate-bfs") out = cmd_mutate_bfs(engine, cfg);
    else if (command == "verify-mult") out = cmd_verify_mult(engine, pairs, max_mult);
    else if (command == "verify-denominators") out = cmd_verify_denominators(engine);
    else if (command == "verify-positivity") out = cmd_verify_positivity(engine);
    else if (command == "tilting") out = cmd_tilting(engine);
    else if (command == "fan-check") out = cmd_fan(engine, cfg, samples);
    else if (command == "basis") out = cmd_basis(engine, box);
    else if (command == "expand") out = cmd_expand(engine, product);
    else if (command == "hall-poly") out = cmd_hall_poly(engine, hm, hn, hx);
    else if (command == "hall-mult") out = cmd_hall_mult(engine, hm, hn, convention);
    else if (command == "toric-check") out = cmd_toric(engine);
    else if (command == "conjecture-6.4") out = cmd_conjecture(engine, bound);

    if (out.text) {
      emit(cfg, *out.text);
    } else {
      json report = {{"command", command},
                     {"config",
                      {{"quiver", to_json(engine.quiver())}, {"settings", to_json(cfg.settings)}, {"seed", cfg.seed}}},
                     {"context_hash", engine.context().content_hash()},
                     {"ok", out.failures.empty()},
                     {"failures", out.failures},
                     {"result", out.result}};
      emit(cfg, report.dump(2) + "\n");
    }
    if (out.budget_exit) return out.budget_exit;
    return out.failures.empty() ? 0 : 1;
  } catch (const InvalidInput& e) {
    std::cerr << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << json{{"error", "budget_exceeded"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "assertion_failed"}, {"failures", {e.what()}}}.dump() << "\n";
    return 1;
  }
}
