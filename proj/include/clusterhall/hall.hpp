#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterhall/engine.hpp"
#include "clusterhall/filtration.hpp"
#include "clusterhall/laurent.hpp"

namespace clusterhall {

// Submodules Y of X with dim Y = e, grouped by (iso type of X/Y, iso type of Y).
std::map<std::pair<IsoType, IsoType>, QPoly> hall_polynomials(const Context& ctx, const IsoType& x,
                                                              const IntVector& e);
// Number of submodules Y of X with Y ~ N and X/Y ~ M.
QPoly hall_polynomial(const Context& ctx, const IsoType& m, const IsoType& n, const IsoType& x);
// Coefficients of b_{e_quotient} * b_{e_sub} at q = 1.
std::map<IsoType, BigInt> b_product(const Context& ctx, const IntVector& e_quotient, const IntVector& e_sub);

struct MultiplicationReport {
  CCObject n, m;
  int ext = 0;
  LaurentPoly lhs, rhs;
  TriangleCount forward;   // Ext^1(N, M)
  TriangleCount backward;  // Ext^1(M, N)
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

MultiplicationReport verify_multiplication(const Engine& engine, const CCObject& n, const CCObject& m,
                                           MiddleTermMode mode = MiddleTermMode::automatic);

struct ElementaryStep {
  CCObject from, to;
  int first = 0;   // U in U -> E -> V -> SU
  int second = 0;  // V
  CCObject middle;
  BigInt c;
  int z_first = 0, z_second = 0;
};

std::vector<ElementaryStep> elementary_degenerations(const Category& cat, const CCObject& x);

enum class Convention { cluster_ext, module_ext };
std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

struct Chain {
  std::vector<ElementaryStep> steps;
  Rational weight;
};

// Memoized sums over degeneration chains.
class ChainSolver {
 public:
  // With exceptional_targets, reach() keeps only exceptional K.
  ChainSolver(const Category& cat, Convention convention, bool exceptional_targets = false);

  Rational ratio(const ElementaryStep& s) const;
  // r(x, K) for every K reached from x, including K = x.
  const std::map<CCObject, Rational>& reach(const CCObject& x);
  Rational r(const CCObject& x, const CCObject& k);
  std::vector<Chain> chains(const CCObject& x, const CCObject& k, std::size_t limit);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const std::vector<ElementaryStep>& steps(const CCObject& x);

  const Category& cat_;
  Convention convention_;
  bool exceptional_targets_;
  std::map<CCObject, std::map<CCObject, Rational>> memo_;
  std::map<CCObject, std::vector<ElementaryStep>> steps_;
  std::uint64_t work_ = 0;
};

Rational r_coefficient(const Category& cat, const CCObject& x, const CCObject& k, Convention convention);

struct Expansion {
  std::map<CCObject, BigInt> coeffs;
  int iterations = 0;
  bool complete = false;  // residual reached zero
};

Expansion expand_in_basis(const Engine& engine, const LaurentPoly& p, const EpsilonForm& eps,
                          int max_iterations = 100'000);
LaurentPoly contract(const Engine& engine, const Expansion& e);

struct HallEntry {
  CCObject k;
  Rational r;
  BigInt expansion;
  bool match = false;
  std::vector<Chain> chains;  // filled for mismatches
};

struct HallMultiplyReport {
  CCObject m, n;
  Convention convention = Convention::module_ext;
  std::vector<HallEntry> entries;
  bool matches = true;
};

HallMultiplyReport hall_multiply(const Engine& engine, const CCObject& m, const CCObject& n,
                                 Convention convention, const EpsilonForm& eps);

struct ConjectureSide {
  Convention convention = Convention::module_ext;
  std::size_t pairs = 0;
  std::size_t negative = 0;
  std::optional<Rational> min_r;
  std::optional<std::pair<CCObject, CCObject>> min_witness;
};

struct ConjectureReport {
  int bound = 0;
  std::size_t objects = 0;
  std::vector<ConjectureSide> sides;
};

ConjectureReport conjecture_64_report(const Engine& engine, int bound);

}  // namespace clusterhall
