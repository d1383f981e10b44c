#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterhall/engine.hpp"
#include "clusterhall/laurent.hpp"

namespace clusterhall {

// Integer linear form on the first n exponent coordinates.
struct EpsilonForm {
  IntVector coeffs;

  long long operator()(const IntVector& v) const;
};

// eps(B a_i) < 0 for every vertex i.
bool satisfies_hypothesis(const Quiver& q, const EpsilonForm& eps);
// Tries the source/sink sign pattern, then boxes of growing radius up to 16.
std::optional<EpsilonForm> find_epsilon(const Quiver& q, std::uint64_t budget = 50'000'000);

// Total order of the filtration: smaller eps first, then lexicographically
// larger exponent first. The leading term of X_M is x^lambda_M.
bool precedes(const EpsilonForm& eps, const IntVector& a, const IntVector& b);

struct Leading {
  IntVector exponent;
  BigInt coefficient;
  int terms_in_degree = 0;  // support points sharing the leading eps-degree
};

Leading graded_leading(const LaurentPoly& p, const EpsilonForm& eps);

struct FanReport {
  int samples = 0;
  int unique_cone_hits = 0;
  int boundary_resamples = 0;
  int cones = 0;
  bool simplicial = true;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

FanReport fan_check(const Engine& engine, int samples, std::uint64_t seed);

struct ToricReport {
  int lifted_variables = 0;
  int unitary = 0;
  std::optional<EpsilonForm> eps;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ToricReport toric_leading_check(const Engine& engine);

struct BasisReport {
  int box = 0;
  int objects = 0;
  std::optional<EpsilonForm> eps;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Exceptional objects with |lambda|_inf <= box: lambda is injective on them and
// each character has leading term x^lambda with coefficient 1.
BasisReport basis_check(const Engine& engine, int box);

}  // namespace clusterhall
