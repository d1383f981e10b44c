#pragma once

#include <set>
#include <string>
#include <vector>

#include "clusterhall/engine.hpp"
#include "clusterhall/laurent.hpp"

namespace clusterhall {

// Cluster of m variables (the last m - n frozen) and an m x n exchange matrix.
struct Seed {
  std::vector<LaurentPoly> cluster;
  IntMatrix matrix;

  int mutable_count() const { return matrix.cols; }
  // Sorted mutable part of the cluster.
  std::vector<LaurentPoly> key() const;
};

Seed initial_seed(const Quiver& q);
// Principal coefficients: matrix [B; I], 2n variables.
Seed principal_seed(const Quiver& q);

IntMatrix mutate_matrix(const IntMatrix& b, int j);
// j is 0-based.
Seed mutate(const Seed& s, int j);

struct ExchangeEdge {
  int from = 0;
  int to = 0;
  int direction = 0;
};

struct ExchangeGraph {
  std::vector<Seed> nodes;
  std::vector<ExchangeEdge> edges;
  std::set<LaurentPoly> variables;  // mutable cluster variables
  bool finite = true;
};

ExchangeGraph exchange_graph(const Seed& start, std::size_t budget);

struct VariablesReport {
  int clusters = 0;
  int variables = 0;
  int indecomposables = 0;
  int tilting_objects = 0;
  bool variables_match = false;
  bool tilting_match = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Cluster variables versus characters of indecomposables, clusters versus
// tilting objects.
VariablesReport variables_vs_objects(const Engine& engine);

}  // namespace clusterhall
