#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clusterhall/quiver.hpp"
#include "clusterhall/rep.hpp"

namespace clusterhall {

struct Settings {
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  // Subspaces visited by one submodule enumeration at one prime.
  std::uint64_t subspace_budget = 20'000'000;
  // Projective points visited by one extension-class count, over all primes.
  std::uint64_t point_budget = 400'000;
  // Seeds visited by an exchange-graph search.
  std::size_t bfs_budget = 200'000;
  // Objects memoized by one degeneration-chain computation.
  std::size_t chain_budget = 200'000;
  // Nodes visited by combinatorial searches (cliques, iso types, epsilon forms).
  std::uint64_t search_budget = 50'000'000;
};

// Isomorphism type of a module: multiplicity per positive root index.
struct IsoType {
  std::vector<int> mult;

  static IsoType zero(int num_roots) { return {std::vector<int>(num_roots, 0)}; }
  static IsoType single(int num_roots, int root, int m = 1) {
    IsoType t = zero(num_roots);
    t.mult[root] = m;
    return t;
  }
  bool empty() const;
  int summands() const;  // with multiplicity
  IsoType operator+(const IsoType& o) const;
  friend auto operator<=>(const IsoType&, const IsoType&) = default;
};

// Per-quiver data: roots in Hom order, explicit indecomposables per prime,
// Hom and Ext dimension tables between indecomposables.
class Context {
 public:
  explicit Context(Quiver q, Settings s = {});
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const Quiver& quiver() const { return *quiver_; }
  std::shared_ptr<const Quiver> quiver_ptr() const { return quiver_; }
  const Settings& settings() const { return settings_; }
  int n() const { return quiver_->num_vertices(); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const std::vector<IntVector>& roots() const { return roots_; }
  const IntVector& root(int k) const { return roots_.at(k); }
  std::optional<int> find_root(const IntVector& d) const;
  int root_index(const IntVector& d) const;  // throws if not a root

  int projective(int vertex) const { return projective_[vertex]; }
  int injective(int vertex) const { return injective_[vertex]; }
  bool is_projective(int k) const { return projective_vertex_[k] >= 0; }
  bool is_injective(int k) const { return injective_vertex_[k] >= 0; }
  int projective_vertex(int k) const { return projective_vertex_[k]; }
  int injective_vertex(int k) const { return injective_vertex_[k]; }
  // Root index of tau^{direction} Z_k; empty for projective (+1) or injective (-1) Z_k.
  std::optional<int> tau(int k, int direction) const;

  int hom(int k, int l) const { return hom_[k][l]; }
  int ext(int k, int l) const { return ext_[k][l]; }
  int hom(const IsoType& a, const IsoType& b) const;
  int ext(const IsoType& a, const IsoType& b) const;
  const std::vector<int>& hom_order() const { return hom_order_; }

  const Rep& indecomposable(int k, std::uint32_t p) const;
  Rep realize(const IsoType& t, std::uint32_t p) const;
  IntVector dim(const IsoType& t) const;

  std::string content_hash() const { return hash_; }

 private:
  void self_test() const;
  const std::vector<Rep>& reps_at(std::uint32_t p) const;

  std::shared_ptr<const Quiver> quiver_;
  Settings settings_;
  std::vector<IntVector> roots_;
  std::map<IntVector, int> root_index_;
  std::vector<int> projective_, injective_;
  std::vector<int> projective_vertex_, injective_vertex_;
  std::vector<std::vector<int>> hom_, ext_;
  std::vector<int> hom_order_;
  std::string hash_;
  mutable std::mutex mu_;
  mutable std::map<std::uint32_t, std::unique_ptr<std::vector<Rep>>> reps_;
};

// Multiplicities from the unitriangular Hom-dimension system.
IsoType decompose(const Context& ctx, const Rep& m);
IsoType ar_translate(const Context& ctx, const IsoType& t, int direction);
// The unique rigid module with dimension vector d.
IsoType exceptional_module(const Context& ctx, const IntVector& d);
// All isomorphism types with dimension vector d.
std::vector<IsoType> isotypes_with_dim(const Context& ctx, const IntVector& d);
// Hom/Ext tables between indecomposables, recomputed at every configured
// prime; throws if any differs from the table built at the first prime.
void verify_prime_independence(const Context& ctx);

}  // namespace clusterhall
