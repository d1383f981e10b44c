#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterhall/context.hpp"
#include "clusterhall/qpoly.hpp"

namespace clusterhall {

// Object of the cluster category: module part M_0 (multiplicity per root
// index) plus shifted projectives SP_i (multiplicity per vertex).
struct CCObject {
  std::vector<int> module;
  std::vector<int> shifted;

  static CCObject zero(const Context& ctx);
  static CCObject of_module(const Context& ctx, const IsoType& t);
  static CCObject of_root(const Context& ctx, int root, int mult = 1);
  static CCObject of_shifted(const Context& ctx, int vertex, int mult = 1);

  IsoType h0() const { return {module}; }
  IsoType shifted_part_as_projectives(const Context& ctx) const;
  bool is_zero() const;
  int summands() const;
  CCObject operator+(const CCObject& o) const;
  CCObject operator-(const CCObject& o) const;  // throws if a multiplicity would go negative
  CCObject times(int k) const;
  friend auto operator<=>(const CCObject&, const CCObject&) = default;
};

struct MiddleTermClass {
  CCObject middle;
  std::optional<QPoly> count;  // point count of the projectivized class set
  BigInt chi;                  // its Euler characteristic
};

// Classes of Ext^1_C(N, M), i.e. triangles M -> Y -> N -> SM, grouped by Y.
struct TriangleCount {
  int dimension = 0;
  std::string method;  // "none", "direct" or "reduced"
  std::vector<MiddleTermClass> classes;

  const MiddleTermClass* find(const CCObject& y) const;
  BigInt total_chi() const;
};

enum class MiddleTermMode { automatic, direct, reduced };

// Dimensions of the four blocks of Ext^1_C(N, M).
struct ExtBlocks {
  int module_ext = 0;       // Ext^1(N0, M0)
  int dual_module_ext = 0;  // D Ext^1(M0, N0) = Hom(N0, tau M0)
  int from_projective = 0;  // Hom(P_N, M0), P_N the projectives shifted in N
  int to_injective = 0;     // Hom(N0, I_M), I_M the injectives matching SP summands of M
  int total() const { return module_ext + dual_module_ext + from_projective + to_injective; }
  int nonzero_blocks() const;
};

class Category {
 public:
  explicit Category(const Context& ctx) : ctx_(ctx) {}
  Category(const Category&) = delete;
  Category& operator=(const Category&) = delete;

  const Context& context() const { return ctx_; }

  // Indecomposables are indexed 0..r-1 (modules, in root order) then
  // r..r+n-1 (SP_1..SP_n).
  int num_indecomposables() const { return ctx_.num_roots() + ctx_.n(); }
  CCObject indecomposable(int idx) const;
  std::vector<std::pair<int, int>> summands(const CCObject& x) const;  // (index, multiplicity)
  std::string label(int idx) const;
  std::string describe(const CCObject& x) const;

  int ext1(int a, int b) const;
  int ext1(const CCObject& x, const CCObject& y) const;
  // Self-extension counted in the module category: half of ext1(x, x).
  int module_self_ext(const CCObject& x) const;
  bool is_exceptional(const CCObject& x) const;
  bool is_exceptional_concrete(const CCObject& x) const;

  // S on indecomposables: tau on non-projective modules, P_i -> SP_i, SP_i -> I_i.
  int shift(int idx) const;

  IntVector lambda(const CCObject& x) const;
  CCObject exceptional_from_lambda(const IntVector& v) const;
  std::vector<CCObject> tilting_objects() const;

  ExtBlocks blocks(const CCObject& n, const CCObject& m) const;
  TriangleCount middle_terms(const CCObject& n, const CCObject& m,
                             MiddleTermMode mode = MiddleTermMode::automatic) const;
  // Cached middle terms for a pair of indecomposables.
  const TriangleCount& middle_terms(int n_idx, int m_idx) const;
  // Multiplicity-number reduction to pairs of indecomposable summands; Euler
  // characteristics only. With module_block_only, restricted to the
  // Ext^1(N0, M0) block.
  TriangleCount reduced_middle_terms(const CCObject& n, const CCObject& m,
                                     bool module_block_only = false) const;
  // Direct enumeration of the Ext^1(N0, M0) block alone.
  TriangleCount module_block_direct(const CCObject& n, const CCObject& m) const;
  // Projective points (over all interpolation primes) a direct count of
  // dimension d visits.
  BigInt direct_cost(int d) const;

 private:
  const Context& ctx_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<TriangleCount>> cache_;
};

}  // namespace clusterhall
