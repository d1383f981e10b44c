#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clusterhall {

using IntVector = std::vector<int>;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix identity(int n);

  long long& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  long long operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  static DynkinType parse(std::string_view label);  // "A1".."A8", "D4".."D6", "E6".."E8"
  std::string label() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

struct Arrow {
  int source = 0;  // 0-based
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class Orientation { linear, alternating };

class Quiver {
 public:
  // Arrows use 0-based vertices. Validates the underlying graph against the type.
  Quiver(DynkinType type, std::vector<Arrow> arrows);

  // Arrows given as 1-based (source, target) pairs, as in the external formats.
  static Quiver build(std::string_view type_label, const std::vector<std::pair<int, int>>& arrows);
  // Parses "1->2,3->2".
  static Quiver build(std::string_view type_label, std::string_view compact_arrows);
  static Quiver preset(std::string_view type_label, Orientation orientation);

  const DynkinType& type() const { return type_; }
  int num_vertices() const { return type_.rank; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }
  bool is_sink(int v) const { return out_[v].empty(); }
  bool is_source(int v) const { return in_[v].empty(); }
  std::vector<int> neighbours(int v) const;

  // Reverse every arrow incident to v (BGP reflection of the orientation).
  Quiver reflected(int v) const;
  Quiver opposite() const;

  // Vertices ordered sinks first: each vertex appears after all its successors.
  std::vector<int> sink_order() const;

  std::string compact() const;
  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.type_ == b.type_ && a.arrows_ == b.arrows_;
  }

 private:
  DynkinType type_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// E[i][j] = delta_ij - #(arrows i->j).
IntMatrix euler_matrix(const Quiver& q);
long long euler_form(const Quiver& q, const IntVector& d, const IntVector& e);
long long tits_form(const Quiver& q, const IntVector& d);

// Phi with Phi(dim M) = dim tau M for non-projective indecomposable M and
// Phi(dim P_i) = -dim I_i.
IntMatrix coxeter_matrix(const Quiver& q);
IntMatrix inverse_coxeter_matrix(const Quiver& q);
IntVector coxeter(const Quiver& q, const IntVector& d, int power);

IntVector projective_dim(const Quiver& q, int vertex);
IntVector injective_dim(const Quiver& q, int vertex);
IntVector unit_vector(int n, int i);

// Positive roots ordered compatibly with the Hom ordering: first by the
// number of inverse Coxeter steps away from a projective, then by the
// position of that projective's vertex in sink_order().
std::vector<IntVector> positive_roots(const Quiver& q);
// Number of positive roots of the type, from the closed formulas.
int positive_root_count(const DynkinType& t);

// b_ij = +1 if i->j, -1 if j->i.
IntMatrix b_matrix(const Quiver& q);

bool is_nonnegative(const IntVector& v);
bool is_zero(const IntVector& v);
bool leq(const IntVector& a, const IntVector& b);  // componentwise
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& a, int s);
std::string to_string(const IntVector& v);

}  // namespace clusterhall
