#pragma once

#include <memory>
#include <vector>

#include "clusterhall/ffalg.hpp"
#include "clusterhall/quiver.hpp"

namespace clusterhall {

// Representation over F_p: a space per vertex and a matrix per arrow a: i->j
// of shape dims[j] x dims[i].
struct Rep {
  std::shared_ptr<const Quiver> quiver;
  std::uint32_t p = 2;
  std::vector<int> dims;
  std::vector<FMatrix> maps;

  const Quiver& q() const { return *quiver; }
  int num_vertices() const { return static_cast<int>(dims.size()); }
  const IntVector& dim_vector() const { return dims; }
  int total_dim() const;
  void validate() const;
};

// f_i : M_i -> N_i, stored as dims_N[i] x dims_M[i] matrices.
using Morphism = std::vector<FMatrix>;
// g_a : N_{s(a)} -> M_{t(a)} for an extension of N by M.
using Cochain = std::vector<FMatrix>;

Rep zero_rep(std::shared_ptr<const Quiver> q, std::uint32_t p);
Rep simple_rep(std::shared_ptr<const Quiver> q, int vertex, std::uint32_t p);
Rep direct_sum(const Rep& a, const Rep& b);

std::vector<Morphism> hom_space(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);
int end_dim(const Rep& m);
// dim Hom(M,N) - <dim M, dim N>
int ext_dim(const Rep& m, const Rep& n);
bool is_morphism(const Morphism& f, const Rep& m, const Rep& n);
Morphism combine(const std::vector<Morphism>& basis, const std::vector<std::uint32_t>& coeffs);
Morphism zero_morphism(const Rep& m, const Rep& n);

// Basis of Ext^1(N, M) as cochains spanning a complement of the coboundaries.
std::vector<Cochain> ext_cocycles(const Rep& n, const Rep& m);
Cochain combine(const std::vector<Cochain>& basis, const std::vector<std::uint32_t>& coeffs,
                const Rep& n, const Rep& m);
// Middle term of 0 -> M -> Y -> N -> 0 for the class of g.
Rep extension(const Rep& m, const Rep& n, const Cochain& g);

// Sub-representation spanned by columns basis[i] of M_i; must be arrow-stable.
Rep subrep(const Rep& m, const std::vector<FMatrix>& basis);
Rep quotient(const Rep& m, const std::vector<FMatrix>& basis);
Rep kernel(const Morphism& f, const Rep& m);
Rep cokernel(const Morphism& f, const Rep& n);
Rep image(const Morphism& f, const Rep& n);

// Dual representation over the opposite quiver (transposed matrices).
Rep dual(const Rep& m, std::shared_ptr<const Quiver> opposite);

// BGP reflection functors. The result lives over q.reflected(k).
Rep reflect_at_sink(const Rep& m, int k, std::shared_ptr<const Quiver> reflected);
Rep reflect_at_source(const Rep& m, int k, std::shared_ptr<const Quiver> reflected);

// Indecomposable with the given positive root, built by reflection functors
// from a simple at a sink.
Rep build_indecomposable(std::shared_ptr<const Quiver> q, const IntVector& root, std::uint32_t p);

}  // namespace clusterhall
