#pragma once

#include <functional>
#include <vector>

#include "clusterhall/context.hpp"
#include "clusterhall/qpoly.hpp"
#include "clusterhall/rep.hpp"

namespace clusterhall {

// Number of arrow-stable tuples (U_i subset M_i, dim U_i = e_i).
BigInt count_submodules(const Rep& m, const IntVector& e, std::uint64_t budget);

// Calls fn with the column bases of every submodule of dimension vector e.
void for_each_submodule(const Rep& m, const IntVector& e, std::uint64_t budget,
                        const std::function<void(const std::vector<FMatrix>&)>& fn);

// sum_i e_i (d_i - e_i)
int grassmann_degree_bound(const IntVector& d, const IntVector& e);

// All e with 0 <= e <= d, lexicographic.
std::vector<IntVector> sub_dimension_vectors(const IntVector& d);

using RepFamily = std::function<Rep(std::uint32_t)>;

QPoly grassmann_poly(const RepFamily& family, const IntVector& dim, const IntVector& e,
                     const Settings& settings);
QPoly grassmann_poly(const Context& ctx, const IsoType& m, const IntVector& e);

// Value at q = 1; checks that it is nonnegative and positive when the
// Grassmannian has points.
BigInt euler_char(const QPoly& poly);
BigInt euler_char(const Context& ctx, const IsoType& m, const IntVector& e);

}  // namespace clusterhall
