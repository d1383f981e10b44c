#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "clusterhall/category.hpp"
#include "clusterhall/laurent.hpp"
#include "clusterhall/qpoly.hpp"

namespace clusterhall {

struct GrassmannEntry {
  IntVector e;
  QPoly poly;
  BigInt chi;
};

// Cluster characters of objects of the cluster category.
class Characters {
 public:
  explicit Characters(const Category& cat) : cat_(cat) {}
  Characters(const Characters&) = delete;
  Characters& operator=(const Characters&) = delete;

  const Category& category() const { return cat_; }
  int n() const { return cat_.context().n(); }

  // Nonempty quiver Grassmannians of the indecomposable module with this root index.
  const std::vector<GrassmannEntry>& grassmannians(int root) const;
  const LaurentPoly& x_indecomposable(int idx) const;
  LaurentPoly x_of(const CCObject& x) const;

  // sum_e chi(Gr_e(M)) x^(-<e, a_i> - <a_i, d - e>)
  LaurentPoly x_module(const IsoType& m) const;

 private:
  const Category& cat_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<std::vector<GrassmannEntry>>> grass_;
  mutable std::map<int, std::unique_ptr<LaurentPoly>> x_;
};

// Exponent of the e-term of X_M for dim M = d.
IntVector character_exponent(const Quiver& q, const IntVector& d, const IntVector& e);

// Some c with 0 <= c <= bound and vertex - B c = point.
std::optional<IntVector> cone_coefficients(const IntMatrix& b, const IntVector& vertex, const IntVector& point,
                                           const IntVector& bound);

}  // namespace clusterhall
