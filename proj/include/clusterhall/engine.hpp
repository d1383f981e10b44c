#pragma once

#include "clusterhall/category.hpp"
#include "clusterhall/ccmap.hpp"
#include "clusterhall/context.hpp"

namespace clusterhall {

// Context, category and characters for one quiver.
class Engine {
 public:
  explicit Engine(Quiver q, Settings s = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Context& context() const { return ctx_; }
  const Category& category() const { return cat_; }
  const Characters& characters() const { return chars_; }
  const Quiver& quiver() const { return ctx_.quiver(); }
  int n() const { return ctx_.n(); }

 private:
  Context ctx_;
  Category cat_;
  Characters chars_;
};

}  // namespace clusterhall
