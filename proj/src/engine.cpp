#include "clusterhall/engine.hpp"

#include <utility>

namespace clusterhall {

Engine::Engine(Quiver q, Settings s) : ctx_(std::move(q), std::move(s)), cat_(ctx_), chars_(cat_) {}

}  // namespace clusterhall
