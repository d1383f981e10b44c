#pragma once

#include <string>
#include <vector>

#include "clusterhall/category.hpp"

namespace clusterhall {

// Object mini-language: "0", "S1", "P2", "I2", "SP2", "root:[1,2,1,1]",
// summed with "+" and scaled with "k*", e.g. "2*S1+S2".
CCObject parse_object(const Category& cat, const std::string& spec);
// Objects separated by ';'.
std::vector<CCObject> parse_object_list(const Category& cat, const std::string& spec);

}  // namespace clusterhall
