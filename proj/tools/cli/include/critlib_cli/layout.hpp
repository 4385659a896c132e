#pragma once

#include <string>

#include "critlib/intlinalg.hpp"
#include "critlib/rootsys.hpp"

namespace critlib::cli {

// Weight-coordinate vector drawn on the Dynkin diagram for E types (node 2 above node 4),
// plain "[a,b,...]" for everything else. A padded vector carries the extended node first.
std::string dynkin_layout(const DynkinType& type, const IntVector& v, bool padded = false);

}  // namespace critlib::cli
