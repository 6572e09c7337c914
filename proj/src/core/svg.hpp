#pragma once

#include <string>

#include "geometry.hpp"

namespace ifsx {

/// Deterministic SVG rendering: d=1 clouds become tick marks on a line, d=2
/// clouds a scatter plot. Higher dimensions are an error.
std::string render_svg(const CompactSet& a);

}  // namespace ifsx
