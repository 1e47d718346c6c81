#pragma once

#include <string>

#include "veto/core.hpp"

namespace veto {

/// One row per interval: `[`, `]` at the endpoints and `|` at each mark.
std::string plot_text(const Representation& rep, int width = 72);

/// Standalone SVG with the same layout.
std::string plot_svg(const Representation& rep);

}  // namespace veto
