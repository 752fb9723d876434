#pragma once

#include <string_view>
#include <vector>

#include "magnocorr/sweep.hpp"

namespace magnocorr {

/// Sweep specs for the figure grids: fig2a..fig2d, fig3, fig4a..fig4c,
/// fig5a, fig5b, fig6 (2-D), fig6d, fig6e (1-D cuts), fig7a, fig7b.
/// Shared baseline: J = 2 kappa_1, Delta_2 = Delta_1 unless stated, T = 15 mK.
/// `points` overrides the per-axis resolution (0 keeps the default: 201,
/// 401 for fig4a). Throws std::invalid_argument for an unknown name.
SweepSpec figure_preset(std::string_view name, int points = 0);

const std::vector<std::string_view>& preset_names();

}  // namespace magnocorr
