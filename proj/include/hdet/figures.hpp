#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdet/model.hpp"

namespace hdet {

enum class FigureKind {
  Fcurves,      // F1, F2, F3, F4
  F3plus2F4,    // F3 + 2 F4
  F2plus2F3F4,  // F2 + 2 (F3 + F4)
  Kcurve,       // F1 + 2 (F2 + F3) + 4 F4
};

std::string_view figure_name(FigureKind kind);
std::optional<FigureKind> parse_figure_kind(std::string_view text);

/// CSV table of the requested curves against rho.
///
/// Column 1 is `rho`, sampled at rho_steps uniform points of [0, 2] inclusive.
/// Then, for each beta in order, one column per quantity named
/// `<quantity>_beta=<beta>`. Numbers use 12 significant digits and rows end in
/// `\n`, so identical inputs give identical bytes. `shape` supplies m, lambda
/// and gamma; its beta is ignored. Throws RangeError for rho_steps < 2, an
/// empty beta list, or a beta outside [0, 1).
std::string emit_figure_data(const Params& shape, const std::vector<Rational>& betas,
                             FigureKind which, int rho_steps);

}  // namespace hdet
