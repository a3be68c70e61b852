#pragma once

#include <optional>
#include <string_view>

namespace hdet {

/// Parameter specializations with their own closed forms.
enum class CorollaryKind {
  MFold,         // lambda = 1, gamma = 0; arguments m, beta
  General1Fold,  // m = 1; arguments lambda, gamma, beta
  Lambda1Fold,   // m = 1, gamma = 0; arguments lambda, beta
  Base,          // m = 1, lambda = 1, gamma = 0; argument beta
};

std::string_view corollary_name(CorollaryKind kind);
std::optional<CorollaryKind> parse_corollary_kind(std::string_view text);

/// Arguments not used by a kind are ignored.
struct CorollaryArgs {
  int m = 1;
  double lambda = 1;
  int gamma = 0;
  double beta = 0;
};

struct CorollaryValue {
  double value = 0;
  double threshold = 0;
};

/// Evaluates the specialized piecewise bound and its threshold directly from
/// the specialized products, without going through theorem_bound. The first
/// branch is taken when beta <= threshold. Throws RangeError for arguments
/// outside m >= 1, lambda >= 1, gamma >= 0, 0 <= beta < 1.
CorollaryValue corollary_bound(CorollaryKind kind, const CorollaryArgs& args);

}  // namespace hdet
