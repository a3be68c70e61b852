#include "hdet/figures.hpp"

#include <fmt/format.h>

#include "hdet/bound.hpp"

namespace hdet {

std::string_view figure_name(FigureKind kind) {
  switch (kind) {
    case FigureKind::Fcurves: return "Fcurves";
    case FigureKind::F3plus2F4: return "F3plus2F4";
    case FigureKind::F2plus2F3F4: return "F2plus2F3F4";
    case FigureKind::Kcurve: return "Kcurve";
  }
  return "unknown";
}

std::optional<FigureKind> parse_figure_kind(std::string_view text) {
  for (FigureKind k : {FigureKind::Fcurves, FigureKind::F3plus2F4, FigureKind::F2plus2F3F4,
                       FigureKind::Kcurve}) {
    if (text == figure_name(k)) return k;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string_view> quantities(FigureKind kind) {
  switch (kind) {
    case FigureKind::Fcurves: return {"F1", "F2", "F3", "F4"};
    case FigureKind::F3plus2F4: return {"F3plus2F4"};
    case FigureKind::F2plus2F3F4: return {"F2plus2F3F4"};
    case FigureKind::Kcurve: return {"K"};
  }
  return {};
}

void append_values(std::string& out, FigureKind kind, const FCoeffs<double>& f) {
  auto put = [&](double v) { fmt::format_to(std::back_inserter(out), ",{:.12g}", v); };
  switch (kind) {
    case FigureKind::Fcurves:
      put(f.F1);
      put(f.F2);
      put(f.F3);
      put(f.F4);
      break;
    case FigureKind::F3plus2F4: put(f.F3 + 2 * f.F4); break;
    case FigureKind::F2plus2F3F4: put(f.F2 + 2 * (f.F3 + f.F4)); break;
    case FigureKind::Kcurve: put(f.F1 + 2 * (f.F2 + f.F3) + 4 * f.F4); break;
  }
}

}  // namespace

std::string emit_figure_data(const Params& shape, const std::vector<Rational>& betas,
                             FigureKind which, int rho_steps) {
  if (rho_steps < 2) throw RangeError(Field::rho, "rho_steps must be >= 2");
  if (betas.empty()) throw RangeError(Field::beta, "at least one beta is required");
  std::vector<Params> curves;
  curves.reserve(betas.size());
  for (const Rational& b : betas) curves.push_back(with_beta(shape, b));

  std::string out = "rho";
  for (const Params& c : curves) {
    for (std::string_view q : quantities(which)) {
      fmt::format_to(std::back_inserter(out), ",{}_beta={:.12g}", q, to_double(c.beta));
    }
  }
  out += '\n';

  for (int i = 0; i < rho_steps; ++i) {
    const double rho = i == rho_steps - 1 ? 2.0 : 2.0 * i / (rho_steps - 1);
    fmt::format_to(std::back_inserter(out), "{:.12g}", rho);
    for (const Params& c : curves) append_values(out, which, f_coeffs(c, rho));
    out += '\n';
  }
  return out;
}

}  // namespace hdet
