// Deterministic SVG renderings of the n = 1 and n = 2 pictures. Floating
// point is confined to this file; coordinates are printed with 12 significant
// digits under a fixed viewBox, in a fixed element order.
#pragma once

#include "mirrorkit/exact.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace mirrorkit {

class FigureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FigureKind {
  AnnulusCurves,   // sections of the annulus for O, O(-1), O(-2)
  CoverLifts,      // Euler lifts and zero section over [-1, 1]
  CoverSurgery,    // the same after surgery at both vertices
  PolytopeWeights  // Delta and its polar for P^2, vertices labelled with weights
};

std::string to_string(FigureKind kind);
std::optional<FigureKind> parse_figure_kind(const std::string& s);
/// The only n each kind can be drawn for.
Index figure_dimension(FigureKind kind);

struct FigureSpec {
  FigureKind kind = FigureKind::CoverLifts;
  Index n = 1;
  double stroke_width = 2.0;
  int samples = 64;  // per curve, at least 16
};

/// gamma_k(t) = (e t + e^{-1} (1 - t)) exp(2 pi i k t), t in [0, 1].
std::complex<double> annulus_curve(long k, double t);

std::string emit_figure(const FigureSpec& spec);

}  // namespace mirrorkit
