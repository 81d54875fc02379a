#pragma once

#include <array>
#include <string_view>

#include "besselrad/rayleigh.hpp"

namespace besselrad {

enum class RadiusKind { ConvG, ConvH, UConvG, UConvH };

inline constexpr std::array<RadiusKind, 4> kAllKinds = {RadiusKind::ConvG, RadiusKind::ConvH, RadiusKind::UConvG,
                                                         RadiusKind::UConvH};

std::string_view to_string(RadiusKind kind) noexcept;
/// "conv-g", "conv-h", "uconv-g", "uconv-h".
RadiusKind parse_kind(std::string_view text);

struct KindTraits {
  SeriesFamily critical;     // smallest positive zero is the radius (or its square)
  SeriesFamily weierstrass;  // zeros feeding the Mittag-Leffler sum
  RayleighTarget target;     // eta for g, theta for h
  long weight;               // W in 1 = W sum r^m S_m
  Rational front;            // 1 / W
  bool squared;              // radius = sqrt(zero) when true
};

const KindTraits& traits(RadiusKind kind);

/// Same base function, the other radius (conv-g <-> uconv-g, conv-h <-> uconv-h).
RadiusKind uniform_partner(RadiusKind kind) noexcept;
bool is_uniform(RadiusKind kind) noexcept;

}  // namespace besselrad
