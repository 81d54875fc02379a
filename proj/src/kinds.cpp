#include "besselrad/kinds.hpp"

#include <string>

#include "besselrad/error.hpp"

namespace besselrad {

std::string_view to_string(RadiusKind kind) noexcept {
  switch (kind) {
    case RadiusKind::ConvG: return "conv-g";
    case RadiusKind::ConvH: return "conv-h";
    case RadiusKind::UConvG: return "uconv-g";
    case RadiusKind::UConvH: return "uconv-h";
  }
  return "?";
}

RadiusKind parse_kind(std::string_view text) {
  for (RadiusKind k : kAllKinds) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown kind '" + std::string(text) + "' (expected conv-g, conv-h, uconv-g or uconv-h)");
}

const KindTraits& traits(RadiusKind kind) {
  static const std::array<KindTraits, 4> table = {{
      {SeriesFamily::ConvexG, SeriesFamily::WeierstrassG, RayleighTarget::Eta, 2, Rational(1, 2), true},
      {SeriesFamily::ConvexH, SeriesFamily::WeierstrassH, RayleighTarget::Theta, 1, Rational(1), false},
      {SeriesFamily::UConvexG, SeriesFamily::WeierstrassG, RayleighTarget::Eta, 4, Rational(1, 4), true},
      {SeriesFamily::UConvexH, SeriesFamily::WeierstrassH, RayleighTarget::Theta, 2, Rational(1, 2), false},
  }};
  return table[static_cast<std::size_t>(kind)];
}

RadiusKind uniform_partner(RadiusKind kind) noexcept {
  switch (kind) {
    case RadiusKind::ConvG: return RadiusKind::UConvG;
    case RadiusKind::UConvG: return RadiusKind::ConvG;
    case RadiusKind::ConvH: return RadiusKind::UConvH;
    case RadiusKind::UConvH: return RadiusKind::ConvH;
  }
  return kind;
}

bool is_uniform(RadiusKind kind) noexcept { return kind == RadiusKind::UConvG || kind == RadiusKind::UConvH; }

}  // namespace besselrad
