#include "mkdv/trajectory.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "mkdv/phase.hpp"

namespace mkdv {
namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::mKdV:
      return "mkdv";
    case Variant::mKdV1:
      return "mkdv1";
    case Variant::mKdV2:
      return "mkdv2";
  }
  return "mkdv";
}

std::optional<Variant> parse_variant(std::string_view text) {
  const std::string t = lowercase(text);
  if (t == "mkdv") return Variant::mKdV;
  if (t == "mkdv1") return Variant::mKdV1;
  if (t == "mkdv2") return Variant::mKdV2;
  return std::nullopt;
}

std::string_view to_string(GaugeKind g) { return g == GaugeKind::G1 ? "G1" : "G2"; }

std::optional<GaugeKind> parse_gauge(std::string_view text) {
  const std::string t = lowercase(text);
  if (t == "g1") return GaugeKind::G1;
  if (t == "g2") return GaugeKind::G2;
  return std::nullopt;
}

FourierState interaction_representation(const FourierState& slice) {
  FourierState out = slice;
  const int cap = slice.mode_cap();
  for (int n = -cap; n <= cap; ++n) {
    const auto cube = static_cast<std::int64_t>(n) * n * n;
    out[n] = slice[n] * unit_phase(-cube, slice.time());
  }
  return out;
}

}  // namespace mkdv
