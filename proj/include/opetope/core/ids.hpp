#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace opetope {

enum class Polarity : std::uint8_t { Source, Target };

constexpr Polarity opposite(Polarity p) noexcept {
  return p == Polarity::Source ? Polarity::Target : Polarity::Source;
}

std::string_view to_string(Polarity p) noexcept;
char polarity_letter(Polarity p) noexcept;

struct CellId {
  std::uint32_t index = 0;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

struct ArrowId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ArrowId&, const ArrowId&) = default;
};

struct DiamondId {
  std::uint32_t index = 0;
  friend auto operator<=>(const DiamondId&, const DiamondId&) = default;
};

}  // namespace opetope

template <>
struct std::hash<opetope::CellId> {
  std::size_t operator()(opetope::CellId c) const noexcept { return std::hash<std::uint32_t>{}(c.index); }
};

template <>
struct std::hash<opetope::ArrowId> {
  std::size_t operator()(opetope::ArrowId a) const noexcept { return std::hash<std::uint32_t>{}(a.index); }
};
