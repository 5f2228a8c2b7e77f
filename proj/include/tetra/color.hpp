#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tetra {

/// Edge colors of the tetrahedral poset, declared in the canonical
/// serialization order r, b, g, o, y, s.
enum class Color : std::uint8_t { Red, Blue, Green, Orange, Yellow, Silver };

inline constexpr std::array<Color, 6> kAllColors = {
    Color::Red, Color::Blue, Color::Green, Color::Orange, Color::Yellow, Color::Silver};

char color_letter(Color c);
std::string_view color_name(Color c);
std::optional<Color> color_from_letter(char ch);

class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors);
  static ColorSet all();
  /// Parses a compact string such as "gybo"; throws InvalidInput on unknown
  /// or repeated letters.
  static ColorSet parse(std::string_view letters);

  bool contains(Color c) const { return bits_.test(index(c)); }
  ColorSet with(Color c) const;
  ColorSet without(Color c) const;
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<Color> colors() const;  // canonical order
  std::string letters() const;        // canonical order, e.g. "bgoy"

  friend bool operator==(const ColorSet&, const ColorSet&) = default;
  friend bool operator<(const ColorSet& a, const ColorSet& b) {
    return a.bits_.to_ulong() < b.bits_.to_ulong();
  }

 private:
  static std::size_t index(Color c) { return static_cast<std::size_t>(c); }
  std::bitset<6> bits_;
};

/// First violated closure rule, e.g. "{r,b} requires g"; nullopt when admissible.
std::optional<std::string> admissibility_violation(const ColorSet& s);
inline bool is_admissible(const ColorSet& s) { return !admissibility_violation(s); }

/// All admissible subsets, ordered by size then canonical letters.
std::vector<ColorSet> admissible_color_sets();

}  // namespace tetra
