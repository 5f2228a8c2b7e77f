#include "tetra/color.hpp"

#include "tetra/errors.hpp"

#include <algorithm>

namespace tetra {

char color_letter(Color c) {
  constexpr char kLetters[] = {'r', 'b', 'g', 'o', 'y', 's'};
  return kLetters[static_cast<std::size_t>(c)];
}

std::string_view color_name(Color c) {
  constexpr std::string_view kNames[] = {"red", "blue", "green", "orange", "yellow", "silver"};
  return kNames[static_cast<std::size_t>(c)];
}

std::optional<Color> color_from_letter(char ch) {
  for (Color c : kAllColors)
    if (color_letter(c) == ch) return c;
  return std::nullopt;
}

ColorSet::ColorSet(std::initializer_list<Color> colors) {
  for (Color c : colors) bits_.set(index(c));
}

ColorSet ColorSet::all() {
  ColorSet s;
  s.bits_.set();
  return s;
}

ColorSet ColorSet::parse(std::string_view letters) {
  ColorSet s;
  for (char ch : letters) {
    auto c = color_from_letter(ch);
    if (!c) throw InvalidInput(std::string("unknown color letter '") + ch + "' (expected r,b,g,o,y,s)");
    if (s.contains(*c)) throw InvalidInput(std::string("repeated color letter '") + ch + "'");
    s.bits_.set(index(*c));
  }
  return s;
}

ColorSet ColorSet::with(Color c) const {
  ColorSet s = *this;
  s.bits_.set(index(c));
  return s;
}

ColorSet ColorSet::without(Color c) const {
  ColorSet s = *this;
  s.bits_.reset(index(c));
  return s;
}

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (Color c : kAllColors)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string ColorSet::letters() const {
  std::string out;
  for (Color c : colors()) out.push_back(color_letter(c));
  return out;
}

std::optional<std::string> admissibility_violation(const ColorSet& s) {
  struct Rule {
    Color a, b, required;
  };
  constexpr Rule kRules[] = {
      {Color::Red, Color::Blue, Color::Green},
      {Color::Orange, Color::Silver, Color::Blue},
      {Color::Silver, Color::Yellow, Color::Green},
      {Color::Red, Color::Orange, Color::Yellow},
  };
  for (const auto& r : kRules) {
    if (s.contains(r.a) && s.contains(r.b) && !s.contains(r.required)) {
      return std::string("{") + color_letter(r.a) + "," + color_letter(r.b) + "} requires " +
             color_letter(r.required);
    }
  }
  return std::nullopt;
}

std::vector<ColorSet> admissible_color_sets() {
  std::vector<ColorSet> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    ColorSet s;
    for (std::size_t k = 0; k < 6; ++k)
      if (mask & (1u << k)) s = s.with(kAllColors[k]);
    if (is_admissible(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const ColorSet& a, const ColorSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
  });
  return out;
}

}  // namespace tetra
