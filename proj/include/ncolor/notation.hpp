// notation.hpp -- text and JSON forms of compositions
//
// Text grammar:
//   composition := part ("+" part)* ;
//   part        := INT | INT "_" INT | INT "_{" INT "," INT "}" ;
//
// JSON form:
//   {"total": int, "parts": [{"size": int, "color": int|null}
//                           | {"size": int, "spots": [int, int]}]}

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "ncolor/combicore.hpp"

namespace ncolor {

/// Parses a colored composition. Spot-pair parts are rejected.
ColoredComposition parseComposition(std::string_view text);

/// Parses a choose-two composition; every part must use the `_{i,j}` form.
ChooseTwoComposition parseChooseTwo(std::string_view text);

/// Parses either kind, deciding by whether spot pairs appear.
std::variant<ColoredComposition, ChooseTwoComposition> parseAnyComposition(std::string_view text);

/// `spotConvention` prints uncolored parts as color 1 (`4_1`), matching how
/// ODD compositions are drawn in the choose-two correspondence.
std::string format(const ColoredComposition& comp, bool spotConvention = false);
std::string format(const ChooseTwoComposition& comp);

nlohmann::json toJson(const ColoredComposition& comp);
nlohmann::json toJson(const ChooseTwoComposition& comp);
std::variant<ColoredComposition, ChooseTwoComposition> compositionFromJson(const nlohmann::json& j);

} // namespace ncolor
