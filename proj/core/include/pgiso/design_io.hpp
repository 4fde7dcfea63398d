// Plain-text design files and their JSON rendering.
//
// Format: an optional run of '#' comment lines and blank lines, a header
// line, then one flat per line as space-separated effect labels:
//
//   spread n=4 t=2
//   BC D BCD
//   ...
//
//   star n=5 t=3 t0=1
//   A AE E ...
//
// The t0 field is optional on input for stars (the nucleus is auto-detected
// and checked against it when present) and always written on output.
// Rendering is canonical: flats sorted by their bitstrings, points within a
// flat by Yates index.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "pgiso/geometry.hpp"

namespace pgiso {

using Design = std::variant<Spread, Star>;

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what);
    int line = 0;
    int column = 0;
};

// Throws ParseError for syntax problems (with position) and for bodies that
// fail validation (spreads must pass is_spread; star rays must share a
// common nucleus, with non-covering families accepted and flagged).
Design parse_design(std::string_view text);

std::string render_design(const Design& d);
std::string render_design(const Spread& d);
std::string render_design(const Star& s);

// Same content as a serialized JSON object: kind, n, t, (t0, nucleus,
// covering), flats as arrays of labels in canonical order.
std::string render_design_json(const Design& d);

int design_dimension(const Design& d);
std::string_view design_kind(const Design& d);

}  // namespace pgiso
