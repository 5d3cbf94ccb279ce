#pragma once

// Text and JSON forms of PuiseuxSeries.
//
// Text form, one term per line after a header:
//
//   denom=2 trunc=7/1 order=4
//   -1/1 1/1
//   1/2 [0/1,3/1;order=4]
//
// `order=` is optional (default 1). Blank lines and lines starting with '#'
// are ignored. The JSON form is {"denom", "trunc", "order", "terms"} with
// "terms" a list of [exponent, coefficient] string pairs.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "moonshine/series.hpp"

namespace moonshine {

/// Malformed input; `what()` names the offending line or field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_series(const PuiseuxSeries& f);
PuiseuxSeries parse_series(const std::string& text);
PuiseuxSeries read_series(std::istream& in);

nlohmann::json series_to_json(const PuiseuxSeries& f);
PuiseuxSeries series_from_json(const nlohmann::json& j);

/// Compact human form like "q^-1 + 196884*q + ...", for tables and logs.
std::string pretty_series(const PuiseuxSeries& f, std::size_t max_terms = 8);

}  // namespace moonshine
