#include "moonshine/series_io.hpp"

#include <istream>
#include <optional>
#include <sstream>

namespace moonshine {

namespace {

std::uint32_t parse_positive(const std::string& text, const std::string& what) {
  Rational v;
  try {
    v = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(what + ": expected a positive integer, got '" + text + "'");
  }
  if (!is_integer(v) || v <= 0 || !v.get_num().fits_uint_p()) {
    throw ParseError(what + ": expected a positive integer, got '" + text + "'");
  }
  return static_cast<std::uint32_t>(v.get_num().get_ui());
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

PuiseuxSeries build(std::uint32_t denom, Trunc trunc, PuiseuxSeries::Terms terms, std::uint32_t order,
                    const std::string& where) {
  try {
    return PuiseuxSeries(denom, std::move(trunc), std::move(terms), order);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

std::string format_series(const PuiseuxSeries& f) {
  std::ostringstream out;
  out << "denom=" << f.denom() << " trunc=" << f.trunc().to_string();
  if (f.order() != 1) out << " order=" << f.order();
  out << '\n';
  for (const auto& [e, c] : f.terms()) out << to_string(e) << ' ' << c.to_string() << '\n';
  return out.str();
}

PuiseuxSeries parse_series(const std::string& text) {
  std::istringstream in(text);
  return read_series(in);
}

PuiseuxSeries read_series(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::uint32_t> denom;
  std::optional<Trunc> trunc;
  std::uint32_t order = 1;
  bool header_seen = false;
  PuiseuxSeries::Terms terms;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno);
    if (!header_seen) {
      std::istringstream fields(t);
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError(where + ": header field '" + field + "' lacks '='");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "denom") {
          denom = parse_positive(value, where + " denom");
        } else if (key == "trunc") {
          try {
            trunc = parse_trunc(value);
          } catch (const std::invalid_argument&) {
            throw ParseError(where + ": bad trunc '" + value + "'");
          }
        } else if (key == "order") {
          order = parse_positive(value, where + " order");
        } else {
          throw ParseError(where + ": unknown header field '" + key + "'");
        }
      }
      if (!denom || !trunc) throw ParseError(where + ": header needs denom= and trunc=");
      header_seen = true;
      continue;
    }
    const auto space = t.find_first_of(" \t");
    if (space == std::string::npos) throw ParseError(where + ": expected '<exponent> <coefficient>'");
    Rational e;
    CycloElem c;
    try {
      e = parse_rational(t.substr(0, space));
      c = parse_cyclo(trim(t.substr(space + 1)));
    } catch (const std::invalid_argument& err) {
      throw ParseError(where + ": " + err.what());
    }
    if (!terms.emplace(e, c).second) throw ParseError(where + ": duplicate exponent " + to_string(e));
  }
  if (!header_seen) throw ParseError("missing series header");
  return build(*denom, *trunc, std::move(terms), order, "series");
}

nlohmann::json series_to_json(const PuiseuxSeries& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({to_string(e), c.to_string()});
  return {{"denom", f.denom()}, {"trunc", f.trunc().to_string()}, {"order", f.order()}, {"terms", terms}};
}

PuiseuxSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("series: expected an object");
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw ParseError(std::string("series: missing field '") + key + "'");
    return j.at(key);
  };
  auto positive = [&](const char* key, bool required) -> std::uint32_t {
    if (!required && !j.contains(key)) return 1;
    const auto& v = field(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 || v.get<std::uint64_t>() > UINT32_MAX) {
      throw ParseError(std::string("series: field '") + key + "' must be a positive integer");
    }
    return static_cast<std::uint32_t>(v.get<std::uint64_t>());
  };
  const auto denom = positive("denom", true);
  const auto order = positive("order", false);
  const auto& tr = field("trunc");
  if (!tr.is_string()) throw ParseError("series: field 'trunc' must be a string");
  Trunc trunc = Trunc::exact();
  try {
    trunc = parse_trunc(tr.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw ParseError("series: bad trunc '" + tr.get<std::string>() + "'");
  }
  const auto& raw = field("terms");
  if (!raw.is_array()) throw ParseError("series: field 'terms' must be an array");
  PuiseuxSeries::Terms terms;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto& item = raw[k];
    const std::string where = "series: terms[" + std::to_string(k) + "]";
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw ParseError(where + ": expected [exponent, coefficient] strings");
    }
    try {
      const Rational e = parse_rational(item[0].get<std::string>());
      if (!terms.emplace(e, parse_cyclo(item[1].get<std::string>())).second) {
        throw ParseError(where + ": duplicate exponent");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  return build(denom, std::move(trunc), std::move(terms), order, "series");
}

std::string pretty_series(const PuiseuxSeries& f, std::size_t max_terms) {
  std::ostringstream out;
  std::size_t shown = 0;
  for (const auto& [e, c] : f.terms()) {
    if (shown == max_terms) {
      out << " + ...";
      break;
    }
    const auto q = c.try_rational();
    const bool negative = q && *q < 0;
    if (shown != 0) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    const Rational magnitude = q ? Rational(abs(*q)) : Rational(0);
    const std::string coeff = q ? magnitude.get_str() : c.to_string();
    if (e == 0) {
      out << coeff;
    } else {
      if (!q || magnitude != 1) out << coeff << "*";
      out << "q";
      if (e != 1) out << "^" << e.get_str();
    }
    ++shown;
  }
  if (shown == 0) out << "0";
  if (!f.trunc().is_exact()) out << " + O(q^" << f.trunc().bound().get_str() << ")";
  return out.str();
}

}  // namespace moonshine
