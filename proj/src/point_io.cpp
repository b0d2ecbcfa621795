#include "terracini/point_io.hpp"

#include <json.hpp>

#include "terracini/errors.hpp"

namespace terracini {

namespace {

Rational coordinate(const nlohmann::json& c) {
  if (c.is_number_integer()) return Rational(static_cast<long>(c.get<std::int64_t>()));
  if (c.is_string()) {
    try {
      return Rational::parse(c.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(std::string("points: bad coordinate: ") + e.what());
    }
  }
  throw ParseError("points: coordinates must be integers or \"p/q\" strings, got " + c.dump());
}

}  // namespace

PointConfig read_points_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("points: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw ParseError("points: expected an object with a \"points\" array");
  PointConfig s;
  for (const auto& point : doc["points"]) {
    if (!point.is_array()) throw ParseError("points: each point must be a list of factor vectors");
    std::vector<std::vector<Rational>> factors;
    for (const auto& factor : point) {
      if (!factor.is_array()) throw ParseError("points: each factor must be a list of coordinates");
      std::vector<Rational> coords;
      for (const auto& c : factor) coords.push_back(coordinate(c));
      factors.push_back(std::move(coords));
    }
    s.points.push_back(std::move(factors));
  }
  return s;
}

std::string write_points_json(const PointConfig& s) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& point : s.points) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& factor : point) {
      nlohmann::json f = nlohmann::json::array();
      for (const auto& c : factor) {
        if (c.is_integer() && c.numerator().fits_slong_p())
          f.push_back(c.numerator().get_si());
        else
          f.push_back(c.to_string());
      }
      p.push_back(std::move(f));
    }
    points.push_back(std::move(p));
  }
  return nlohmann::json{{"points", points}}.dump() + "\n";
}

}  // namespace terracini
