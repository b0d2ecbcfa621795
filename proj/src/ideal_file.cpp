#include "terracini/ideal_file.hpp"

#include <charconv>
#include <sstream>

#include "terracini/errors.hpp"

namespace terracini {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view header_value(std::string_view line, std::string_view key, std::size_t lineno) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos || trim(line.substr(0, colon)) != key)
    throw ParseError("ideal file line " + std::to_string(lineno) + ": expected '" + std::string(key) + ":'");
  return trim(line.substr(colon + 1));
}

std::size_t parse_count(std::string_view s, std::size_t lineno) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("ideal file line " + std::to_string(lineno) + ": malformed count '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string write_ideal_file(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  if (ring->order().kind() != OrderKind::degrevlex) throw PreconditionError("ideal files use degrevlex");
  std::ostringstream out;
  out << "field: " << ring->field().selector() << "\n";
  out << "blocks:";
  for (const auto& b : ring->layout().blocks()) out << " " << b.name << ":" << b.size;
  out << "\norder: " << ring->order().name() << "\n";
  out << "generators: " << generators.size() << "\n";
  for (const auto& g : generators) out << g.to_string() << "\n";
  return out.str();
}

IdealFile read_ideal_file(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(trim(text.substr(0, nl)));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 4) throw ParseError("ideal file: missing header lines");

  Field field = Field::parse(header_value(lines[0], "field", 1));
  std::vector<Block> blocks;
  std::istringstream spec{std::string(header_value(lines[1], "blocks", 2))};
  for (std::string item; spec >> item;) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0) throw ParseError("ideal file line 2: malformed block '" + item + "'");
    blocks.push_back(Block{item.substr(0, colon), parse_count(std::string_view(item).substr(colon + 1), 2), false});
  }
  if (blocks.empty()) throw ParseError("ideal file line 2: no variable blocks");
  auto order = header_value(lines[2], "order", 3);
  if (order != "degrevlex") throw ParseError("ideal file line 3: unsupported order '" + std::string(order) + "'");
  std::size_t count = parse_count(header_value(lines[3], "generators", 4), 4);
  if (lines.size() - 4 != count)
    throw ParseError("ideal file: header announces " + std::to_string(count) + " generators, found " +
                     std::to_string(lines.size() - 4));

  IdealFile out;
  try {
    out.ring = Ring::make(field, VariableLayout(std::move(blocks)));
  } catch (const Error& e) {
    throw ParseError(std::string("ideal file: ") + e.what());
  }
  for (std::size_t i = 4; i < lines.size(); ++i) out.generators.push_back(Polynomial::parse(out.ring, lines[i]));
  return out;
}

}  // namespace terracini
