#include <cctype>

#include "terracini/errors.hpp"
#include "terracini/polynomial.hpp"

namespace terracini {

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& layout = ring_->layout();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    std::string c = t.coefficient.to_string();
    if (k > 0) out += c[0] == '-' ? "" : "+";
    out += c;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      auto e = t.monomial[i];
      if (!e) continue;
      out += '*';
      out += layout.variable_name(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '-' || peek() == '+') {
        negative = peek() == '-';
        if (first && !negative) fail("unary plus");
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      first = false;
      skip();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{Monomial(), ring_->field().one()};
    for (;;) {
      skip();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        t.coefficient *= ring_->field().parse_scalar(text_.substr(start, pos_ - start));
      } else if (pos_ < text_.size() && is_ident(peek())) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident(peek())) ++pos_;
        auto name = text_.substr(start, pos_ - start);
        auto var = ring_->layout().find_variable(name);
        if (!var) fail("unknown variable '" + std::string(name) + "'");
        unsigned e = 1;
        skip();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip();
          std::size_t s = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (s == pos_) fail("missing exponent");
          e = std::stoul(std::string(text_.substr(s, pos_ - s)));
        }
        Monomial m;
        if (e > 0xFFFF) fail("exponent too large");
        m.set(*var, static_cast<Monomial::Exponent>(e));
        t.monomial = t.monomial * m;
      } else {
        fail("expected a coefficient or variable");
      }
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  static bool is_ident(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || std::isdigit(static_cast<unsigned char>(c)); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse polynomial at column " + std::to_string(pos_ + 1) + ": " + why);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, std::string_view text) {
  try {
    return PolyParser(ring, text).parse();
  } catch (const ArithmeticError& e) {
    throw ParseError(std::string("cannot parse polynomial: ") + e.what());
  }
}

}  // namespace terracini
