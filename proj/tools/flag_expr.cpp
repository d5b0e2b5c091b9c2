#include "lattice/flag_expr.hpp"

#include <cctype>

namespace lattice {

namespace {

using Table = std::bitset<64>;

Table table_for(Condition c) {
  Table t;
  for (unsigned m = 0; m < 64; ++m) {
    if (m & bit(c)) t.set(m);
  }
  return t;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Table parse() {
    Table t = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  Table expr() {
    Table t = term();
    while (accept('|')) t |= term();
    return t;
  }

  Table term() {
    Table t = factor();
    while (accept('&')) t &= factor();
    return t;
  }

  Table factor() {
    if (accept('!')) return ~factor();
    if (accept('(')) {
      Table t = expr();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail(pos_ == text_.size() ? "unexpected end of expression" : "expected a condition name");
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "true") return Table().set();
    if (name == "false") return Table();
    auto c = condition_from_name(name);
    if (!c) fail("unknown condition '" + std::string(name) + "'");
    return table_for(*c);
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FlagExprError("flag expression: " + what + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FlagFilter FlagFilter::parse(std::string_view expr) { return FlagFilter(Parser(expr).parse()); }

}  // namespace lattice
