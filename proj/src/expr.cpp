#include "w0/expr.hpp"

#include <cctype>

#include "w0/errors.hpp"

namespace w0 {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& vars) : s_(text), vars_(vars) {}

  std::int64_t parse_all() {
    auto v = parse_or();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

  // Linear template: term (('+'|'-') term)*, term = [int '*'] ident '[' expr ']'
  std::vector<SymbolTerm> parse_linear() {
    std::vector<SymbolTerm> out;
    skip();
    std::int64_t sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    while (true) {
      skip();
      std::int64_t coef = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef = parse_number();
        if (!eat('*')) fail("expected '*' after coefficient");
      }
      std::string id = parse_ident();
      if (!eat('[')) fail("expected '[' after symbol");
      std::int64_t idx = parse_or();
      if (!eat(']')) fail("expected ']'");
      out.push_back({id, idx, sign * coef});
      skip();
      if (pos_ == s_.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else fail("expected '+' or '-'");
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse expression '" + std::string(s_) + "': " + why +
                     " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat2(const char* op) {
    skip();
    if (s_.substr(pos_, 2) == op) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  std::int64_t parse_number() {
    skip();
    std::int64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  std::string parse_ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start || std::isdigit(static_cast<unsigned char>(s_[start])))
      fail("expected an identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t parse_or() {
    auto v = parse_and();
    while (eat2("||")) {
      auto w = parse_and();
      v = (v || w) ? 1 : 0;
    }
    return v;
  }

  std::int64_t parse_and() {
    auto v = parse_cmp();
    while (eat2("&&")) {
      auto w = parse_cmp();
      v = (v && w) ? 1 : 0;
    }
    return v;
  }

  std::int64_t parse_cmp() {
    auto v = parse_add();
    while (true) {
      if (eat2("==")) v = v == parse_add();
      else if (eat2("!=")) v = v != parse_add();
      else if (eat2("<=")) v = v <= parse_add();
      else if (eat2(">=")) v = v >= parse_add();
      else if (eat('<')) v = v < parse_add();
      else if (eat('>')) v = v > parse_add();
      else return v;
    }
  }

  std::int64_t parse_add() {
    auto v = parse_mul();
    while (true) {
      if (eat('+')) v += parse_mul();
      else if (eat('-')) v -= parse_mul();
      else return v;
    }
  }

  std::int64_t parse_mul() {
    auto v = parse_unary();
    while (true) {
      if (eat('*')) {
        v *= parse_unary();
      } else if (eat('/')) {
        auto d = parse_unary();
        if (d == 0) fail("division by zero");
        auto q = v / d;
        if ((v % d != 0) && ((v < 0) != (d < 0))) --q;
        v = q;
      } else if (eat('%')) {
        auto d = parse_unary();
        if (d == 0) fail("modulo by zero");
        auto m = v % d;
        if (m != 0 && ((m < 0) != (d < 0))) m += d;
        v = m;
      } else {
        return v;
      }
    }
  }

  std::int64_t parse_unary() {
    if (eat('-')) return -parse_unary();
    if (eat('!')) return parse_unary() ? 0 : 1;
    return parse_atom();
  }

  std::int64_t parse_atom() {
    skip();
    if (eat('(')) {
      auto v = parse_or();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return parse_number();
    std::string id = parse_ident();
    if (id == "min" || id == "max") {
      if (!eat('(')) fail("expected '(' after " + id);
      auto a = parse_or();
      if (!eat(',')) fail("expected ','");
      auto b = parse_or();
      if (!eat(')')) fail("expected ')'");
      return id == "min" ? std::min(a, b) : std::max(a, b);
    }
    auto it = vars_.find(id);
    if (it == vars_.end()) fail("unbound variable '" + id + "'");
    return it->second;
  }

  std::string_view s_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::int64_t eval_int(std::string_view expr, const Bindings& vars) {
  return Parser(expr, vars).parse_all();
}

bool eval_bool(std::string_view expr, const Bindings& vars) {
  return eval_int(expr, vars) != 0;
}

std::vector<SymbolTerm> eval_linear(std::string_view expr, const Bindings& vars) {
  return Parser(expr, vars).parse_linear();
}

}  // namespace w0
