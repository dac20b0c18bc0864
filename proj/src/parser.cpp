#include "cbb/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "cbb/errors.hpp"

namespace cbb {

namespace {

/// Recursive-descent parser for one expression. Columns are 1-based and
/// offset by `column0` so errors point into the original line.
class ExprParser {
 public:
  ExprParser(std::string_view text, const VarsPtr& vars, int line, int column0)
      : text_(text), vars_(vars), line_(line), column0_(column0) {}

  QPoly parse() {
    skip_space();
    if (at_end()) error("expected an expression");
    QPoly p = expr();
    skip_space();
    if (!at_end()) error(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& message) const {
    throw ParseError(line_, column0_ + static_cast<int>(pos_), message);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool starts_factor() {
    skip_space();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  QPoly expr() {
    QPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QPoly term() {
    QPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  QPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  QPoly power() {
    QPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a nonnegative integer exponent");
    const std::string digits = read_digits();
    if (digits.size() > 6) error("exponent too large");
    QPoly out = QPoly::constant(vars_, Rational(1));
    for (unsigned long k = std::stoul(digits); k > 0; --k) out = out * base;
    return out;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  QPoly atom() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = read_digits();
      const std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an integer denominator");
        const std::size_t den_at = pos_;
        const std::string den = read_digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_at;
          error("zero denominator");
        }
        lit += "/" + den;
      } else {
        pos_ = save;
      }
      return QPoly::constant(vars_, Rational::from_string(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto idx = vars_->index_of(name);
      if (!idx) {
        pos_ = start;
        error("unknown variable '" + name + "'");
      }
      return QPoly::variable(vars_, *idx, Rational(1));
    }
    if (c == '(') {
      ++pos_;
      QPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (at_end()) error("unexpected end of expression");
    error(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const VarsPtr& vars_;
  int line_;
  int column0_;
  std::size_t pos_ = 0;
};

std::vector<std::pair<std::string, int>> words(std::string_view rest, int column0) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < rest.size()) {
    while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
    const std::size_t start = i;
    while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
    if (i > start) out.emplace_back(std::string(rest.substr(start, i - start)), column0 + static_cast<int>(start));
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

QPoly parse_polynomial(std::string_view expr, const VarsPtr& vars) {
  return ExprParser(expr, vars, 1, 1).parse();
}

SystemFile parse_system(std::string_view text) {
  SystemFile out;
  std::set<std::string> seen_headers;
  std::set<std::string> names;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t kend = k;
    while (kend < line.size() && !std::isspace(static_cast<unsigned char>(line[kend]))) ++kend;
    const std::string keyword(line.substr(k, kend - k));
    const int keyword_col = static_cast<int>(k) + 1;
    const std::string_view rest = line.substr(kend);
    const int rest_col = static_cast<int>(kend) + 1;

    if (keyword == "poly") {
      if (!out.ring.all) {
        if (out.main_vars.empty()) throw ParseError(line_no, keyword_col, "poly before main_vars");
        out.ring = Ring::make(out.main_vars, out.params);
      }
      QPoly p = ExprParser(rest, out.ring.all, line_no, rest_col).parse();
      if (p.is_zero()) out.degenerate = true;
      out.polys.push_back(std::move(p));
    } else if (keyword == "main_vars" || keyword == "params" || keyword == "order") {
      if (!seen_headers.insert(keyword).second)
        throw ParseError(line_no, keyword_col, "duplicate " + keyword + " declaration");
      if (out.ring.all) throw ParseError(line_no, keyword_col, keyword + " after the first poly");
      const auto ws = words(rest, rest_col);
      if (keyword == "order") {
        if (ws.size() != 1) throw ParseError(line_no, rest_col, "order takes exactly one name");
        try {
          out.order = parse_order_kind(ws[0].first);
        } catch (const Error&) {
          throw ParseError(line_no, ws[0].second, "unknown order '" + ws[0].first + "'");
        }
        continue;
      }
      if (keyword == "main_vars" && ws.empty())
        throw ParseError(line_no, rest_col, "main_vars needs at least one name");
      auto& target = keyword == "main_vars" ? out.main_vars : out.params;
      for (const auto& [w, col] : ws) {
        if (!valid_name(w)) throw ParseError(line_no, col, "invalid variable name '" + w + "'");
        if (!names.insert(w).second) throw ParseError(line_no, col, "duplicate variable '" + w + "'");
        target.push_back(w);
      }
    } else {
      throw ParseError(line_no, keyword_col, "unknown directive '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  if (out.main_vars.empty()) throw ParseError(line_no, 1, "missing main_vars");
  if (out.polys.empty()) throw ParseError(line_no, 1, "no polynomials given");
  return out;
}

}  // namespace cbb
