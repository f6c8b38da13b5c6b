#include "locuskit/sysparse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace locuskit {

ParseError::ParseError(const std::string& msg, std::size_t line,
                       std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + msg,
                 "E_SYNTAX"),
      line_(line),
      column_(column) {}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const ContextPtr& ctx, std::size_t line)
      : s_(text), ctx_(ctx), line_(line) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) {
      if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
          s_[pos_] == '_')
        fail("implicit multiplication is not allowed (use '*')");
      fail(std::string("unexpected character '") + s_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, pos_ + 1);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t start = pos_;
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    if (digits.empty()) {
      pos_ = start;
      fail("expected a non-negative integer exponent after '^'");
    }
    if (digits.size() > 3 || std::stoul(digits) > kMaxParseExponent) {
      pos_ = start;
      fail("exponent overflow (max " + std::to_string(kMaxParseExponent) + ")");
    }
    return static_cast<unsigned>(std::stoul(digits));
  }

  Polynomial number() {
    const std::size_t start = pos_;
    std::string lit;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                         s_[pos_] == '.'))
      lit += s_[pos_++];
    if (std::count(lit.begin(), lit.end(), '.') > 1 || lit == ".") {
      pos_ = start;
      fail("malformed number");
    }
    Rational value = Rational::parse(lit);
    // int '/' uint forms a single rational literal.
    const std::size_t save = pos_;
    skip_ws();
    if (!at_end() && s_[pos_] == '/' && lit.find('.') == std::string::npos) {
      ++pos_;
      skip_ws();
      std::string den;
      const std::size_t dpos = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        den += s_[pos_++];
      if (den.empty()) {
        pos_ = dpos;
        fail("expected an unsigned integer denominator after '/'");
      }
      if (Integer(den) == 0) {
        pos_ = dpos;
        fail("zero denominator");
      }
      value = Rational::make(value.num(), Integer(den));
    } else {
      pos_ = save;
    }
    if (!at_end() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                      s_[pos_] == '_' || s_[pos_] == '('))
      fail("implicit multiplication is not allowed (use '*')");
    return Polynomial::constant(ctx_, value);
  }

  Polynomial factor() {
    skip_ws();
    if (at_end()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) inner = inner.pow(exponent());
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string id;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                           s_[pos_] == '_'))
        id += s_[pos_++];
      auto idx = ctx_->index_of(id);
      if (!idx) {
        pos_ = start;
        fail("undeclared identifier '" + id + "'");
      }
      Polynomial v = Polynomial::variable(ctx_, *idx);
      if (accept('^')) v = v.pow(exponent());
      return v;
    }
    if (c == ')') fail("unbalanced ')'");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const ContextPtr& ctx_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const ContextPtr& ctx,
                      std::size_t line) {
  return ExprParser(text, ctx, line).parse();
}

PolySystem parse_system(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string_view body;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    const std::string_view body = strip(raw);
    if (!body.empty() && body.front() != '#') lines.push_back({number, body});
    start = end + 1;
  }

  auto header = [&](std::size_t idx, std::string_view key) -> std::vector<std::string> {
    const std::size_t at_line = idx < lines.size() ? lines[idx].number : number;
    if (idx >= lines.size() || lines[idx].body.substr(0, key.size()) != key)
      throw ParseError("expected '" + std::string(key) + "' line", at_line, 1);
    return split_words(lines[idx].body.substr(key.size()));
  };

  std::vector<std::string> vars = header(0, "vars:");
  if (vars.empty()) throw ParseError("no variables declared", lines[0].number, 1);
  std::vector<std::string> elim = header(1, "eliminate:");

  PolySystem sys;
  try {
    sys.context = make_context(vars);
  } catch (const InputError& e) {
    throw ParseError(e.what(), lines[0].number, 1);
  }
  for (const auto& v : elim) {
    if (!sys.context->index_of(v))
      throw ParseError("elimination variable '" + v + "' is not declared",
                       lines[1].number, 1);
    if (std::find(sys.elim_vars.begin(), sys.elim_vars.end(), v) !=
        sys.elim_vars.end())
      throw ParseError("duplicate elimination variable '" + v + "'",
                       lines[1].number, 1);
    sys.elim_vars.push_back(v);
  }
  if (sys.elim_vars.size() >= vars.size())
    throw ParseError("at least one variable must be retained", lines[1].number, 1);

  for (std::size_t i = 2; i < lines.size(); ++i) {
    Polynomial p = parse_poly(lines[i].body, sys.context, lines[i].number);
    if (p.is_zero())
      throw ParseError("generator is identically zero", lines[i].number, 1);
    sys.generators.push_back(std::move(p));
  }
  if (sys.generators.empty())
    throw ParseError("system has no polynomials", number, 1);
  return sys;
}

std::string serialize(const Polynomial& p) { return p.str(); }

std::string serialize(const PolySystem& sys) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& n : sys.context->names()) os << ' ' << n;
  os << "\neliminate:";
  for (const auto& n : sys.elim_vars) os << ' ' << n;
  os << '\n';
  for (const auto& g : sys.generators) os << g.str() << '\n';
  return os.str();
}

}  // namespace locuskit
