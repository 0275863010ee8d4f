#include "dunkl/poly_text.hpp"

#include <cctype>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

std::string blade_suffix(Blade blade) {
  std::string s = "e";
  for (int i : blade.indices()) s += static_cast<char>('0' + i);
  return s;
}

// One rendered term: magnitude first, sign handled by the caller.
std::string term_text(const Rational& coeff, const Monomial* mono,
                      const std::vector<std::string>* var_names, Blade blade) {
  std::string out = to_string(abs(coeff));
  if (mono != nullptr) {
    for (int v = 0; v < mono->nvars(); ++v) {
      const unsigned e = mono->exp(v);
      if (e == 0) continue;
      out += "*" + (*var_names)[static_cast<std::size_t>(v)];
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  if (!blade.is_scalar()) out += "*" + blade_suffix(blade);
  return out;
}

std::string join_terms(const std::vector<std::pair<int, std::string>>& signed_terms) {
  if (signed_terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [sign, text] : signed_terms) {
    if (first) {
      if (sign < 0) out += "-";
      out += text;
      first = false;
    } else {
      out += (sign < 0) ? " - " : " + ";
      out += text;
    }
  }
  return out;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(nvars));
  for (int v = 0; v < nvars; ++v) names.push_back("x" + std::to_string(v));
  return names;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  enum class Kind {
    Number, Variable, Blade, Plus, Minus, Star, Slash, Caret, LParen, RParen, End
  };

  struct Token {
    Kind kind;
    std::string text;
  };

  Token next() {
    skip_space();
    if (pos_ >= text_.size()) return {Kind::End, ""};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return {Kind::Number, read_digits()};
    switch (c) {
      case '+': ++pos_; return {Kind::Plus, "+"};
      case '-': ++pos_; return {Kind::Minus, "-"};
      case '*': ++pos_; return {Kind::Star, "*"};
      case '/': ++pos_; return {Kind::Slash, "/"};
      case '^': ++pos_; return {Kind::Caret, "^"};
      case '(': ++pos_; return {Kind::LParen, "("};
      case ')': ++pos_; return {Kind::RParen, ")"};
      case 'x': {
        ++pos_;
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError("variable needs an index, e.g. x0");
        return {Kind::Variable, digits};
      }
      case 'e': {
        ++pos_;
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError("blade needs indices, e.g. e12");
        return {Kind::Blade, digits};
      }
      default:
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, int dim) : lexer_(text), dim_(dim) { advance(); }

  CliffordPolynomial parse() {
    CliffordPolynomial p = expression();
    if (tok_.kind != Lexer::Kind::End) throw ParseError("trailing input after polynomial");
    return p;
  }

 private:
  using Kind = Lexer::Kind;

  void advance() { tok_ = lexer_.next(); }

  bool accept(Kind kind) {
    if (tok_.kind != kind) return false;
    advance();
    return true;
  }

  CliffordPolynomial expression() {
    bool negate = false;
    if (accept(Kind::Minus)) negate = true;
    else accept(Kind::Plus);
    CliffordPolynomial sum = term();
    if (negate) sum = -sum;
    for (;;) {
      if (accept(Kind::Plus)) sum = sum + term();
      else if (accept(Kind::Minus)) sum = sum - term();
      else return sum;
    }
  }

  CliffordPolynomial term() {
    CliffordPolynomial product = factor();
    while (accept(Kind::Star)) product = product * factor();
    return product;
  }

  CliffordPolynomial factor() {
    CliffordPolynomial base = primary();
    if (accept(Kind::Caret)) {
      if (tok_.kind != Kind::Number) throw ParseError("exponent must be an integer");
      const unsigned long e = std::stoul(tok_.text);
      advance();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  CliffordPolynomial primary() {
    switch (tok_.kind) {
      case Kind::Number: {
        const std::string num = tok_.text;
        advance();
        Rational value{Integer(num, 10)};
        // A slash only appears inside a rational literal p/q.
        if (accept(Kind::Slash)) {
          if (tok_.kind != Kind::Number) throw ParseError("denominator must be an integer");
          const Integer den(tok_.text, 10);
          advance();
          if (sgn(den) == 0) throw ParseError("zero denominator");
          value = Rational(Integer(num, 10), den);
          value.canonicalize();
        }
        return CliffordPolynomial::scalar(dim_, value);
      }
      case Kind::Variable: {
        const int v = std::stoi(tok_.text);
        if (v > dim_) throw ParseError("variable x" + tok_.text + " exceeds dimension");
        advance();
        return CliffordPolynomial::variable(dim_, v);
      }
      case Kind::Blade: {
        const std::string digits = tok_.text;
        advance();
        std::vector<int> indices;
        int prev = 0;
        for (char c : digits) {
          const int i = c - '0';
          if (i <= prev) throw ParseError("blade indices must be strictly increasing");
          if (i > dim_) throw ParseError("blade index exceeds dimension");
          indices.push_back(i);
          prev = i;
        }
        CliffordPolynomial p(dim_);
        p.add_component(Blade::from_indices(indices),
                        ScalarPoly::constant(dim_ + 1, Rational(1)));
        return p;
      }
      case Kind::LParen: {
        advance();
        CliffordPolynomial inner = expression();
        if (!accept(Kind::RParen)) throw ParseError("missing closing parenthesis");
        return inner;
      }
      default:
        throw ParseError("unexpected token '" + tok_.text + "'");
    }
  }

  Lexer lexer_;
  Lexer::Token tok_;
  int dim_;
};

}  // namespace

std::string to_text(const Multivector& m) {
  std::vector<std::pair<int, std::string>> terms;
  for (const auto& [blade, coeff] : m.terms())
    terms.emplace_back(sgn(coeff), term_text(coeff, nullptr, nullptr, blade));
  return join_terms(terms);
}

std::string to_text(const CliffordPolynomial& p) {
  const auto names = default_var_names(p.nvars());
  std::vector<std::pair<int, std::string>> terms;
  for (const auto& [blade, poly] : p.terms())
    for (const auto& [mono, coeff] : poly.terms())
      terms.emplace_back(sgn(coeff), term_text(coeff, &mono, &names, blade));
  return join_terms(terms);
}

std::string to_text(const ScalarPoly& p, const std::vector<std::string>& var_names) {
  std::vector<std::pair<int, std::string>> terms;
  for (const auto& [mono, coeff] : p.terms())
    terms.emplace_back(sgn(coeff), term_text(coeff, &mono, &var_names, Blade()));
  return join_terms(terms);
}

CliffordPolynomial parse_clifford_poly(std::string_view text, int dim) {
  Parser parser(text, dim);
  return parser.parse();
}

}  // namespace dunkl
