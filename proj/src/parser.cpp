// Recursive-descent parser for the expression grammar:
//
//   expr     := term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := "-" factor | atom ("^" uint)?
//   atom     := rational | "z" | "a" uint | "x" "[" uint "," uint "]" | "(" expr ")"
//   rational := uint ("/" uint)?
//
// Unary minus binds looser than "^", so -z^2 reads as -(z^2).

#include <cctype>

#include "unipv/errors.hpp"
#include "unipv/ratfunc.hpp"

namespace unipv {
namespace {

class Parser {
 public:
  Parser(std::string_view text, unsigned max_param) : text_(text), max_param_(max_param) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class uint_literal() {
    if (!at_digit()) fail("expected unsigned integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_uint() {
    std::size_t start = pos_;
    mpz_class v = uint_literal();
    if (v > 65535) {
      pos_ = start;
      fail("integer too large");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    RatFunc base = atom();
    if (accept('^')) {
      unsigned e = small_uint();
      return base.pow(e);
    }
    return base;
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      expect(')');
      return r;
    }
    if (c == 'z') {
      ++pos_;
      return RatFunc(Variable::z());
    }
    if (c == 'a') {
      ++pos_;
      std::size_t at = pos_;
      unsigned i = small_uint();
      if (i < 1 || i > max_param_) {
        pos_ = at;
        fail("parameter index a" + std::to_string(i) + " out of range 1.." + std::to_string(max_param_));
      }
      return RatFunc(Variable::param(i));
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      expect('[');
      unsigned i = small_uint();
      expect(',');
      unsigned j = small_uint();
      expect(']');
      if (i < 1 || i > max_param_ || j < 1 || j + i > max_param_ + 1) {
        pos_ = at;
        fail("generator x[" + std::to_string(i) + "," + std::to_string(j) + "] out of range for size " +
             std::to_string(max_param_));
      }
      return RatFunc(Variable::x(i, j));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  RatFunc rational() {
    mpz_class num = uint_literal();
    // Greedy: "3/6" is a single rational literal; "1/z" falls back to the term rule.
    std::size_t save = pos_;
    if (accept('/') && at_digit()) {
      std::size_t at = pos_;
      mpz_class den = uint_literal();
      if (den == 0) {
        pos_ = at;
        fail("division by zero");
      }
      return RatFunc(canonical(num, den));
    }
    pos_ = save;
    return RatFunc(Scalar(num));
  }

  static Scalar canonical(const mpz_class& num, const mpz_class& den) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  unsigned max_param_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view text, unsigned max_param) { return Parser(text, max_param).parse(); }

}  // namespace unipv
