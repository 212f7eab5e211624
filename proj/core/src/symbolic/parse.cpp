#include <polylie/error.hpp>
#include <polylie/symbolic/parse.hpp>

#include <cctype>
#include <string>

namespace polylie::symbolic {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Symbol symbol() {
    skip();
    expect('[');
    std::vector<Argument> args;
    std::vector<int> index;
    int depth = 0;
    std::size_t start = pos_;
    for (;; ++pos_) {
      if (pos_ >= text_.size()) throw ParseError("unterminated symbol", pos_);
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ';')) {
        args.push_back(argument(start, pos_));
        start = pos_ + 1;
        if (c == ';') break;
      }
    }
    ++pos_;
    for (;;) {
      skip();
      index.push_back(integer());
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    if (index.size() != args.size()) throw ParseError("symbol has " + std::to_string(args.size()) + " arguments but " + std::to_string(index.size()) + " indices", pos_);
    return Symbol(std::move(args), std::move(index));
  }

  LinComb lincomb() {
    LinComb out;
    skip();
    if (text_.substr(pos_) == "0") {
      pos_ = text_.size();
      return out;
    }
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected + or -", pos_);
      }
      first = false;
      Rational coeff(1);
      if (peek() != '[') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
        if (start == pos_) throw ParseError("expected coefficient or symbol", pos_);
        try {
          coeff = fields::parse_rational(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::exception&) {
          throw ParseError("bad coefficient", start);
        }
        skip();
        expect('*');
      }
      out.add(symbol(), sign * coeff);
    }
    return out;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
  }

 private:
  Argument argument(std::size_t from, std::size_t to) {
    try {
      return Argument::parse(text_.substr(from, to - from));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad argument: ") + e.what(), from + e.position());
    }
  }
  int integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected index", pos_);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Symbol parse_symbol(std::string_view text) {
  Parser p(text);
  Symbol s = p.symbol();
  p.finish();
  return s;
}

LinComb parse_lincomb(std::string_view text) {
  Parser p(text);
  LinComb e = p.lincomb();
  p.finish();
  return e;
}

}  // namespace polylie::symbolic
