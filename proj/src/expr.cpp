#include "qheis/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace qheis {

ParseError::ParseError(const std::string &message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

bool operator==(const Expr &a, const Expr &b) {
  if (a.kind != b.kind || a.number != b.number || a.letters != b.letters || a.exponent != b.exponent)
    return false;
  auto same = [](const ExprPtr &x, const ExprPtr &y) { return (!x && !y) || (x && y && *x == *y); };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace {

using Kind = Expr::Kind;

ExprPtr make(Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
public:
  explicit Parser(const std::string &text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+'))
        e = make(Kind::Add, e, term());
      else if (accept('-'))
        e = make(Kind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (accept('*'))
        e = make(Kind::Mul, e, unary());
      else if (accept('/'))
        e = make(Kind::Div, e, unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (accept('-'))
      return make(Kind::Neg, unary());
    return power();
  }

  ExprPtr power() {
    skip();
    const bool starts_alpha = pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
    ExprPtr base = primary();
    const bool bare = starts_alpha && base->kind == Kind::Word;
    if (!accept('^'))
      return base;
    bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    std::string digits = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (digits.empty())
      fail("expected an integer exponent");
    Integer value(digits);
    if (value > std::numeric_limits<long>::max()) {
      pos_ = start;
      fail("exponent too large");
    }
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->exponent = negative ? -value.get_si() : value.get_si();
    if (bare && base->letters.size() > 1) {
      // AB^2 reads as A*B^2: the power binds to the last letter.
      auto head = std::make_shared<Expr>(*base);
      head->letters.pop_back();
      auto last = std::make_shared<Expr>(*base);
      last->letters = base->letters.substr(base->letters.size() - 1);
      e->lhs = last;
      return make(Kind::Mul, head, e);
    }
    e->lhs = base;
    return e;
  }

  template <class Pred> std::string read_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && pred(s_[pos_]))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string identifier() {
    return read_while([](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; });
  }

  ExprPtr primary() {
    skip();
    if (pos_ == s_.size())
      fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Kind::Number;
      e->number = Integer(read_while([](char d) { return std::isdigit(static_cast<unsigned char>(d)) != 0; }));
      return e;
    }
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (accept('[')) {
      ExprPtr x = expr();
      expect(',');
      ExprPtr y = expr();
      expect(']');
      return make(Kind::Commutator, x, y);
    }
    if (accept('<')) {
      skip();
      const std::size_t word_start = pos_;
      std::string w = identifier();
      if (w.empty() || w.find_first_not_of("AB") != std::string::npos) {
        pos_ = word_start;
        fail("expected a word over {A, B} inside <>");
      }
      if (!is_regular(Word(w))) {
        pos_ = word_start;
        fail(w + " is not a regular word");
      }
      expect('>');
      auto e = std::make_shared<Expr>();
      e->kind = Kind::Bracket;
      e->letters = w;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = identifier();
      auto e = std::make_shared<Expr>();
      if (id == "q") {
        e->kind = Kind::Q;
      } else if (id == "I") {
        e->kind = Kind::Identity;
      } else if (id.find_first_not_of("AB") == std::string::npos) {
        e->kind = Kind::Word;
        e->letters = id;
      } else {
        pos_ = start;
        fail("unknown identifier '" + id + "'");
      }
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

int precedence(Kind k) {
  switch (k) {
  case Kind::Add:
  case Kind::Sub:
    return 1;
  case Kind::Mul:
  case Kind::Div:
    return 2;
  case Kind::Neg:
    return 3;
  case Kind::Pow:
    return 4;
  default:
    return 5;
  }
}

std::string print(const Expr &e, int context) {
  std::string out;
  switch (e.kind) {
  case Kind::Number:
    out = e.number.get_str();
    break;
  case Kind::Q:
    out = "q";
    break;
  case Kind::Identity:
    out = "I";
    break;
  case Kind::Word:
    out = e.letters;
    break;
  case Kind::Bracket:
    out = "<" + e.letters + ">";
    break;
  case Kind::Commutator:
    out = "[" + print(*e.lhs, 0) + ", " + print(*e.rhs, 0) + "]";
    break;
  case Kind::Neg:
    out = "-" + print(*e.lhs, 3);
    break;
  case Kind::Add:
    out = print(*e.lhs, 1) + " + " + print(*e.rhs, 2);
    break;
  case Kind::Sub:
    out = print(*e.lhs, 1) + " - " + print(*e.rhs, 2);
    break;
  case Kind::Mul:
    out = print(*e.lhs, 2) + "*" + print(*e.rhs, 3);
    break;
  case Kind::Div:
    out = print(*e.lhs, 2) + "/" + print(*e.rhs, 3);
    break;
  case Kind::Pow:
    if (e.lhs->kind == Kind::Word && e.lhs->letters.size() > 1)
      out = "(" + e.lhs->letters + ")^" + std::to_string(e.exponent);
    else
      out = print(*e.lhs, 5) + "^" + std::to_string(e.exponent);
    break;
  }
  return precedence(e.kind) < context ? "(" + out + ")" : out;
}

std::optional<RationalFunction> as_scalar(const NormalElement &x) {
  if (x.is_zero())
    return RationalFunction();
  if (x.terms().size() == 1 && x.terms().begin()->first == Mono{0, 0})
    return x.terms().begin()->second;
  return std::nullopt;
}

} // namespace

ExprPtr parse_expression(const std::string &text) { return Parser(text).parse(); }

std::string to_string(const Expr &e) { return print(e, 0); }

NormalElement evaluate(const Expr &e, const QValue &q) {
  switch (e.kind) {
  case Kind::Number:
    return NormalElement::scalar(q, RationalFunction(Rational(e.number)));
  case Kind::Q:
    return NormalElement::scalar(q, q.as_rf());
  case Kind::Identity:
    return NormalElement::identity(q);
  case Kind::Word:
    return normal_form(Word(e.letters), q);
  case Kind::Bracket:
    return bracket_word(Word(e.letters), q);
  case Kind::Commutator:
    return h_commutator(evaluate(*e.lhs, q), evaluate(*e.rhs, q));
  case Kind::Neg:
    return -evaluate(*e.lhs, q);
  case Kind::Add:
    return evaluate(*e.lhs, q) + evaluate(*e.rhs, q);
  case Kind::Sub:
    return evaluate(*e.lhs, q) - evaluate(*e.rhs, q);
  case Kind::Mul:
    return evaluate(*e.lhs, q) * evaluate(*e.rhs, q);
  case Kind::Div: {
    auto d = as_scalar(evaluate(*e.rhs, q));
    if (!d)
      throw DomainError("division by a non-scalar element");
    return evaluate(*e.lhs, q) * d->inverse();
  }
  case Kind::Pow: {
    NormalElement base = evaluate(*e.lhs, q);
    if (e.exponent >= 0)
      return base.pow(static_cast<unsigned>(e.exponent));
    auto s = as_scalar(base);
    if (!s)
      throw DomainError("negative power of a non-scalar element");
    return NormalElement::scalar(q, s->inverse().pow(-e.exponent));
  }
  }
  throw std::logic_error("unknown expression kind");
}

EvalSummary summarize(const NormalElement &x) {
  EvalSummary s{x, grade(x), std::nullopt, std::nullopt, std::nullopt, "unavailable"};
  const QValue &q = x.q();
  if (!q.is_zero() && !q.is_one())
    s.lie_power = to_lie_power_basis(x);
  if (q.is_zero()) {
    s.decomposition = to_string(decompose_zero(x));
    s.member = membership_zero(x);
    s.membership_mode = "q=0";
  } else if (!q.degenerate_for_generic()) {
    s.decomposition = to_string(decompose_generic(x));
    s.member = membership_generic(x);
    s.membership_mode = "generic";
  }
  return s;
}

std::string to_text(const EvalSummary &s) {
  std::ostringstream out;
  out << "q: " << s.value.q().to_string() << '\n';
  out << "normal form: " << s.value.to_string() << '\n';
  out << "grading:\n";
  if (s.grading.empty())
    out << "  (zero)\n";
  for (const auto &[d, part] : s.grading)
    out << "  H_" << d << ": " << part.to_string() << '\n';
  out << "[A,B]-power coordinates: " << (s.lie_power ? s.lie_power->to_string() : "n/a for q in {0, 1}") << '\n';
  if (s.decomposition)
    out << "basis decomposition: " << *s.decomposition << '\n';
  out << "member of L(q): ";
  if (s.member)
    out << (*s.member ? "true" : "false") << " (" << s.membership_mode << ")\n";
  else
    out << "n/a for q in {1, -1}\n";
  return out.str();
}

} // namespace qheis
