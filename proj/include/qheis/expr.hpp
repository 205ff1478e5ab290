#pragma once

#include "qheis/heis.hpp"
#include "qheis/lie.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace qheis {

/// Syntax error; position() is the 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression AST. Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' '-'? INTEGER)?
///   primary := INTEGER | 'q' | 'I' | WORD | '(' expr ')' | '[' expr ',' expr ']' | '<' WORD '>'
/// WORD is a run of the letters A and B; inside <> it must be regular.
/// A power after a WORD binds to its last letter, so AB^2 is A*B^2.
struct Expr {
  enum class Kind { Number, Q, Identity, Word, Bracket, Commutator, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  Integer number;      // Number
  std::string letters; // Word, Bracket
  long exponent = 0;   // Pow
  ExprPtr lhs, rhs;    // operands (Neg and Pow use lhs only)
};

bool operator==(const Expr &a, const Expr &b);

ExprPtr parse_expression(const std::string &text);
/// Prints with the fewest parentheses that re-parse to the same AST.
std::string to_string(const Expr &e);

/// Value in H(q). Division and negative powers need scalar operands.
NormalElement evaluate(const Expr &e, const QValue &q);

/// Everything `qheis eval` reports about an element.
struct EvalSummary {
  NormalElement value;
  GradedParts grading;
  std::optional<LiePowerCoords> lie_power;  ///< when q is not 0 or 1
  std::optional<std::string> decomposition; ///< basis of H(q) adapted to L(q)
  std::optional<bool> member;               ///< generic or q = 0 verdict
  std::string membership_mode;              ///< "generic", "q=0" or "unavailable"
};
EvalSummary summarize(const NormalElement &x);
std::string to_text(const EvalSummary &s);

} // namespace qheis
