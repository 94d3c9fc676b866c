#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffop/operators.hpp"

namespace cliffop {

// Textual operator-expression language:
//   expr   := ('-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' INT)*
//   primary:= atom | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//   atom   := 'D'|'X'|'E'|'Gamma'|'Delta'|'Id'|'X_'INT|'d_'INT|'xi_'INT
//           | 'I_s(' RATIONAL ')' | 'lambda' | 'n' | RATIONAL
// '^' binds tighter than '*'; unary minus is sugar for (-1)*. 'n' resolves to
// the session dimension at parse time; 'lambda' stays formal.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int column) : Error(what), column_(column) {}
  int column() const { return column_; }

private:
  int column_;
};

OpPtr parse(const std::string& text, int n);
std::string print(const OperatorExpr& ast);
inline std::string print(const OpPtr& ast) { return print(*ast); }

// Structural equality of ASTs (used by the parse/print round-trip tests).
bool structurally_equal(const OperatorExpr& a, const OperatorExpr& b);

struct Witness {
  MultiIndex exponents;
  BladeMask blade = 0;
  std::string image;
};

struct IdentityReport {
  std::string expr;   // printable description of the checked expression
  std::string tag;    // stable identifier within its suite
  int n = 0;
  int bound = 0;
  bool zero = false;
  std::optional<Witness> witness;
};

// The graded spanning set {x^alpha e^beta : |alpha| <= bound}, enumerated
// monomials-major in graded lexicographic order, blades ascending within a
// monomial. Witness reporting picks the first failure in this order.
std::vector<MultiIndex> monomials_up_to(int n, int bound);

using SpanningImage = CliffordPolynomial<LambdaPoly>;

// Applies `op` to every spanning function and reports the first nonzero
// image, if any. Exact, including all lambda coefficients.
IdentityReport check_identity_zero(const OperatorExpr& op, int n, int bound,
                                   const std::string& label = "", const std::string& tag = "");
inline IdentityReport check_identity_zero(const OpPtr& op, int n, int bound,
                                          const std::string& label = "",
                                          const std::string& tag = "") {
  return check_identity_zero(*op, n, bound, label, tag);
}

// As above but for an arbitrary function of the spanning element; used by the
// suites whose checks involve exponential conjugations rather than a single
// operator AST.
IdentityReport check_functional_zero(
    int n, int bound, const std::string& label, const std::string& tag,
    const std::function<SpanningImage(const SpanningImage&)>& image_of);

// Named verification suites. Bound <= 0 picks the suite's default.
std::vector<IdentityReport> builtin_suite(const std::string& name, int n, int bound = 0);
std::vector<std::string> builtin_suite_names();

}  // namespace cliffop
