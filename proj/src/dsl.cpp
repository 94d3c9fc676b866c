#include "cliffop/dsl.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <future>

namespace cliffop {

namespace {

struct Parser {
  const std::string& text;
  int n;
  size_t pos = 0;

  explicit Parser(const std::string& t, int dim) : text(t), n(dim) {}

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message + " at column " + std::to_string(pos + 1),
                     static_cast<int>(pos + 1));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool at_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stol(text.substr(start, pos - start));
  }

  Rational parse_rational_literal() {
    long num = parse_int();
    if (eat('/')) {
      long den = parse_int();
      if (den == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  std::string parse_identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  OpPtr parse_expr() {
    bool negated = eat('-');
    std::vector<OpPtr> children;
    children.push_back(negated ? negate_node(parse_term()) : parse_term());
    while (true) {
      if (eat('+')) {
        children.push_back(parse_term());
      } else if (eat('-')) {
        children.push_back(negate_node(parse_term()));
      } else {
        break;
      }
    }
    return children.size() == 1 ? children[0] : op::sum(std::move(children));
  }

  OpPtr parse_term() {
    std::vector<OpPtr> children{parse_factor()};
    while (true) {
      if (eat('*')) {
        children.push_back(parse_factor());
      } else if (eat('/')) {
        // Division is defined for constant scalar divisors only; a/c is
        // sugar for a * (1/c).
        OpPtr divisor = parse_factor();
        Rational value;
        if (divisor->kind != OpKind::Scalar || !divisor->scalar.constant_value(value) ||
            cliffop::is_zero(value))
          fail("division needs a nonzero constant scalar divisor");
        children.push_back(op::scalar(Rational(1) / value));
      } else {
        break;
      }
    }
    return children.size() == 1 ? children[0] : op::compose(std::move(children));
  }

  OpPtr parse_factor() {
    OpPtr base = parse_primary();
    while (eat('^')) {
      long k = parse_int();
      if (k < 0) fail("negative power");
      base = op::power(base, static_cast<int>(k));
    }
    return base;
  }

  OpPtr parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      OpPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos;
      OpPtr a = parse_expr();
      expect(',');
      OpPtr b = parse_expr();
      expect(']');
      return op::commutator(a, b);
    }
    if (c == '{') {
      ++pos;
      OpPtr a = parse_expr();
      expect(',');
      OpPtr b = parse_expr();
      expect('}');
      return op::anticommutator(a, b);
    }
    if (c == '-') {
      ++pos;
      return negate_node(parse_factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return op::scalar(parse_rational_literal());
    }
    return parse_atom();
  }

  OpPtr parse_atom() {
    size_t start = pos;
    std::string id = parse_identifier();
    if (id.empty()) fail("expected an operator or scalar");
    if (id == "D") return op::dirac();
    if (id == "X") return op::x_vector();
    if (id == "E") return op::euler();
    if (id == "Gamma") return op::gamma();
    if (id == "Delta") return op::laplacian();
    if (id == "Id") return op::identity();
    if (id == "lambda") return op::scalar(LambdaPoly::lambda());
    if (id == "n") return op::scalar(Rational(n));
    if (id == "I_s") {
      expect('(');
      Rational s = parse_rational_literal();
      expect(')');
      if (sgn(s) <= 0) fail("I_s requires s > 0");
      return op::integral_is(s);
    }
    auto coordinate = [&](const std::string& prefix) -> std::optional<int> {
      if (id.rfind(prefix, 0) != 0) return std::nullopt;
      std::string rest = id.substr(prefix.size());
      if (rest.empty()) return std::nullopt;
      for (char ch : rest)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      int j = std::stoi(rest);
      if (j < 1 || j > n) fail("coordinate index out of range in '" + id + "'");
      return j;
    };
    if (auto j = coordinate("X_")) return op::x_coord(*j);
    if (auto j = coordinate("d_")) return op::d_coord(*j);
    if (auto j = coordinate("xi_")) return op::xi(*j);
    pos = start;
    fail("unknown identifier '" + id + "'");
  }

  static OpPtr negate_node(OpPtr a) {
    // Fold the sign into a leading rational so printing round-trips.
    if (a->kind == OpKind::Scalar) return op::scalar(-a->scalar);
    if (a->kind == OpKind::Compose && !a->children.empty() &&
        a->children[0]->kind == OpKind::Scalar) {
      std::vector<OpPtr> children = a->children;
      children[0] = op::scalar(-children[0]->scalar);
      return op::compose(std::move(children));
    }
    return op::scale(Rational(-1), std::move(a));
  }
};

// Precedence levels for printing: sum < product < power < atom.
enum Level { kSum = 0, kProduct = 1, kPower = 2, kAtom = 3 };

std::string print_node(const OperatorExpr& node, int parent_level);

std::string print_scalar(const LambdaPoly& value) {
  if (value.is_constant()) {
    Rational q;
    value.constant_value(q);
    return rational_to_string(q);
  }
  if (value == LambdaPoly::lambda()) return "lambda";
  return "(" + value.str() + ")";
}

std::string print_node(const OperatorExpr& node, int parent_level) {
  auto wrap = [&](const std::string& body, int level) {
    return level < parent_level ? "(" + body + ")" : body;
  };
  switch (node.kind) {
    case OpKind::D:
      return "D";
    case OpKind::X:
      return "X";
    case OpKind::E:
      return "E";
    case OpKind::Gamma:
      return "Gamma";
    case OpKind::Delta:
      return "Delta";
    case OpKind::Identity:
      return "Id";
    case OpKind::Zero:
      return "0";
    case OpKind::Xj:
      return "X_" + std::to_string(node.index);
    case OpKind::Dj:
      return "d_" + std::to_string(node.index);
    case OpKind::Xij:
      return "xi_" + std::to_string(node.index);
    case OpKind::Is:
      return "I_s(" + rational_to_string(node.s_param) + ")";
    case OpKind::Scalar:
      return print_scalar(node.scalar);
    case OpKind::Sum: {
      std::string out;
      for (size_t i = 0; i < node.children.size(); ++i) {
        std::string part = print_node(*node.children[i], kSum + 1);
        if (i == 0) {
          out = part;
        } else if (!part.empty() && part[0] == '-') {
          out += " - " + part.substr(1);
        } else {
          out += " + " + part;
        }
      }
      return wrap(out, kSum);
    }
    case OpKind::Compose: {
      std::string out;
      for (size_t i = 0; i < node.children.size(); ++i) {
        if (i) out += "*";
        out += print_node(*node.children[i], kProduct + 1);
      }
      // A leading negative scalar prints as a '-' prefix; the parser folds it
      // back into the scalar, so the round trip is structural.
      return wrap(out, kProduct);
    }
    case OpKind::Power: {
      std::string base = print_node(*node.children[0], kPower + 1);
      // A leading '-' would rebind as unary minus of the whole power.
      if (!base.empty() && base[0] == '-') base = "(" + base + ")";
      return wrap(base + "^" + std::to_string(node.power), kPower);
    }
    case OpKind::Commutator:
      return "[" + print_node(*node.children[0], kSum) + ", " +
             print_node(*node.children[1], kSum) + "]";
    case OpKind::Anticommutator:
      return "{" + print_node(*node.children[0], kSum) + ", " +
             print_node(*node.children[1], kSum) + "}";
    case OpKind::ExpNilpotent:
      return "exp(" + print_node(*node.children[0], kSum) + ")";
    case OpKind::ExpTruncated:
      return "exp_N[" + std::to_string(node.power) + "](" +
             print_node(*node.children[0], kSum) + ")";
  }
  throw Error("unprintable node");
}

}  // namespace

OpPtr parse(const std::string& text, int n) {
  if (n < 1 || n > kMaxDimension) throw Error("dimension out of range");
  Parser parser(text, n);
  OpPtr ast = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return ast;
}

std::string print(const OperatorExpr& ast) { return print_node(ast, kSum); }

bool structurally_equal(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.kind != b.kind || a.index != b.index || a.power != b.power) return false;
  if (a.s_param != b.s_param) return false;
  if (!(a.scalar == b.scalar)) return false;
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

std::vector<MultiIndex> monomials_up_to(int n, int bound) {
  std::vector<MultiIndex> out;
  MultiIndex current(n, 0);
  // Graded enumeration: all |alpha| = d for d = 0..bound, lexicographic
  // within a degree.
  std::function<void(int, int)> rec = [&](int axis, int remaining) {
    if (axis == n - 1) {
      current[axis] = remaining;
      out.push_back(current);
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      current[axis] = take;
      rec(axis + 1, remaining - take);
    }
  };
  for (int d = 0; d <= bound; ++d) rec(0, d);
  return out;
}

namespace {

int worker_count() {
  if (const char* env = std::getenv("CLIFFOP_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 16);
  }
  return 1;
}

}  // namespace

IdentityReport check_functional_zero(
    int n, int bound, const std::string& label, const std::string& tag,
    const std::function<SpanningImage(const SpanningImage&)>& image_of) {
  Signature sig(0, n);
  IdentityReport report{label, tag, n, bound, true, std::nullopt};

  const auto monomials = monomials_up_to(n, bound);
  const BladeMask blades = BladeMask{1} << n;
  const size_t total = monomials.size() * blades;
  auto probe = [&](size_t index) -> std::optional<Witness> {
    const MultiIndex& alpha = monomials[index / blades];
    BladeMask mask = static_cast<BladeMask>(index % blades);
    SpanningImage f = SpanningImage::monomial(
        n, sig, alpha, Multivector<LambdaPoly>::blade(sig, mask, LambdaPoly::one()));
    SpanningImage image = image_of(f);
    if (image.is_zero()) return std::nullopt;
    return Witness{alpha, mask, image.str()};
  };

  const int workers = worker_count();
  size_t first_failure = total;
  std::optional<Witness> witness;
  if (workers <= 1) {
    for (size_t i = 0; i < total; ++i) {
      if (auto w = probe(i)) {
        first_failure = i;
        witness = std::move(w);
        break;
      }
    }
  } else {
    // Deterministic fan-out: every worker scans a strided slice and reports
    // its earliest failure; the overall witness is the minimum index, so the
    // report does not depend on scheduling.
    std::vector<std::future<std::pair<size_t, std::optional<Witness>>>> jobs;
    for (int w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (size_t i = static_cast<size_t>(w); i < total; i += workers) {
          if (auto found = probe(i)) return std::make_pair(i, std::move(found));
        }
        return std::make_pair(total, std::optional<Witness>{});
      }));
    }
    for (auto& job : jobs) {
      auto [index, found] = job.get();
      if (index < first_failure) {
        first_failure = index;
        witness = std::move(found);
      }
    }
  }
  if (witness) {
    report.zero = false;
    report.witness = std::move(witness);
  }
  return report;
}

IdentityReport check_identity_zero(const OperatorExpr& node, int n, int bound,
                                   const std::string& label, const std::string& tag) {
  std::string text = label.empty() ? print(node) : label;
  return check_functional_zero(
      n, bound, text, tag,
      [&](const SpanningImage& f) { return apply(node, f); });
}

}  // namespace cliffop
