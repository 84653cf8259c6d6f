#pragma once

#include "knotcert/int_matrix.hpp"

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace knotcert {

// Immutable expression tree for knots built from torus knots, mirrors,
// multiples, connected sums and literal Seifert matrices. Copies share
// structure.
class KnotExpr {
 public:
  enum class Kind { Torus, Mirror, Multiple, Sum, Literal };

  // gcd(p, q) must be 1 (InputError otherwise).
  static KnotExpr torus(long p, long q);
  static KnotExpr mirror(KnotExpr inner);
  static KnotExpr multiple(long count, KnotExpr inner);  // count >= 0
  static KnotExpr sum(KnotExpr left, KnotExpr right);
  // |det(M - M^T)| must be 1. `source` is only used for printing.
  static KnotExpr literal(IntMatrix m, std::string source = {});
  static KnotExpr unknot() { return literal(IntMatrix{}); }

  Kind kind() const noexcept;
  long torus_p() const;
  long torus_q() const;
  long count() const;
  const KnotExpr& inner() const;  // Mirror, Multiple
  const KnotExpr& left() const;   // Sum
  const KnotExpr& right() const;  // Sum
  const IntMatrix& matrix() const;  // Literal

  std::string to_string() const;

 private:
  struct Node;
  explicit KnotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar:
//   expr := term { "#" term }
//   term := [ INT "*" ] atom
//   atom := "T(" INT "," INT ")" | "mirror(" expr ")" | "seifert(" PATH ")" | "(" expr ")"
// Whitespace is ignored between tokens. Relative seifert() paths resolve
// against `base_dir`. Torus arguments may carry a minus sign.
KnotExpr parse_knot_expr(std::string_view text, const std::filesystem::path& base_dir = {});

}  // namespace knotcert
