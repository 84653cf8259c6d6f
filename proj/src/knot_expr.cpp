#include "knotcert/knot_expr.hpp"

#include "knotcert/error.hpp"
#include "knotcert/json_io.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace knotcert {

struct KnotExpr::Node {
  Kind kind;
  long a = 0;
  long b = 0;
  std::shared_ptr<KnotExpr> x;
  std::shared_ptr<KnotExpr> y;
  IntMatrix matrix;
  std::string source;
};

KnotExpr KnotExpr::torus(long p, long q) {
  if (std::gcd(p, q) != 1) {
    throw InputError("T(" + std::to_string(p) + "," + std::to_string(q) + "): p and q are not coprime");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Torus;
  n->a = p;
  n->b = q;
  return KnotExpr(std::move(n));
}

KnotExpr KnotExpr::mirror(KnotExpr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mirror;
  n->x = std::make_shared<KnotExpr>(std::move(inner));
  return KnotExpr(std::move(n));
}

KnotExpr KnotExpr::multiple(long count, KnotExpr inner) {
  if (count < 0) throw InputError("multiple count must be non-negative");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Multiple;
  n->a = count;
  n->x = std::make_shared<KnotExpr>(std::move(inner));
  return KnotExpr(std::move(n));
}

KnotExpr KnotExpr::sum(KnotExpr left, KnotExpr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->x = std::make_shared<KnotExpr>(std::move(left));
  n->y = std::make_shared<KnotExpr>(std::move(right));
  return KnotExpr(std::move(n));
}

KnotExpr KnotExpr::literal(IntMatrix m, std::string source) {
  if (!m.is_square()) throw InputError("Seifert matrix must be square");
  const Integer d = determinant(m - m.transpose());
  if (abs_value(d) != 1) {
    throw InputError("not a knot Seifert matrix: |det(M - M^T)| = " + abs_value(d).get_str());
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Literal;
  n->matrix = std::move(m);
  n->source = std::move(source);
  return KnotExpr(std::move(n));
}

KnotExpr::Kind KnotExpr::kind() const noexcept { return node_->kind; }

long KnotExpr::torus_p() const {
  if (node_->kind != Kind::Torus) throw std::logic_error("KnotExpr: not a torus knot");
  return node_->a;
}
long KnotExpr::torus_q() const {
  if (node_->kind != Kind::Torus) throw std::logic_error("KnotExpr: not a torus knot");
  return node_->b;
}
long KnotExpr::count() const {
  if (node_->kind != Kind::Multiple) throw std::logic_error("KnotExpr: not a multiple");
  return node_->a;
}
const KnotExpr& KnotExpr::inner() const {
  if (node_->kind != Kind::Mirror && node_->kind != Kind::Multiple) throw std::logic_error("KnotExpr: no inner expression");
  return *node_->x;
}
const KnotExpr& KnotExpr::left() const {
  if (node_->kind != Kind::Sum) throw std::logic_error("KnotExpr: not a sum");
  return *node_->x;
}
const KnotExpr& KnotExpr::right() const {
  if (node_->kind != Kind::Sum) throw std::logic_error("KnotExpr: not a sum");
  return *node_->y;
}
const IntMatrix& KnotExpr::matrix() const {
  if (node_->kind != Kind::Literal) throw std::logic_error("KnotExpr: not a literal");
  return node_->matrix;
}

std::string KnotExpr::to_string() const {
  switch (node_->kind) {
    case Kind::Torus:
      return "T(" + std::to_string(node_->a) + "," + std::to_string(node_->b) + ")";
    case Kind::Mirror:
      return "mirror(" + node_->x->to_string() + ")";
    case Kind::Multiple: {
      std::string in = node_->x->to_string();
      if (node_->x->kind() == Kind::Sum) in = "(" + in + ")";
      return std::to_string(node_->a) + "*" + in;
    }
    case Kind::Sum: {
      std::string r = node_->y->to_string();
      if (node_->y->kind() == Kind::Sum) r = "(" + r + ")";
      return node_->x->to_string() + " # " + r;
    }
    case Kind::Literal:
      if (!node_->source.empty()) return "seifert(" + node_->source + ")";
      return "seifert(<" + std::to_string(node_->matrix.rows()) + "x" + std::to_string(node_->matrix.cols()) + ">)";
  }
  return {};
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::filesystem::path& base) : text_(text), base_(base) {}

  KnotExpr parse() {
    KnotExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    // keyword must be followed (after optional spaces) by '('
    std::size_t k = after;
    while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
    if (k >= text_.size() || text_[k] != '(') return false;
    pos_ = after;
    return true;
  }

  long integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<long>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  KnotExpr expr() {
    KnotExpr e = term();
    while (peek('#')) {
      ++pos_;
      e = KnotExpr::sum(std::move(e), term());
    }
    return e;
  }

  KnotExpr term() {
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t at = pos_;
      const long k = integer(false);
      expect('*');
      try {
        return KnotExpr::multiple(k, atom());
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(e.what(), at);
      }
    }
    return atom();
  }

  KnotExpr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (keyword("T")) {
      expect('(');
      const long p = integer(true);
      expect(',');
      const long q = integer(true);
      expect(')');
      try {
        return KnotExpr::torus(p, q);
      } catch (const InputError& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (keyword("mirror")) {
      expect('(');
      KnotExpr e = expr();
      expect(')');
      return KnotExpr::mirror(std::move(e));
    }
    if (keyword("seifert")) {
      expect('(');
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      std::string path(text_.substr(start, pos_ - start));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) fail("empty seifert() path");
      expect(')');
      std::filesystem::path full = path;
      if (full.is_relative() && !base_.empty()) full = base_ / full;
      try {
        return KnotExpr::literal(read_matrix_file(full), path);
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(std::string("seifert(") + path + "): " + e.what(), at);
      }
    }
    if (peek('(')) {
      ++pos_;
      KnotExpr e = expr();
      expect(')');
      return e;
    }
    if (pos_ >= text_.size()) fail("expected a knot but input ended");
    fail("expected T(p,q), mirror(...), seifert(...) or '('");
  }

  std::string_view text_;
  std::filesystem::path base_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotExpr parse_knot_expr(std::string_view text, const std::filesystem::path& base_dir) {
  return Parser(text, base_dir).parse();
}

}  // namespace knotcert
