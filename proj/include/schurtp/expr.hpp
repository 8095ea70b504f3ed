#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurtp/chern.hpp"
#include "schurtp/partition.hpp"
#include "schurtp/poly.hpp"

namespace schurtp {

/// Bundle reference in an expression: a declared slot, optionally dualized
/// with '~', optionally minus a second such reference (virtual difference).
struct BundleRef {
  std::string name;
  bool dual = false;
  int slot = -1;
};

struct VirtualRef {
  BundleRef first;
  std::optional<BundleRef> second;
};

class ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// Parse tree for the expression grammar
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := int | c<uint> '(' vbundle ')' | 'S' '[' partition ']' '(' vbundle ')'
///           | '(' expr ')'
///   vbundle := bundle ('-' bundle)? ;  bundle := name '~'?
struct ExprNode {
  enum class Kind { Literal, Chern, Schur, Add, Sub, Mul, Pow, Negate };
  Kind kind;
  std::size_t pos = 0;

  Int literal;
  unsigned chern_index = 0;
  Partition shape;
  VirtualRef bundles;
  ExprPtr lhs, rhs;
  unsigned exponent = 0;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, const BundleRing& ring) : src_(src), ring_(ring) {}

  ExprPtr parse() {
    ExprPtr root = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw syntax("unexpected trailing input");
    return root;
  }

 private:
  ExprPtr parse_expr() {
    skip_ws();
    ExprPtr left;
    if (peek() == '-') {
      std::size_t at = pos_;
      ++pos_;
      left = node(ExprNode::Kind::Negate, at, parse_term());
    } else {
      left = parse_term();
    }
    while (true) {
      skip_ws();
      char op = peek();
      if (op != '+' && op != '-') break;
      std::size_t at = pos_;
      ++pos_;
      ExprPtr right = parse_term();
      left = node(op == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, at, left, right);
    }
    return left;
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      std::size_t at = pos_;
      ++pos_;
      left = node(ExprNode::Kind::Mul, at, left, parse_factor());
    }
    return left;
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      std::size_t at = pos_;
      ++pos_;
      unsigned exponent = parse_uint("exponent");
      if (exponent > 9999) throw syntax("exponent too large");
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Pow;
      n->pos = at;
      n->lhs = base;
      n->exponent = exponent;
      return n;
    }
    return base;
  }

  ExprPtr parse_atom() {
    skip_ws();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Literal;
      n->pos = at;
      n->literal = parse_int();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident = parse_ident();
      skip_ws();
      if (ident == "S" && peek() == '[') {
        ++pos_;
        Partition shape = parse_partition_inline();
        expect(']');
        expect('(');
        VirtualRef ref = parse_vbundle();
        expect(')');
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::Schur;
        n->pos = at;
        n->shape = std::move(shape);
        n->bundles = std::move(ref);
        return n;
      }
      if (ident.size() >= 2 && ident[0] == 'c' &&
          std::all_of(ident.begin() + 1, ident.end(),
                      [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
          peek() == '(') {
        unsigned long index = std::stoul(ident.substr(1));
        if (index > 9999) throw syntax("Chern index too large");
        ++pos_;
        VirtualRef ref = parse_vbundle();
        expect(')');
        // for an honest (non-virtual) bundle the index must respect the rank
        if (!ref.second) {
          unsigned rank = ring_.slot(static_cast<std::size_t>(ref.first.slot)).rank;
          if (index > rank)
            throw Error("DegreeOverflow",
                        "c" + std::to_string(index) + "(" + ref.first.name + ") exceeds rank " +
                            std::to_string(rank),
                        at);
        }
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::Chern;
        n->pos = at;
        n->chern_index = static_cast<unsigned>(index);
        n->bundles = std::move(ref);
        return n;
      }
      throw syntax("expected integer, c<i>(...), S[...](...), or '('");
    }
    throw syntax("expected integer, c<i>(...), S[...](...), or '('");
  }

  VirtualRef parse_vbundle() {
    VirtualRef out;
    out.first = parse_bundle();
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      out.second = parse_bundle();
    }
    return out;
  }

  BundleRef parse_bundle() {
    skip_ws();
    std::size_t at = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      throw syntax("expected bundle name");
    BundleRef ref;
    ref.name = parse_ident();
    skip_ws();
    if (peek() == '~') {
      ++pos_;
      ref.dual = true;
    }
    ref.slot = ring_.find_slot(ref.name);
    if (ref.slot < 0) throw Error("UnknownBundle", "unknown bundle '" + ref.name + "'", at);
    return ref;
  }

  Partition parse_partition_inline() {
    skip_ws();
    std::size_t at = pos_;
    expect('(');
    std::vector<unsigned> parts;
    skip_ws();
    if (peek() == ')') {
      ++pos_;
    } else {
      while (true) {
        parts.push_back(parse_uint("partition part"));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
    }
    try {
      return Partition(std::move(parts));
    } catch (const Error&) {
      throw Error("SyntaxError", "partition parts must be weakly decreasing", at);
    }
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  unsigned parse_uint(const char* what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw syntax(std::string("expected ") + what);
    unsigned long value = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(src_[pos_] - '0');
      if (value > 1'000'000) throw syntax("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  Int parse_int() {
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits += src_[pos_++];
    return Int(digits);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw syntax(std::string("expected '") + c + "'");
    ++pos_;
  }
  Error syntax(const std::string& message) const {
    return Error("SyntaxError", message + " at offset " + std::to_string(pos_), pos_);
  }

  static ExprPtr node(ExprNode::Kind kind, std::size_t pos, ExprPtr lhs, ExprPtr rhs = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->pos = pos;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  std::string_view src_;
  const BundleRing& ring_;
  std::size_t pos_ = 0;
};

inline FormalBundle to_bundle(const BundleRef& ref) {
  FormalBundle b = FormalBundle::slot(static_cast<std::size_t>(ref.slot));
  return ref.dual ? FormalBundle::dual(std::move(b)) : b;
}

}  // namespace detail

/// Parses and validates an expression against the declared ring.  Errors:
/// SyntaxError (with source offset), UnknownBundle, DegreeOverflow.
inline ExprPtr parse_expr(std::string_view src, const BundleRing& ring) {
  return detail::ExprParser(src, ring).parse();
}

/// Evaluates a parse tree to an exact polynomial in the ring's Chern
/// variables.  When max_degree is set, results exceeding it are rejected.
inline Poly evaluate_expr(const BundleRing& ring, const ExprPtr& root,
                          std::optional<unsigned> max_degree = std::nullopt) {
  auto eval = [&](auto&& self, const ExprPtr& n) -> Poly {
    switch (n->kind) {
      case ExprNode::Kind::Literal:
        return Poly(n->literal);
      case ExprNode::Kind::Chern: {
        FormalBundle first = detail::to_bundle(n->bundles.first);
        if (!n->bundles.second) return chern_class(ring, first, n->chern_index);
        FormalBundle second = detail::to_bundle(*n->bundles.second);
        return virtual_chern_series(ring, first, second, n->chern_index)[n->chern_index];
      }
      case ExprNode::Kind::Schur: {
        FormalBundle first = detail::to_bundle(n->bundles.first);
        FormalBundle second = n->bundles.second ? detail::to_bundle(*n->bundles.second)
                                                : FormalBundle::zero();
        return super_schur(ring, n->shape, first, second);
      }
      case ExprNode::Kind::Add:
        return self(self, n->lhs) + self(self, n->rhs);
      case ExprNode::Kind::Sub:
        return self(self, n->lhs) - self(self, n->rhs);
      case ExprNode::Kind::Mul:
        return self(self, n->lhs) * self(self, n->rhs);
      case ExprNode::Kind::Negate:
        return -self(self, n->lhs);
      case ExprNode::Kind::Pow: {
        Poly base = self(self, n->lhs);
        Poly out = Poly::one();
        for (unsigned i = 0; i < n->exponent; ++i) out = out * base;
        return out;
      }
    }
    return {};
  };
  Poly result = eval(eval, root);
  if (max_degree && ring.degree(result) > *max_degree)
    throw Error("DegreeOverflow", "result degree " + std::to_string(ring.degree(result)) +
                                      " exceeds the declared bound " +
                                      std::to_string(*max_degree));
  return result;
}

/// Declared ring, parsed from "E:2,F:2"; the optional working-degree bound
/// is supplied separately (CLI flag).
struct RingDecl {
  std::vector<Slot> slots;
  std::optional<unsigned> max_degree;
};

inline RingDecl parse_ring_decl(std::string_view text) {
  RingDecl decl;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    return Error("SyntaxError", "bad ring declaration '" + std::string(text) + "': " + what, pos);
  };
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) throw fail("expected bundle name");
    std::string name(text.substr(start, pos - start));
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') throw fail("expected ':'");
    ++pos;
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw fail("expected rank");
    unsigned long rank = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      rank = rank * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (rank > 1000) throw fail("rank too large");
      ++pos;
    }
    decl.slots.push_back({std::move(name), static_cast<unsigned>(rank)});
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos != text.size()) throw fail("trailing characters");
  return decl;
}

}  // namespace schurtp
