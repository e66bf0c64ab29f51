#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chargenus/motivic.hpp"

namespace chargenus::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Variety expression AST.
struct Expr {
  enum class Kind { Proj, Affine, Lefschetz, Point, Atom, Product, Bundle, Hyp, Scissor };

  Kind kind = Kind::Point;
  int n = 0;                  ///< Proj, Affine
  std::string name;           ///< Atom
  ExprPtr left, right;        ///< Product, Scissor; `left` is the base/ambient for Bundle and Hyp
  std::vector<int> integers;  ///< Bundle offsets, Hyp multidegree

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Parses
///   expr := term ('*' term)*
///   term := 'P(' INT ')' | 'A(' INT ')' | 'L' | 'pt' | IDENT
///         | 'Pbundle(' expr ';' INT (',' INT)* ')' | 'Hyp(' expr ';' INT (',' INT)* ')'
///         | '(' expr ')' | 'scissor(' expr ',' expr ')'
/// IDENT must name an atom of `registry` (P<n> names are always known).
/// Throws ParseError with the position and the expected tokens.
ExprPtr parse_expr(std::string_view text, const AtomRegistry& registry = AtomRegistry::global());

/// Canonical text form; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

bool contains_kind(const Expr& e, Expr::Kind kind);

}  // namespace chargenus::cli
