#pragma once

// Text syntax shared by classical and PLQO formulas.
//
//   formula := iff
//   iff     := impl ("<->" impl)*          left-associative
//   impl    := or ("->" impl)?             right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | primary
//
// Classical primaries are `T`, `F`, `B<k>` and parenthesized formulas. PLQO
// primaries are `O(alpha)`, `P(alpha) CMP term` with CMP one of = < <= > >=,
// and parenthesized PLQO formulas. Terms use integers, `n/m`, `x<k>`, + - *
// and parentheses.

#include "plqo/plqo.hpp"
#include "plqo/prop.hpp"

#include <string>
#include <string_view>

namespace plqo {

/// All three throw ParseError on malformed input and on trailing tokens.
PropFormula parse_prop(std::string_view text);
PlqoFormula parse_plqo(std::string_view text);
RcofTerm parse_term(std::string_view text);

/// With `compact` no spaces are emitted; that form is the variable key of x_alpha.
std::string print_prop(const PropFormula& alpha, bool compact = false);

std::string print_term(const RcofTerm& p);

struct PrintOptions {
  /// Writes every negation !phi as phi -> P(T) < 1 and disables derived sugar.
  /// Output in this mode does not parse back to the same tree.
  bool expand_negation = false;
};

std::string print_plqo(const PlqoFormula& phi, const PrintOptions& options = {});

}  // namespace plqo
