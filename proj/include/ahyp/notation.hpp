#pragma once

// Expression language for real reductive Lie algebras.
//
//   expr    := factor (sep factor)*          sep: x, ×, *, +, ⊕
//   factor  := primary ('/' quotient)*
//   primary := '{' expr '}' | '[' expr ']' | atom
//   atom    := sl(n,R|C|H) | su(n) | su(p,q) | su*(2n) | so(n) | so(p,q)
//            | so(n,C) | so*(2n) | sp(n) | sp(n,R) | sp(n,C) | sp(p,q)
//            | u(n) | u(p,q) | S(U(..) x U(..) ...)
//            | e6 | e7 | e8 | f4 | g2              compact
//            | e6(IV) | e6^IV | e6(-26) | g2(split) ...
//            | X(C) with X a type (A3, e6, ...)    complex, viewed as real
//            | T^k | R^k | 0
//
// Names are case-insensitive; SL, SO, Spin, PSL, O, ... all reduce to the
// Lie algebra. Quotients (/Z_n, /Z3, /{...}) and covering prefixes are
// dropped and reported through `group_data_discarded`.

#include <string>
#include <vector>

#include "ahyp/cones.hpp"

namespace ahyp {

struct AlgebraExpression {
  std::string source;
  ReductiveAlgebra normalized;
  bool group_data_discarded = false;  // quotient, cover or projective prefix dropped
  bool low_rank_normalized = false;   // an atom was rewritten by a low-rank isomorphism
  std::vector<std::string> notes;
};

/// Throws ParseError (with byte offset) or DomainError.
AlgebraExpression parse_expression(const std::string& source);
ReductiveAlgebra parse(const std::string& source);

/// Canonical text: sorted factors joined by " x ", then T^k and R^k.
std::string render(const ReductiveAlgebra& alg);
std::string render(const RealFormSpec& factor);

}  // namespace ahyp
