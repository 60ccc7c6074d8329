#pragma once

#include <iosfwd>
#include <string>

#include "svs/ff.hpp"
#include "svs/poly.hpp"

namespace svs::io {

/// Field spec line `q p k [m_0 m_1 ... m_k]`, modulus low-to-high, omitted
/// when k = 1.
std::string format_field_spec(const FieldCtx& ctx);
/// Parses either a full spec line or the shorthand `q` (field of order q
/// with the default modulus).
FieldCtx parse_field_spec(const std::string& text);

struct PolyFile {
  FieldCtx field;
  MultiPoly poly;
};

/// Text format: header `POLY q p k r d`, then one line per nonzero term:
/// `coeff_idx e_1 ... e_r`. The writer emits terms in graded-lex order; the
/// reader accepts any order and rejects duplicate exponent vectors.
std::string format_poly(const MultiPoly& poly, const FieldCtx& ctx);
PolyFile parse_poly(std::istream& in);
PolyFile parse_poly_text(const std::string& text);

/// Inline term list `coeff:e_1,...,e_r` separated by spaces, e.g.
/// `1:1,1 2:0,0` for X1*X2 - 1 over F_3. r is inferred from the exponent
/// lists and d from the largest total degree (at least min_d).
MultiPoly parse_poly_inline(const std::string& text, const FieldCtx& ctx,
                            unsigned min_d = 0);

}  // namespace svs::io
