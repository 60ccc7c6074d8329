#include "svs/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace svs::io {
namespace {

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_u64(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    if (!tok.empty() && tok[0] == '-')
      throw ParseError(std::string("negative ") + what);
    const unsigned long long v = std::stoull(tok, &pos);
    if (pos != tok.size()) throw ParseError("");
    return v;
  } catch (const ParseError&) {
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  }
}

}  // namespace

std::string format_field_spec(const FieldCtx& ctx) {
  std::ostringstream out;
  out << ctx.q() << ' ' << ctx.p() << ' ' << ctx.k();
  for (std::uint64_t c : ctx.modulus()) out << ' ' << c;
  return out.str();
}

FieldCtx parse_field_spec(const std::string& text) {
  const auto toks = split_ws(text);
  if (toks.empty()) throw ParseError("empty field spec");
  if (toks.size() == 1) return FieldCtx::of_order(parse_u64(toks[0], "q"));
  if (toks.size() < 3) throw ParseError("field spec needs `q p k [m...]`");
  const std::uint64_t q = parse_u64(toks[0], "q");
  const std::uint64_t p = parse_u64(toks[1], "p");
  const auto k = static_cast<unsigned>(parse_u64(toks[2], "k"));
  std::vector<std::uint64_t> modulus;
  for (std::size_t i = 3; i < toks.size(); ++i)
    modulus.push_back(parse_u64(toks[i], "modulus coefficient"));
  if (k > 1 && modulus.empty()) {
    FieldCtx ctx = FieldCtx::make(p, k);
    if (ctx.q() != q) throw ParseError("field spec q does not equal p^k");
    return ctx;
  }
  FieldCtx ctx = FieldCtx::make(p, k, std::move(modulus));
  if (ctx.q() != q) throw ParseError("field spec q does not equal p^k");
  return ctx;
}

std::string format_poly(const MultiPoly& poly, const FieldCtx& ctx) {
  std::ostringstream out;
  out << "POLY " << ctx.q() << ' ' << ctx.p() << ' ' << ctx.k() << ' '
      << poly.r() << ' ' << poly.d() << '\n';
  for (std::size_t m = 0; m < poly.basis().size(); ++m) {
    if (poly.coeff(m).idx == 0) continue;
    out << poly.coeff(m).idx;
    for (unsigned e : poly.basis().exponents(m)) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

PolyFile parse_poly(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!split_ws(line).empty()) break;
  }
  auto header = split_ws(line);
  if (header.size() != 6 || header[0] != "POLY")
    throw ParseError("expected header `POLY q p k r d`");
  const std::uint64_t q = parse_u64(header[1], "q");
  const std::uint64_t p = parse_u64(header[2], "p");
  const auto k = static_cast<unsigned>(parse_u64(header[3], "k"));
  const auto r = static_cast<unsigned>(parse_u64(header[4], "r"));
  const auto d = static_cast<unsigned>(parse_u64(header[5], "d"));
  FieldCtx ctx = k == 1 ? FieldCtx::make(p, 1) : FieldCtx::make(p, k);
  if (ctx.q() != q) throw ParseError("poly header q does not equal p^k");
  if (r < 1) throw ParseError("poly header needs r >= 1");

  auto basis = make_basis(r, d);
  MultiPoly poly = MultiPoly::zero(basis);
  std::set<std::vector<unsigned>> seen;
  while (std::getline(in, line)) {
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != static_cast<std::size_t>(r) + 1)
      throw ParseError("term line needs `coeff e_1 ... e_r`");
    const std::uint64_t cidx = parse_u64(toks[0], "coefficient");
    if (cidx >= q) throw ParseError("coefficient index out of field range");
    std::vector<unsigned> exps(r);
    unsigned total = 0;
    for (unsigned v = 0; v < r; ++v) {
      exps[v] = static_cast<unsigned>(parse_u64(toks[v + 1], "exponent"));
      total += exps[v];
    }
    if (total > d) throw ParseError("term of total degree > d");
    if (!seen.insert(exps).second)
      throw ParseError("duplicate exponent vector in polynomial");
    poly.set_coeff(basis->rank(exps), Elem{cidx});
  }
  return PolyFile{std::move(ctx), std::move(poly)};
}

PolyFile parse_poly_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poly(in);
}

MultiPoly parse_poly_inline(const std::string& text, const FieldCtx& ctx,
                            unsigned min_d) {
  struct Term {
    std::uint64_t coeff;
    std::vector<unsigned> exps;
  };
  std::vector<Term> terms;
  unsigned r = 0, d = min_d;
  for (const std::string& tok : split_ws(text)) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw ParseError("inline term must look like `coeff:e_1,...,e_r`");
    Term term;
    term.coeff = parse_u64(tok.substr(0, colon), "coefficient");
    if (term.coeff >= ctx.q())
      throw ParseError("coefficient index out of field range");
    std::string rest = tok.substr(colon + 1);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    for (const std::string& e : split_ws(rest))
      term.exps.push_back(static_cast<unsigned>(parse_u64(e, "exponent")));
    if (term.exps.empty()) throw ParseError("term without exponents");
    if (r == 0) r = static_cast<unsigned>(term.exps.size());
    if (term.exps.size() != r)
      throw ParseError("inconsistent number of variables across terms");
    unsigned total = 0;
    for (unsigned e : term.exps) total += e;
    d = std::max(d, total);
    terms.push_back(std::move(term));
  }
  if (terms.empty()) throw ParseError("empty inline polynomial");
  auto basis = make_basis(r, d);
  MultiPoly poly = MultiPoly::zero(basis);
  std::set<std::vector<unsigned>> seen;
  for (const Term& term : terms) {
    if (!seen.insert(term.exps).second)
      throw ParseError("duplicate exponent vector in polynomial");
    poly.set_coeff(basis->rank(term.exps), Elem{term.coeff});
  }
  return poly;
}

}  // namespace svs::io
