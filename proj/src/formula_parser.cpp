#include "hourglass/formula_parser.hpp"

#include <algorithm>

#include "formula_parsing.hpp"

namespace hourglass {
namespace detail {

namespace {

Formula parse_implic(TokenStream& ts, const AtomCheck& check_atom);

Formula parse_prim(TokenStream& ts, const AtomCheck& check_atom) {
  const Token& tok = ts.peek();
  switch (tok.kind) {
    case Tok::Ident: {
      Token ident = ts.advance();
      if (ident.text == "true") return Formula::truth();
      if (ident.text == "false") return Formula::falsity();
      check_atom(ident.text, ident.pos);
      return Formula::atom(ident.text);
    }
    case Tok::LParen: {
      ts.advance();
      Formula inner = parse_implic(ts, check_atom);
      ts.expect(Tok::RParen, "')'");
      return inner;
    }
    default:
      throw SyntaxError(tok.pos,
                        std::string("expected 'true', 'false', an atom name or "
                                    "'(', found ") +
                            token_name(tok.kind));
  }
}

Formula parse_neg(TokenStream& ts, const AtomCheck& check_atom) {
  if (ts.accept(Tok::Bang)) return Formula::negation(parse_neg(ts, check_atom));
  return parse_prim(ts, check_atom);
}

Formula parse_conj(TokenStream& ts, const AtomCheck& check_atom) {
  Formula f = parse_neg(ts, check_atom);
  while (ts.accept(Tok::Amp)) {
    f = Formula::conjunction(std::move(f), parse_neg(ts, check_atom));
  }
  return f;
}

Formula parse_disj(TokenStream& ts, const AtomCheck& check_atom) {
  Formula f = parse_conj(ts, check_atom);
  while (ts.accept(Tok::Pipe)) {
    f = Formula::disjunction(std::move(f), parse_conj(ts, check_atom));
  }
  return f;
}

Formula parse_implic(TokenStream& ts, const AtomCheck& check_atom) {
  Formula lhs = parse_disj(ts, check_atom);
  if (ts.accept(Tok::Arrow)) {
    return Formula::implication(std::move(lhs), parse_implic(ts, check_atom));
  }
  return lhs;
}

}  // namespace

Formula parse_formula_tokens(TokenStream& ts, const AtomCheck& check_atom) {
  return parse_implic(ts, check_atom);
}

}  // namespace detail

Formula parse_formula(const std::string& text, const std::vector<Atom>& vocab) {
  detail::TokenStream ts(text, detail::Lexer::Mode::Formula);
  Formula f = detail::parse_formula_tokens(
      ts, [&](const std::string& name, SourcePos pos) {
        bool known = std::any_of(vocab.begin(), vocab.end(),
                                 [&](const Atom& a) { return a.name == name; });
        if (!known) throw UnknownAtom(name, pos);
      });
  if (!ts.check(detail::Tok::End)) {
    throw SyntaxError(ts.peek().pos,
                      std::string("expected an operator or end of input, found ") +
                          detail::token_name(ts.peek().kind));
  }
  return f;
}

}  // namespace hourglass
