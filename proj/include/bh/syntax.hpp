#ifndef BH_SYNTAX_HPP
#define BH_SYNTAX_HPP

#include <string>
#include <string_view>

#include "bh/bh_limit.hpp"
#include "bh/dilator.hpp"
#include "bh/term.hpp"

namespace bh {

// term := "th(" token ( ";" term { "," term } )? ")", whitespace ignored between
// tokens. Only syntax is checked; throws ParseError.
Term parse_term(std::string_view text, TermStore& store);

// bhterm := "@" nat ":" term. Throws ParseError on bad syntax and
// SemanticError when the term is not a canonical element born at that stage.
BHElement parse_bh(std::string_view text, const StageTower& tower);

// S := name | name ":" nat | name "(" S "," S ")" with names successor,
// identity, omega, constant:k, sum(S,S), product(S,S). Throws ParseError.
DilatorPtr parse_selector(std::string_view text);

}  // namespace bh

#endif
