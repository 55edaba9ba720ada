#include "bh/syntax.hpp"

#include "bh/dilator_lib.hpp"
#include "parse_util.hpp"

namespace bh {
namespace {

Term parse_term_at(detail::Cursor& cur, TermStore& store) {
    if (!cur.consume_word("th")) cur.fail("expected 'th('");
    cur.expect('(');
    Token tok = parse_token(cur.text, cur.pos);
    std::vector<Term> support;
    if (cur.try_consume(';')) {
        do support.push_back(parse_term_at(cur, store));
        while (cur.try_consume(','));
    }
    cur.expect(')');
    return store.intern(tok, support);
}

DilatorPtr parse_selector_at(detail::Cursor& cur) {
    const std::string name = cur.identifier();
    if (name == "successor") return make_successor();
    if (name == "identity") return make_identity();
    if (name == "omega") return make_omega_power();
    if (name == "constant") {
        cur.expect(':');
        return make_constant(cur.nat());
    }
    if (name == "sum" || name == "product") {
        cur.expect('(');
        DilatorPtr a = parse_selector_at(cur);
        cur.expect(',');
        DilatorPtr b = parse_selector_at(cur);
        cur.expect(')');
        return name == "sum" ? make_sum(std::move(a), std::move(b)) : make_product(std::move(a), std::move(b));
    }
    cur.fail("unknown dilator '" + name + "'");
}

}  // namespace

Term parse_term(std::string_view text, TermStore& store) {
    detail::Cursor cur{text, 0};
    Term t = parse_term_at(cur, store);
    cur.expect_end();
    return t;
}

BHElement parse_bh(std::string_view text, const StageTower& tower) {
    detail::Cursor cur{text, 0};
    cur.expect('@');
    const std::size_t n = cur.nat();
    cur.expect(':');
    Term t = parse_term_at(cur, tower.store());
    cur.expect_end();
    if (!tower.stage(n + 1).contains(t))
        throw SemanticError(format_term(t) + " is not an element of X_" + std::to_string(n + 1));
    if (tower.stage(n).embed_preimage(t))
        throw SemanticError(format_term(t) + " already occurs in X_" + std::to_string(n) +
                            "; it is not born at stage " + std::to_string(n));
    return {n, t};
}

DilatorPtr parse_selector(std::string_view text) {
    detail::Cursor cur{text, 0};
    DilatorPtr d = parse_selector_at(cur);
    cur.expect_end();
    return d;
}

}  // namespace bh
