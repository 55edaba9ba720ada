#include "bh/term.hpp"

#include <algorithm>

namespace bh {
namespace {

std::size_t body_hash(const Token& token, const std::vector<Term>& support) {
    std::size_t h = token.hash();
    for (Term s : support) h ^= std::hash<Term>{}(s) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

Term TermStore::intern(const Token& token, const std::vector<Term>& support) {
    const std::size_t h = body_hash(token, support);
    std::lock_guard lock(mu_);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it)
        if (it->second->token == token && it->second->support == support) return Term(it->second);
    TermNode& n = nodes_.emplace_back();
    n.token = token;
    n.support = support;
    n.hash = h;
    n.id = nodes_.size() - 1;
    std::uint32_t below = 0;
    for (Term s : support) below = std::max(below, s.length());
    n.length = below + 1;
    index_.emplace(h, &n);
    return Term(&n);
}

std::size_t TermStore::size() const {
    std::lock_guard lock(mu_);
    return nodes_.size();
}

std::string format_term(Term t) {
    std::string out = "th(" + format_token(t.token());
    for (std::size_t i = 0; i < t.support().size(); ++i) {
        out += i == 0 ? ';' : ',';
        out += format_term(t.support()[i]);
    }
    out += ')';
    return out;
}

}  // namespace bh
