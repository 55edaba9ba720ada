#include "bh/dilator.hpp"

#include <numeric>

namespace bh {

NormalForm Dilator::normal_form(std::size_t n, const Token& t) const {
    NormalForm nf;
    nf.support = supp_at(n, t);
    const std::size_t k = nf.support.size();
    Embedding incl(n, nf.support);
    Enumerated<Token> candidates = enumerate_at(k, normal_form_search_budget);
    for (const Token& c : candidates.items) {
        if (map_token(incl, c) == t) {
            if (!has_full_support(k, c))
                throw DefectError("support condition",
                                  "preimage " + format_token(c) + " of " + format_token(t) +
                                      " lacks full support");
            nf.token = c;
            return nf;
        }
    }
    throw DefectError("support condition", format_token(t) + " at arity " + std::to_string(n) +
                                               " does not factor through its support");
}

Enumerated<Token> Dilator::full_support_tokens(std::size_t k, std::size_t budget) const {
    Enumerated<Token> out;
    if (budget == 0) return out;
    // most tokens of a large arity miss some index, so widen the search
    for (std::size_t b = budget;; b *= 2) {
        Enumerated<Token> all = enumerate_at(k, b);
        out.items.clear();
        for (Token& t : all.items)
            if (has_full_support(k, t)) out.items.push_back(std::move(t));
        if (out.items.size() > budget || (out.items.size() == budget && !all.exhaustive)) {
            out.items.resize(budget);
            out.exhaustive = false;
            return out;
        }
        if (all.exhaustive || out.items.size() == budget || b >= normal_form_search_budget) {
            out.exhaustive = all.exhaustive;
            return out;
        }
    }
}

namespace detail {

std::vector<std::vector<std::size_t>> first_subsets(std::size_t n, std::size_t k, std::size_t limit,
                                                    bool& complete) {
    std::vector<std::vector<std::size_t>> out;
    complete = true;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        if (out.size() >= limit) {
            complete = false;
            return out;
        }
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

}  // namespace bh
