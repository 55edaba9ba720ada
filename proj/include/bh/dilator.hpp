#ifndef BH_DILATOR_HPP
#define BH_DILATOR_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bh/errors.hpp"
#include "bh/finite_orders.hpp"
#include "bh/token.hpp"

namespace bh {

// A finite portion of a possibly infinite collection. `exhaustive` is set only
// when the items are provably everything there is.
template <class T>
struct Enumerated {
    std::vector<T> items;
    bool exhaustive = false;
};

struct NormalForm {
    std::vector<std::size_t> support;  // strictly increasing positions in {0..n-1}
    Token token;                       // full-support token at arity support.size()
};

// A prae-dilator given by its restriction to the finite orders {0..n-1}.
//
// Implementations must be pure and satisfy, for all embeddings f: m -> n, g: n -> k:
//   map_token(id, s) == s,  map_token(compose(f,g), s) == map_token(g, map_token(f, s));
//   compare_at(m, s, t) < 0  implies  compare_at(n, map_token(f,s), map_token(f,t)) < 0;
//   supp_at(n, map_token(f, s)) == f[supp_at(m, s)];
//   s == map_token(inclusion of supp_at(n, s), t) for some t.
// None of this is assumed downstream; check_dilator_laws tests it.
class Dilator {
public:
    virtual ~Dilator() = default;

    // Selector syntax naming this dilator, e.g. "sum(successor,omega)".
    virtual std::string name() const = 0;

    virtual bool is_token(std::size_t n, const Token& t) const = 0;
    virtual std::strong_ordering compare_at(std::size_t n, const Token& a, const Token& b) const = 0;
    virtual Token map_token(const Embedding& f, const Token& t) const = 0;
    virtual std::vector<std::size_t> supp_at(std::size_t n, const Token& t) const = 0;

    // At most `budget` tokens of T_n, sorted by compare_at.
    virtual Enumerated<Token> enumerate_at(std::size_t n, std::size_t budget) const = 0;

    // Factorization of `t` through the inclusion of its support. The default
    // searches enumerate_at and throws DefectError when no preimage is found.
    virtual NormalForm normal_form(std::size_t n, const Token& t) const;

    bool has_full_support(std::size_t n, const Token& t) const { return supp_at(n, t).size() == n; }

    // Up to `budget` full-support tokens of T_k, searching enumerate_at with growing
    // budgets up to normal_form_search_budget.
    Enumerated<Token> full_support_tokens(std::size_t k, std::size_t budget) const;

    static constexpr std::size_t normal_form_search_budget = 4096;
};

using DilatorPtr = std::shared_ptr<const Dilator>;

inline const char* ordering_name(std::strong_ordering o) {
    return o < 0 ? "LT" : o > 0 ? "GT" : "EQ";
}

inline std::strong_ordering reverse(std::strong_ordering o) { return 0 <=> o; }

// An element of T_X for an arbitrary linear order X, stored as its support
// (sorted in X) together with a full-support token at arity |support|.
template <class E>
struct CodedElement {
    std::vector<E> support;
    Token token;

    friend bool operator==(const CodedElement&, const CodedElement&) = default;
};

namespace detail {

// Sorted union of two sorted lists plus the position of each input inside it.
template <class E, class Cmp>
std::vector<E> merge_supports(std::span<const E> a, std::span<const E> b, Cmp cmp,
                              std::vector<std::size_t>& pos_a, std::vector<std::size_t>& pos_b) {
    std::vector<E> out;
    out.reserve(a.size() + b.size());
    pos_a.clear();
    pos_b.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            pos_a.push_back(out.size());
            out.push_back(a[i++]);
        } else if (i == a.size()) {
            pos_b.push_back(out.size());
            out.push_back(b[j++]);
        } else {
            auto c = cmp(a[i], b[j]);
            if (c < 0) {
                pos_a.push_back(out.size());
                out.push_back(a[i++]);
            } else if (c > 0) {
                pos_b.push_back(out.size());
                out.push_back(b[j++]);
            } else {
                pos_a.push_back(out.size());
                pos_b.push_back(out.size());
                out.push_back(a[i++]);
                ++j;
            }
        }
    }
    return out;
}

}  // namespace detail

// Compares two coded elements inside T_a, a = union of both supports.
template <class E, class Cmp>
std::strong_ordering compare_coded(const Dilator& T, Cmp cmp, const CodedElement<E>& x,
                                   const CodedElement<E>& y) {
    std::vector<std::size_t> px, py;
    auto merged = detail::merge_supports<E>(x.support, y.support, cmp, px, py);
    const std::size_t k = merged.size();
    Token tx = T.map_token(Embedding(k, std::move(px)), x.token);
    Token ty = T.map_token(Embedding(k, std::move(py)), y.token);
    return T.compare_at(k, tx, ty);
}

// T_f applied to a coded element; f must be strictly increasing on the support.
template <class E, class F>
auto map_coded(F f, const CodedElement<E>& e) {
    using R = std::decay_t<std::invoke_result_t<F, const E&>>;
    CodedElement<R> out;
    out.support.reserve(e.support.size());
    for (const E& x : e.support) out.support.push_back(f(x));
    out.token = e.token;
    return out;
}

// The raw token at arity |carrier| denoted by `e`, where carrier is a sorted
// list containing e's support.
template <class E, class Cmp>
Token decode_in(const Dilator& T, const std::vector<E>& carrier, const CodedElement<E>& e, Cmp cmp) {
    return T.map_token(inclusion_of<E>(e.support, carrier, cmp), e.token);
}

// Normal form of a raw token over the sorted carrier.
template <class E>
CodedElement<E> encode_from(const Dilator& T, const std::vector<E>& carrier, const Token& t) {
    NormalForm nf = T.normal_form(carrier.size(), t);
    CodedElement<E> out;
    out.token = std::move(nf.token);
    for (std::size_t p : nf.support) out.support.push_back(carrier[p]);
    return out;
}

namespace detail {

// First `limit` k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> first_subsets(std::size_t n, std::size_t k, std::size_t limit,
                                                    bool& complete);

}  // namespace detail

// Coded elements with support inside `sample` (sorted in X) and token among the
// first `budget` tokens of each arity. At most `cap` results; arities are
// interleaved round-robin and (token, subset) pairs diagonally, so every
// candidate is eventually reached as the cap grows. Sorted by compare_coded.
template <class E, class Cmp>
Enumerated<CodedElement<E>> enumerate_coded(const Dilator& T, const std::vector<E>& sample,
                                            std::size_t budget, Cmp cmp,
                                            std::size_t cap = static_cast<std::size_t>(-1)) {
    struct Arity {
        std::vector<Token> tokens;
        std::vector<std::vector<std::size_t>> subsets;
        std::size_t diag = 0, step = 0;  // position along the current anti-diagonal
        bool done = false;
    };
    Enumerated<CodedElement<E>> out;
    bool exhaustive = true;
    std::vector<Arity> arities;
    for (std::size_t k = 0; k <= sample.size(); ++k) {
        Enumerated<Token> toks = T.full_support_tokens(k, budget);
        exhaustive = exhaustive && toks.exhaustive;
        if (toks.items.empty()) continue;
        bool complete = false;
        Arity a;
        a.subsets = detail::first_subsets(sample.size(), k, cap, complete);
        exhaustive = exhaustive && complete;
        a.tokens = std::move(toks.items);
        arities.push_back(std::move(a));
    }

    // Walks anti-diagonals i + j = diag of the (token i, subset j) grid.
    auto seek = [](const Arity& a, std::size_t& diag, std::size_t& step, std::size_t& i,
                   std::size_t& j) -> bool {
        const std::size_t nt = a.tokens.size(), ns = a.subsets.size();
        if (nt == 0 || ns == 0) return false;
        while (diag <= nt + ns - 2) {
            if (step > diag) {
                ++diag;
                step = 0;
                continue;
            }
            i = step;
            j = diag - step;
            ++step;
            if (i < nt && j < ns) return true;
        }
        return false;
    };

    bool capped = false;
    bool any_left = !arities.empty();
    while (any_left && !capped) {
        any_left = false;
        for (Arity& a : arities) {
            if (a.done) continue;
            std::size_t d = a.diag, st = a.step, i = 0, j = 0;
            if (!seek(a, d, st, i, j)) {
                a.done = true;
                continue;
            }
            if (out.items.size() >= cap) {
                capped = true;
                break;
            }
            a.diag = d;
            a.step = st;
            CodedElement<E> e;
            e.token = a.tokens[i];
            for (std::size_t p : a.subsets[j]) e.support.push_back(sample[p]);
            out.items.push_back(std::move(e));
            any_left = true;
        }
    }
    if (capped) exhaustive = false;
    std::sort(out.items.begin(), out.items.end(), [&](const auto& x, const auto& y) {
        return compare_coded(T, cmp, x, y) < 0;
    });
    out.exhaustive = exhaustive;
    return out;
}

}  // namespace bh

#endif
