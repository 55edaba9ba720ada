#ifndef BH_FINITE_ORDERS_HPP
#define BH_FINITE_ORDERS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace bh {

// Skeletal finite linear order {0, ..., size-1}.
struct FinOrder {
    std::size_t size = 0;

    bool contains(std::size_t i) const { return i < size; }
    friend bool operator==(FinOrder, FinOrder) = default;
};

// Strictly increasing map {0..m-1} -> {0..n-1}.
class Embedding {
public:
    Embedding() = default;
    // Throws std::invalid_argument unless images are strictly increasing and < codomain_size.
    Embedding(std::size_t codomain_size, std::vector<std::size_t> images);

    std::size_t domain_size() const { return images_.size(); }
    std::size_t codomain_size() const { return codomain_; }
    const std::vector<std::size_t>& images() const { return images_; }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }

    bool is_identity() const { return images_.size() == codomain_; }

    friend bool operator==(const Embedding&, const Embedding&) = default;

private:
    std::size_t codomain_ = 0;
    std::vector<std::size_t> images_;
};

Embedding identity_embedding(std::size_t n);

// First f, then g.
Embedding compose(const Embedding& f, const Embedding& g);

// Every strictly increasing map m -> n, in lexicographic order of image lists.
std::vector<Embedding> all_embeddings(std::size_t m, std::size_t n);

std::string to_string(const Embedding& f);

// Finite subset of a linearly ordered carrier, stored strictly sorted.
template <class E>
class FinSubset {
public:
    FinSubset() = default;

    template <class Cmp>
    static FinSubset from_unsorted(std::vector<E> members, Cmp cmp) {
        std::sort(members.begin(), members.end(),
                  [&](const E& a, const E& b) { return cmp(a, b) < 0; });
        auto last = std::unique(members.begin(), members.end(),
                                [&](const E& a, const E& b) { return cmp(a, b) == 0; });
        members.erase(last, members.end());
        FinSubset s;
        s.members_ = std::move(members);
        return s;
    }

    // Caller guarantees strict sortedness.
    static FinSubset from_sorted(std::vector<E> members) {
        FinSubset s;
        s.members_ = std::move(members);
        return s;
    }

    const std::vector<E>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    friend bool operator==(const FinSubset&, const FinSubset&) = default;

private:
    std::vector<E> members_;
};

template <class Range, class Cmp>
bool is_strictly_sorted(const Range& xs, Cmp cmp) {
    auto it = std::begin(xs);
    if (it == std::end(xs)) return true;
    for (auto next = std::next(it); next != std::end(xs); ++it, ++next)
        if (!(cmp(*it, *next) < 0)) return false;
    return true;
}

// Positions of the members of `subset` inside the sorted `carrier`.
template <class E, class Cmp>
Embedding inclusion_of(std::span<const E> subset, std::span<const E> carrier, Cmp cmp) {
    std::vector<std::size_t> pos;
    pos.reserve(subset.size());
    std::size_t j = 0;
    for (const E& s : subset) {
        while (j < carrier.size() && cmp(carrier[j], s) < 0) ++j;
        if (j == carrier.size() || cmp(carrier[j], s) != 0)
            throw std::invalid_argument("inclusion_of: member not found in carrier");
        pos.push_back(j++);
    }
    return Embedding(carrier.size(), std::move(pos));
}

template <class E, class F, class FCmp>
FinSubset<std::invoke_result_t<F, const E&>> finset_map(F f, const FinSubset<E>& a, FCmp cmp) {
    using R = std::invoke_result_t<F, const E&>;
    std::vector<R> out;
    out.reserve(a.size());
    for (const E& x : a.members()) out.push_back(f(x));
    return FinSubset<R>::from_unsorted(std::move(out), cmp);
}

// a <fin b: every s in a lies strictly below some t in b.
template <class RangeA, class RangeB, class Cmp>
bool lt_fin(const RangeA& a, const RangeB& b, Cmp cmp) {
    return std::all_of(std::begin(a), std::end(a), [&](const auto& s) {
        return std::any_of(std::begin(b), std::end(b), [&](const auto& t) { return cmp(s, t) < 0; });
    });
}

template <class RangeA, class RangeB, class Cmp>
bool leq_fin(const RangeA& a, const RangeB& b, Cmp cmp) {
    return std::all_of(std::begin(a), std::end(a), [&](const auto& s) {
        return std::any_of(std::begin(b), std::end(b), [&](const auto& t) { return cmp(s, t) <= 0; });
    });
}

// a <fin {t}
template <class Range, class E, class Cmp>
bool lt_fin_single(const Range& a, const E& t, Cmp cmp) {
    return std::all_of(std::begin(a), std::end(a), [&](const auto& s) { return cmp(s, t) < 0; });
}

// {s} <=fin b
template <class E, class Range, class Cmp>
bool leq_fin_single(const E& s, const Range& b, Cmp cmp) {
    return std::any_of(std::begin(b), std::end(b), [&](const auto& t) { return cmp(s, t) <= 0; });
}

}  // namespace bh

#endif
