#include "bh/bh_system.hpp"

#include <algorithm>
#include <unordered_set>

namespace bh {
namespace {

[[noreturn]] void empty_carrier(const char* op) {
    throw std::logic_error(std::string("EmptySystem::") + op + ": the empty order has no elements");
}

// One evaluation of the comparison clauses; `rec` compares in theta_T(X).
template <class Rec>
std::strong_ordering theta_step(const BHSystem& X, Term s, Term t, Rec&& rec, ComparisonTrace* trace) {
    if (s == t) return std::strong_ordering::equal;
    const auto body = compare_coded(X.dilator(), X.comparator(), s.body(), t.body());
    if (body == 0)
        throw DefectError("linearity of T_X", "distinct terms " + format_term(s) + " and " + format_term(t) +
                                                  " have equal bodies");
    const bool s_body_lower = body < 0;
    const Term lo = s_body_lower ? s : t;
    const Term hi = s_body_lower ? t : s;
    const std::string pad = trace ? std::string(2 * trace->depth, ' ') : std::string();
    if (trace) trace->steps.push_back(pad + "body(" + format_term(lo) + ") < body(" + format_term(hi) + ")");
    // lo < hi by clause (i) iff every iota_X(x), x in supp(lo), lies below hi;
    // otherwise hi <= iota_X(x) for some x and hi < lo by clause (ii).
    for (Term x : lo.support()) {
        const Term ix = X.embed(x);
        if (ix.length() >= lo.length())
            throw DefectError("system equation", "iota(" + format_term(x) + ") = " + format_term(ix) +
                                                     " is not shorter than " + format_term(lo));
        const auto c = rec(ix, hi);
        if (trace)
            trace->steps.push_back(pad + "  iota(" + format_term(x) + ") " + ordering_name(c) + " " + format_term(hi));
        if (c >= 0) {
            if (trace) trace->steps.push_back(pad + "  clause (ii): " + format_term(hi) + " < " + format_term(lo));
            return s_body_lower ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    if (trace) trace->steps.push_back(pad + "  clause (i): " + format_term(lo) + " < " + format_term(hi));
    return s_body_lower ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

EmptySystem::EmptySystem(DilatorPtr dilator, std::shared_ptr<TermStore> store)
    : dilator_(std::move(dilator)), store_(std::move(store)) {}

std::strong_ordering EmptySystem::compare(Term, Term) const { empty_carrier("compare"); }
std::uint32_t EmptySystem::length(Term) const { empty_carrier("length"); }
Term EmptySystem::embed(Term) const { empty_carrier("embed"); }

std::uint32_t theta_length(const BHSystem& X, const CodedElement<Term>& sigma) {
    std::uint32_t m = 0;
    for (Term x : sigma.support) m = std::max(m, X.length(x));
    return m + 1;
}

std::strong_ordering theta_compare(const BHSystem& X, Term s, Term t, ComparisonTrace* trace) {
    auto rec = [&](Term a, Term b) {
        if (!trace) return theta_compare(X, a, b, nullptr);
        ++trace->depth;
        const auto r = theta_compare(X, a, b, trace);
        --trace->depth;
        return r;
    };
    return theta_step(X, s, t, rec, trace);
}

Term collapse(const BHSystem& X, const CodedElement<Term>& sigma) { return X.store().intern(sigma); }

Term embed_next(const BHSystem& X, Term s) {
    return X.store().intern(map_coded([&](Term x) { return X.embed(x); }, s.body()));
}

ThetaSystem::ThetaSystem(SystemPtr base, std::string label)
    : base_(std::move(base)), label_(label.empty() ? "theta(" + base_->describe() + ")" : std::move(label)) {}

bool ThetaSystem::contains(Term s) const {
    const auto& sup = s.support();
    const std::size_t k = sup.size();
    const Dilator& T = dilator();
    if (!T.is_token(k, s.token()) || !T.has_full_support(k, s.token())) return false;
    for (Term x : sup)
        if (!base_->contains(x)) return false;
    return is_strictly_sorted(sup, base_->comparator());
}

std::strong_ordering ThetaSystem::compare(Term s, Term t) const {
    if (s == t) return std::strong_ordering::equal;
    const bool swapped = s.id() > t.id();
    const std::uint64_t lo = swapped ? t.id() : s.id(), hi = swapped ? s.id() : t.id();
    const std::uint64_t key = (lo << 32) ^ hi;
    Shard& shard = memo_[(lo * 31 + hi) % kShards];
    auto orient = [&](std::int8_t v) {
        auto o = v < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return swapped ? reverse(o) : o;
    };
    {
        std::lock_guard lock(shard.mu);
        if (auto it = shard.table.find(key); it != shard.table.end()) return orient(it->second);
    }
    const auto r = theta_step(
        *base_, s, t, [this](Term a, Term b) { return compare(a, b); }, nullptr);
    const auto stored = swapped ? reverse(r) : r;
    {
        std::lock_guard lock(shard.mu);
        shard.table.emplace(key, static_cast<std::int8_t>(stored < 0 ? -1 : 1));
    }
    return r;
}

std::optional<Term> ThetaSystem::embed_preimage(Term s) const {
    std::vector<Term> pre;
    pre.reserve(s.support().size());
    for (Term y : s.support()) {
        auto p = base_->embed_preimage(y);
        if (!p) return std::nullopt;
        pre.push_back(*p);
    }
    return store().intern(s.token(), pre);
}

Enumerated<Term> ThetaSystem::enumerate(std::size_t budget) const {
    std::lock_guard lock(enum_mu_);
    if (auto it = enum_cache_.find(budget); it != enum_cache_.end()) return it->second;
    const Enumerated<Term> sample = base_->enumerate(budget);
    const auto coded = enumerate_coded(dilator(), sample.items, budget, base_->comparator(), budget);
    Enumerated<Term> out;
    out.exhaustive = sample.exhaustive && coded.exhaustive;
    out.items.reserve(coded.items.size());
    for (const auto& sigma : coded.items) out.items.push_back(collapse(*base_, sigma));
    std::sort(out.items.begin(), out.items.end(), [this](Term a, Term b) { return compare(a, b) < 0; });
    enum_cache_.emplace(budget, out);
    return out;
}

std::size_t ThetaSystem::memo_size() const {
    std::size_t n = 0;
    for (auto& s : memo_) {
        std::lock_guard lock(s.mu);
        n += s.table.size();
    }
    return n;
}

std::shared_ptr<const ThetaSystem> iterate(SystemPtr X, std::string label) {
    return std::make_shared<const ThetaSystem>(std::move(X), std::move(label));
}

std::vector<Term> subterm_closure(const ThetaSystem& sys, Term s) {
    std::unordered_set<Term> seen;
    std::vector<Term> todo{s};
    while (!todo.empty()) {
        Term r = todo.back();
        todo.pop_back();
        if (!seen.insert(r).second) continue;
        for (Term x : r.support()) todo.push_back(sys.base().embed(x));
    }
    std::vector<Term> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](Term a, Term b) { return sys.compare(a, b) < 0; });
    return out;
}

}  // namespace bh
