#include "bh/bh_limit.hpp"

#include <algorithm>

namespace bh {

StageTower::StageTower(DilatorPtr dilator)
    : dilator_(std::move(dilator)), store_(std::make_shared<TermStore>()) {
    stages_.push_back(std::make_shared<const EmptySystem>(dilator_, store_));
}

SystemPtr StageTower::stage_ptr(std::size_t n) const {
    std::lock_guard lock(mu_);
    while (stages_.size() <= n)
        stages_.push_back(iterate(stages_.back(), "X_" + std::to_string(stages_.size())));
    return stages_[n];
}

const ThetaSystem& StageTower::theta_stage(std::size_t n) const {
    return static_cast<const ThetaSystem&>(stage(n + 1));
}

BHElement inject(const StageTower& tower, std::size_t n, Term s) {
    if (n == 0) throw std::invalid_argument("inject: X_0 is empty");
    std::size_t k = n;
    while (k >= 2) {
        auto pre = tower.stage(k - 1).embed_preimage(s);
        if (!pre) break;
        s = *pre;
        --k;
    }
    return {k - 1, s};
}

Term lift(const StageTower& tower, const BHElement& e, std::size_t m) {
    if (m < e.birth_stage) throw std::invalid_argument("lift: target stage below birth stage");
    Term cur = e.term;
    for (std::size_t k = e.birth_stage + 1; k <= m; ++k) cur = tower.stage(k).embed(cur);
    return cur;
}

std::strong_ordering compare_bh(const StageTower& tower, const BHElement& a, const BHElement& b) {
    if (a == b) return std::strong_ordering::equal;
    const std::size_t m = std::max(a.birth_stage, b.birth_stage);
    return tower.stage(m + 1).compare(lift(tower, a, m), lift(tower, b, m));
}

std::size_t pullback_stage(const CodedElement<BHElement>& sigma) {
    std::size_t n = 0;
    for (const BHElement& e : sigma.support) n = std::max(n, e.birth_stage + 1);
    return n;
}

CodedElement<Term> pull_back(const StageTower& tower, const CodedElement<BHElement>& sigma, std::size_t n) {
    if (n < pullback_stage(sigma)) throw std::invalid_argument("pull_back: stage too small");
    return map_coded([&](const BHElement& e) { return lift(tower, e, n - 1); }, sigma);
}

BHElement glued_collapse_at(const StageTower& tower, const CodedElement<BHElement>& sigma, std::size_t n) {
    const CodedElement<Term> sigma0 = pull_back(tower, sigma, n);
    return inject(tower, n + 1, collapse(tower.stage(n), sigma0));
}

BHElement glued_collapse(const StageTower& tower, const CodedElement<BHElement>& sigma) {
    return glued_collapse_at(tower, sigma, pullback_stage(sigma));
}

Enumerated<BHElement> enumerate_bh(const StageTower& tower, std::size_t stage_bound, std::size_t budget) {
    Enumerated<BHElement> out;
    out.exhaustive = true;
    for (std::size_t n = 0; n < stage_bound; ++n) {
        const Enumerated<Term> next = tower.stage(n + 1).enumerate(budget);
        out.exhaustive = out.exhaustive && next.exhaustive;
        for (Term s : next.items)
            if (!tower.stage(n).embed_preimage(s)) out.items.push_back({n, s});
    }
    std::sort(out.items.begin(), out.items.end(),
              [&](const BHElement& a, const BHElement& b) { return compare_bh(tower, a, b) < 0; });
    return out;
}

std::string format_bh(const BHElement& e) {
    return "@" + std::to_string(e.birth_stage) + ":" + format_term(e.term);
}

}  // namespace bh
