#ifndef BH_BH_LIMIT_HPP
#define BH_BH_LIMIT_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bh/bh_system.hpp"

namespace bh {

// Canonical element of the direct limit: a term of X_{n+1} outside the range
// of iota_{X_n}, tagged with its birth stage n.
struct BHElement {
    std::size_t birth_stage = 0;
    Term term;

    friend bool operator==(const BHElement&, const BHElement&) = default;
};

// X_0 = empty, X_{n+1} = theta_T(X_n), built lazily and cached. Safe to share
// between threads.
class StageTower {
public:
    explicit StageTower(DilatorPtr dilator);

    const Dilator& dilator() const { return *dilator_; }
    const DilatorPtr& dilator_ptr() const { return dilator_; }
    TermStore& store() const { return *store_; }

    const BHSystem& stage(std::size_t n) const { return *stage_ptr(n); }
    SystemPtr stage_ptr(std::size_t n) const;
    // Stage n+1 viewed as theta_T(X_n).
    const ThetaSystem& theta_stage(std::size_t n) const;

private:
    DilatorPtr dilator_;
    std::shared_ptr<TermStore> store_;
    mutable std::mutex mu_;
    mutable std::vector<SystemPtr> stages_;
};

// j_{X_n}(s) for s in X_n, n >= 1.
BHElement inject(const StageTower& tower, std::size_t n, Term s);

// The representative of e in X_{m+1}, m >= e.birth_stage.
Term lift(const StageTower& tower, const BHElement& e, std::size_t m);

std::strong_ordering compare_bh(const StageTower& tower, const BHElement& a, const BHElement& b);

inline auto bh_comparator(const StageTower& tower) {
    return [&tower](const BHElement& a, const BHElement& b) { return compare_bh(tower, a, b); };
}

// Least n such that every support element of sigma is represented in X_n.
std::size_t pullback_stage(const CodedElement<BHElement>& sigma);

// sigma_0 in T_{X_n} with T_{j_{X_n}}(sigma_0) = sigma; needs n >= pullback_stage(sigma).
CodedElement<Term> pull_back(const StageTower& tower, const CodedElement<BHElement>& sigma, std::size_t n);

// theta(sigma) = j_{X_{n+1}}(theta_{X_n}(sigma_0)), at the least admissible n.
BHElement glued_collapse(const StageTower& tower, const CodedElement<BHElement>& sigma);
// Same, computed at a chosen stage n >= pullback_stage(sigma).
BHElement glued_collapse_at(const StageTower& tower, const CodedElement<BHElement>& sigma, std::size_t n);

// Canonical elements born before `stage_bound`, from per-stage samples of size
// `budget`, sorted by compare_bh.
Enumerated<BHElement> enumerate_bh(const StageTower& tower, std::size_t stage_bound, std::size_t budget);

// @n:term
std::string format_bh(const BHElement& e);

}  // namespace bh

#endif
