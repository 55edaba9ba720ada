#ifndef BH_INTERPRETATION_HPP
#define BH_INTERPRETATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bh/bh_limit.hpp"
#include "bh/bh_system.hpp"
#include "bh/dilator.hpp"

namespace bh {

// An order Y together with a map T_Y -> Y claimed to be a Bachmann-Howard
// collapse. The claim is checked on samples by check_witness, never assumed.
template <class Y>
class CollapseWitness {
public:
    virtual ~CollapseWitness() = default;

    virtual std::string name() const = 0;
    virtual const Dilator& dilator() const = 0;
    virtual std::strong_ordering compare(const Y& a, const Y& b) const = 0;
    // Throws std::domain_error outside T_Y.
    virtual Y collapse(const CodedElement<Y>& sigma) const = 0;
    // The first `budget` elements of Y, sorted.
    virtual std::vector<Y> sample(std::size_t budget) const = 0;
    virtual std::string format(const Y& y) const = 0;

    auto comparator() const {
        return [this](const Y& a, const Y& b) { return compare(a, b); };
    }
};

template <class Y>
using WitnessPtr = std::shared_ptr<const CollapseWitness<Y>>;

// A map h : X -> Y from the carrier of a system into a witness order.
template <class Y>
class Interpretation {
public:
    Interpretation(SystemPtr source, std::function<Y(Term)> h) : source_(std::move(source)), h_(std::move(h)) {}

    const BHSystem& source() const { return *source_; }
    const SystemPtr& source_ptr() const { return source_; }
    Y operator()(Term x) const { return h_(x); }

private:
    SystemPtr source_;
    std::function<Y(Term)> h_;
};

// The empty map X_0 -> Y.
template <class Y>
Interpretation<Y> empty_interpretation(SystemPtr empty_system) {
    return Interpretation<Y>(std::move(empty_system),
                             [](Term) -> Y { throw std::logic_error("empty interpretation applied"); });
}

// h^theta(th sigma) = collapse_Y(T_h(sigma)).
template <class Y>
Y interpret_term(const CollapseWitness<Y>& w, const Interpretation<Y>& ip, Term s) {
    CodedElement<Y> mapped = map_coded([&](Term x) { return ip(x); }, s.body());
    if (!is_strictly_sorted(mapped.support, w.comparator()))
        throw DefectError("interpretation is an order embedding",
                          "support of " + format_term(s) + " is not mapped in increasing order");
    return w.collapse(mapped);
}

// h^theta as an interpretation of next = theta_T(ip.source()). Memoized.
template <class Y>
Interpretation<Y> extend_interpretation(WitnessPtr<Y> w, const Interpretation<Y>& ip, SystemPtr next) {
    const auto* theta = dynamic_cast<const ThetaSystem*>(next.get());
    if (theta == nullptr || &theta->base() != &ip.source())
        throw std::invalid_argument("extend_interpretation: target is not theta_T of the source system");
    struct Memo {
        std::mutex mu;
        std::unordered_map<Term, Y> values;
    };
    auto memo = std::make_shared<Memo>();
    return Interpretation<Y>(std::move(next), [w = std::move(w), ip, memo](Term s) -> Y {
        {
            std::lock_guard lock(memo->mu);
            if (auto it = memo->values.find(s); it != memo->values.end()) return it->second;
        }
        Y y = interpret_term(*w, ip, s);
        std::lock_guard lock(memo->mu);
        memo->values.emplace(s, y);
        return y;
    });
}

template <class Y>
struct Embedded {
    Y value;
    // Set when the witness was validated on samples only.
    bool sampled_only = true;
};

// The embedding of BH(T) into a witness order, glued from the interpretations
// h_{X_0} = empty, h_{X_{n+1}} = h_{X_n}^theta.
template <class Y>
class MinimalEmbedding {
public:
    MinimalEmbedding(WitnessPtr<Y> w, const StageTower& tower) : w_(std::move(w)), tower_(&tower) {
        if (w_->dilator().name() != tower.dilator().name())
            throw SemanticError("witness " + w_->name() + " is for " + w_->dilator().name() + ", not " +
                                tower.dilator().name());
        stages_.push_back(empty_interpretation<Y>(tower.stage_ptr(0)));
    }

    // h_{X_n}.
    const Interpretation<Y>& at_stage(std::size_t n) const {
        std::lock_guard lock(mu_);
        while (stages_.size() <= n) {
            const std::size_t k = stages_.size();
            stages_.push_back(extend_interpretation<Y>(w_, stages_[k - 1], tower_->stage_ptr(k)));
        }
        return stages_[n];
    }

    Y operator()(const BHElement& e) const { return at_stage(e.birth_stage + 1)(e.term); }

    const CollapseWitness<Y>& witness() const { return *w_; }

private:
    WitnessPtr<Y> w_;
    const StageTower* tower_;
    mutable std::mutex mu_;
    mutable std::deque<Interpretation<Y>> stages_;
};

template <class Y>
Embedded<Y> embed_bh(WitnessPtr<Y> w, const StageTower& tower, const BHElement& e) {
    MinimalEmbedding<Y> h(std::move(w), tower);
    return {h(e), true};
}

// Y = omega with theta(top) = 0 and theta(n) = n + 1, for the successor dilator.
class OmegaSuccessorWitness final : public CollapseWitness<std::uint64_t> {
public:
    OmegaSuccessorWitness();

    std::string name() const override { return "omega-successor"; }
    const Dilator& dilator() const override { return *dilator_; }
    std::strong_ordering compare(const std::uint64_t& a, const std::uint64_t& b) const override { return a <=> b; }
    std::uint64_t collapse(const CodedElement<std::uint64_t>& sigma) const override;
    std::vector<std::uint64_t> sample(std::size_t budget) const override;
    std::string format(const std::uint64_t& y) const override { return std::to_string(y); }

private:
    DilatorPtr dilator_;
};

// Builtin witnesses by name; throws SemanticError for unknown names.
WitnessPtr<std::uint64_t> make_witness(const std::string& name);

}  // namespace bh

#endif
