#ifndef BH_BH_SYSTEM_HPP
#define BH_BH_SYSTEM_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bh/dilator.hpp"
#include "bh/term.hpp"

namespace bh {

// A Bachmann-Howard system (X, iota_X, L_X) whose carrier consists of terms.
//
//   compare  the order <_X
//   length   L_X : X -> N
//   embed    iota_X : X -> theta_T(X)
//
// The system equation L_{theta_T(X)} o iota_X = L_X and goodness of iota_X are
// properties to be checked (see verify.hpp), not preconditions of construction.
class BHSystem {
public:
    virtual ~BHSystem() = default;

    virtual const Dilator& dilator() const = 0;
    virtual TermStore& store() const = 0;

    virtual bool contains(Term x) const = 0;
    virtual std::strong_ordering compare(Term x, Term y) const = 0;
    virtual std::uint32_t length(Term x) const = 0;
    virtual Term embed(Term x) const = 0;
    // The x with embed(x) == s, if s lies in the range of iota_X.
    virtual std::optional<Term> embed_preimage(Term s) const = 0;

    // Up to `budget` carrier elements, sorted by compare.
    virtual Enumerated<Term> enumerate(std::size_t budget) const = 0;

    virtual std::string describe() const = 0;

    // Comparator object usable with the generic finite-order helpers.
    auto comparator() const {
        return [this](Term a, Term b) { return compare(a, b); };
    }
};

using SystemPtr = std::shared_ptr<const BHSystem>;

// The empty order with the unique maps into theta_T(empty) and N.
class EmptySystem final : public BHSystem {
public:
    EmptySystem(DilatorPtr dilator, std::shared_ptr<TermStore> store);

    const Dilator& dilator() const override { return *dilator_; }
    TermStore& store() const override { return *store_; }
    bool contains(Term) const override { return false; }
    std::strong_ordering compare(Term x, Term y) const override;
    std::uint32_t length(Term x) const override;
    Term embed(Term x) const override;
    std::optional<Term> embed_preimage(Term) const override { return std::nullopt; }
    Enumerated<Term> enumerate(std::size_t) const override { return {{}, true}; }
    std::string describe() const override { return "X_0"; }

private:
    DilatorPtr dilator_;
    std::shared_ptr<TermStore> store_;
};

// Records the clause decisions of an unmemoized comparison, one line per step,
// nested comparisons indented by two spaces per level.
struct ComparisonTrace {
    std::vector<std::string> steps;
    std::size_t depth = 0;
};

// L_{theta_T(X)}(th sigma) = 1 + max{L_X(x) : x in supp sigma}, max of the empty set being 0.
std::uint32_t theta_length(const BHSystem& X, const CodedElement<Term>& sigma);

// The order on theta_T(X), computed directly from the two defining clauses by
// recursion on length(s) + length(t), without memoization. Serves as the
// reference for ThetaSystem::compare.
std::strong_ordering theta_compare(const BHSystem& X, Term s, Term t, ComparisonTrace* trace = nullptr);

// theta_X(sigma) = th sigma.
Term collapse(const BHSystem& X, const CodedElement<Term>& sigma);

// iota_{theta_T(X)}(th sigma) = th T_{iota_X}(sigma).
Term embed_next(const BHSystem& X, Term s);

// theta_T(X) as a system in its own right, with memoized comparisons.
class ThetaSystem final : public BHSystem {
public:
    explicit ThetaSystem(SystemPtr base, std::string label = {});

    const BHSystem& base() const { return *base_; }
    const SystemPtr& base_ptr() const { return base_; }

    const Dilator& dilator() const override { return base_->dilator(); }
    TermStore& store() const override { return base_->store(); }

    bool contains(Term s) const override;
    std::strong_ordering compare(Term s, Term t) const override;
    std::uint32_t length(Term s) const override { return theta_length(*base_, s.body()); }
    Term embed(Term s) const override { return embed_next(*base_, s); }
    std::optional<Term> embed_preimage(Term s) const override;
    Enumerated<Term> enumerate(std::size_t budget) const override;
    std::string describe() const override { return label_; }

    // Number of memoized comparisons so far.
    std::size_t memo_size() const;

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        std::mutex mu;
        std::unordered_map<std::uint64_t, std::int8_t> table;
    };

    SystemPtr base_;
    std::string label_;
    mutable std::array<Shard, kShards> memo_;
    mutable std::mutex enum_mu_;
    mutable std::map<std::size_t, Enumerated<Term>> enum_cache_;
};

// (theta_T(X), iota_{theta_T(X)}, L_{theta_T(X)}).
std::shared_ptr<const ThetaSystem> iterate(SystemPtr X, std::string label = {});

// E_X(s) = {s} u U{E_X(iota_X(x)) : x in supp s}, sorted in theta_T(X).
std::vector<Term> subterm_closure(const ThetaSystem& sys, Term s);

}  // namespace bh

#endif
