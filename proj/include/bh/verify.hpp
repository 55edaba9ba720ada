#ifndef BH_VERIFY_HPP
#define BH_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bh/bh_limit.hpp"
#include "bh/bh_system.hpp"
#include "bh/dilator.hpp"
#include "bh/interpretation.hpp"

namespace bh {

struct CheckReport {
    std::string name;
    std::string law;  // the statement being checked, in words
    std::size_t instances = 0;
    bool exhaustive = false;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;  // first few counterexamples, terms in external syntax

    bool passed() const { return failure_count == 0; }
    void fail(std::string what);
};

// CHECK <name> <pass|fail> instances=<k> exhaustive=<bool>, then one indented
// line per recorded counterexample.
std::string format_report(const CheckReport& r);

enum class Exec { Serial, Parallel };

// Functoriality, monotonicity, naturality of supports and the support condition,
// over all embeddings between orders of size <= max_n and the first `budget`
// tokens of each arity.
CheckReport check_dilator_laws(const Dilator& T, std::size_t max_n, std::size_t budget, Exec exec = Exec::Parallel);

// The carrier sample of `sys` is linearly ordered: all pairs and triples. For a
// ThetaSystem the memoized order is also compared against theta_compare.
CheckReport check_theta_linear(const BHSystem& sys, std::size_t budget, Exec exec = Exec::Parallel);

// For next = theta_T(X): both collapse conditions for theta_X, the subterm bound
// for E_X, and the redundancy of the order test in the second comparison clause.
CheckReport check_collapse_admissible(const ThetaSystem& next, std::size_t budget, Exec exec = Exec::Parallel);

// For next = theta_T(X): iota_X is an order embedding into next and
// L_{theta_T(X)} o iota_X = L_X.
CheckReport check_goodness(const ThetaSystem& next, std::size_t budget, Exec exec = Exec::Parallel);

// iota_{theta_T(X)} o theta_X = theta_{theta_T(X)} o T_{iota_X}, as syntactic equality.
CheckReport check_commuting_square(const ThetaSystem& next, std::size_t budget);

// The glued collapse on BH(T) satisfies both collapse conditions; every sampled
// sigma is absorbed by a finite stage; the result does not depend on the stage.
// Supports are drawn from enumerate_bh(stage_bound, budget), at most
// `sample_cap` elements of T_BH(T) are formed.
CheckReport check_fixed_point(const StageTower& tower, std::size_t stage_bound, std::size_t budget,
                              std::size_t sample_cap, Exec exec = Exec::Parallel);

// The glued embedding of BH(T) into the witness order is strictly order
// preserving and consistent across stages.
CheckReport check_minimality(const StageTower& tower, const WitnessPtr<std::uint64_t>& witness,
                             std::size_t stage_bound, std::size_t budget, Exec exec = Exec::Parallel);

// Both collapse conditions for the witness, on coded elements with support among
// the first `budget` elements of Y.
CheckReport check_witness(const CollapseWitness<std::uint64_t>& witness, std::size_t budget);

enum class Suite { All, Laws, Theta, FixedPoint, Minimality };

struct SuiteOptions {
    std::size_t max_n = 4;       // dilator-law arity bound
    std::size_t stages = 3;      // stages checked by the theta suite
    std::size_t stage_bound = 4; // BH(T) sample for fixed point and minimality
    std::size_t budget = 25;
    std::optional<std::string> witness;  // defaults to a builtin witness matching the dilator
    Exec exec = Exec::Parallel;
};

// Reports sorted by name. Minimality is skipped when no witness applies.
std::vector<CheckReport> run_suite(Suite suite, const DilatorPtr& dilator, const SuiteOptions& opts);

std::optional<Suite> parse_suite(const std::string& name);

}  // namespace bh

#endif
