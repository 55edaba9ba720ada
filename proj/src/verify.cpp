#include "bh/verify.hpp"

#include <algorithm>
#include <sstream>

#include "bh/kernels.hpp"

namespace bh {
namespace {

constexpr std::size_t kRecorded = 16;

CheckReport report(std::string name, std::string law) {
    CheckReport r;
    r.name = std::move(name);
    r.law = std::move(law);
    return r;
}

std::string join_terms(const std::vector<Term>& ts) {
    std::string out = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? "," : "") + format_term(ts[i]);
    return out + "}";
}

std::string format_indices(const std::vector<std::size_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

std::string format_coded_bh(const CodedElement<BHElement>& s) {
    std::string out = format_token(s.token) + " over [";
    for (std::size_t i = 0; i < s.support.size(); ++i) out += (i ? "," : "") + format_bh(s.support[i]);
    return out + "]";
}

std::string format_coded_y(const CollapseWitness<std::uint64_t>& w, const CodedElement<std::uint64_t>& s) {
    std::string out = format_token(s.token) + " over [";
    for (std::size_t i = 0; i < s.support.size(); ++i) out += (i ? "," : "") + w.format(s.support[i]);
    return out + "]";
}

template <class T, class Cmp>
kernels::OrderMatrix order_matrix(Exec exec, const std::vector<T>& items, Cmp cmp) {
    std::span<const T> view(items);
    return exec == Exec::Serial ? kernels::order_matrix_serial(view, cmp) : kernels::order_matrix_parallel(view, cmp);
}

template <class Pred>
kernels::PairResult pairs(Exec exec, std::size_t n, Pred pred) {
    return exec == Exec::Serial ? kernels::check_pairs_serial(n, std::move(pred), kRecorded)
                                : kernels::check_pairs_parallel(n, std::move(pred), kRecorded);
}

// Folds a pair scan into the report; `describe(i, j)` explains a failing pair.
template <class Describe>
void absorb(CheckReport& r, const kernels::PairResult& res, const std::string& law, Describe describe) {
    r.instances += res.checked;
    for (const auto& f : res.first)
        r.fail(law + ": " + describe(f.i, f.j) + (f.what.empty() ? "" : " (" + f.what + ")"));
    // unrecorded failures still count
    if (res.failures > res.first.size()) r.failure_count += res.failures - res.first.size();
}

template <class Describe>
void absorb_linearity(CheckReport& r, const kernels::LinearityResult& lin, Describe describe) {
    r.instances += lin.pairs + lin.triples;
    for (const auto& f : lin.first) {
        std::string what = std::string(kernels::violation_name(f.kind)) + ": " + describe(f.i) + ", " + describe(f.j);
        if (f.kind == kernels::Violation::Transitivity) what += ", " + describe(f.k);
        r.fail(what);
    }
    if (lin.violations > lin.first.size()) r.failure_count += lin.violations - lin.first.size();
}

// Tokens must be pairwise distinct for the matrix test; report equal ones first.
void token_order(CheckReport& r, const Dilator& T, std::size_t n, const std::vector<Token>& toks, Exec exec) {
    auto cmp = [&](const Token& a, const Token& b) { return T.compare_at(n, a, b); };
    kernels::OrderMatrix m;
    try {
        m = order_matrix(exec, toks, cmp);
    } catch (const std::exception& e) {
        r.fail("token-order n=" + std::to_string(n) + ": " + e.what());
        return;
    }
    absorb_linearity(r, kernels::linearity_serial(m, kRecorded),
                     [&](std::size_t i) { return "n=" + std::to_string(n) + " " + format_token(toks[i]); });
}

}  // namespace

void CheckReport::fail(std::string what) {
    ++failure_count;
    if (failures.size() < kRecorded) failures.push_back(std::move(what));
}

std::string format_report(const CheckReport& r) {
    std::ostringstream os;
    os << "CHECK " << r.name << ' ' << (r.passed() ? "pass" : "fail") << " instances=" << r.instances
       << " exhaustive=" << (r.exhaustive ? "true" : "false") << '\n';
    for (const auto& f : r.failures) os << "  " << f << '\n';
    if (r.failure_count > r.failures.size())
        os << "  ... " << (r.failure_count - r.failures.size()) << " more\n";
    return os.str();
}

CheckReport check_dilator_laws(const Dilator& T, std::size_t max_n, std::size_t budget, Exec exec) {
    CheckReport r = report("dilator-laws[" + T.name() + "]",
                  "functoriality, monotonicity, naturality of supports, support condition");
    r.exhaustive = true;
    std::vector<std::vector<Token>> toks(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto e = T.enumerate_at(n, budget);
        r.exhaustive = r.exhaustive && e.exhaustive;
        toks[n] = std::move(e.items);
    }

    for (std::size_t n = 0; n <= max_n; ++n) {
        token_order(r, T, n, toks[n], exec);
        for (const Token& t : toks[n]) {
            const std::string where = "n=" + std::to_string(n) + " " + format_token(t);
            r.instances += 3;
            try {
                if (!T.is_token(n, t)) r.fail("token-validity: " + where);
                if (!(T.map_token(identity_embedding(n), t) == t)) r.fail("functoriality-identity: " + where);
                NormalForm nf = T.normal_form(n, t);
                if (nf.support != T.supp_at(n, t) || !T.has_full_support(nf.support.size(), nf.token) ||
                    !(T.map_token(Embedding(n, nf.support), nf.token) == t))
                    r.fail("support: " + where + " factors wrongly as " + format_token(nf.token) + " on " +
                           format_indices(nf.support));
            } catch (const std::exception& e) {
                r.fail("support: " + where + " (" + e.what() + ")");
            }
        }
    }

    for (std::size_t m = 0; m <= max_n; ++m) {
        for (std::size_t n = m; n <= max_n; ++n) {
            for (const Embedding& f : all_embeddings(m, n)) {
                std::vector<Token> mapped;
                mapped.reserve(toks[m].size());
                bool mapped_ok = true;
                for (const Token& t : toks[m]) {
                    const std::string where = "f=" + to_string(f) + " " + format_token(t);
                    try {
                        Token ft = T.map_token(f, t);
                        r.instances += 2;
                        if (!T.is_token(n, ft)) r.fail("token-validity: " + where + " -> " + format_token(ft));
                        std::vector<std::size_t> image;
                        for (std::size_t i : T.supp_at(m, t)) image.push_back(f(i));
                        if (T.supp_at(n, ft) != image)
                            r.fail("naturality: " + where + " has support " + format_indices(T.supp_at(n, ft)) +
                                   ", expected " + format_indices(image));
                        for (std::size_t k = n; k <= max_n; ++k) {
                            for (const Embedding& g : all_embeddings(n, k)) {
                                ++r.instances;
                                if (!(T.map_token(compose(f, g), t) == T.map_token(g, ft)))
                                    r.fail("functoriality-composition: " + where + " then g=" + to_string(g));
                            }
                        }
                        mapped.push_back(std::move(ft));
                    } catch (const std::exception& e) {
                        r.fail("functoriality: " + where + " (" + e.what() + ")");
                        mapped_ok = false;
                    }
                }
                if (!mapped_ok) continue;
                const auto& src = toks[m];
                auto res = pairs(exec, src.size(), [&](std::size_t i, std::size_t j) {
                    if (T.compare_at(m, src[i], src[j]) >= 0) return true;
                    return T.compare_at(n, mapped[i], mapped[j]) < 0;
                });
                absorb(r, res, "monotonicity", [&](std::size_t i, std::size_t j) {
                    return "f=" + to_string(f) + " " + format_token(src[i]) + " < " + format_token(src[j]);
                });
            }
        }
    }
    return r;
}

CheckReport check_theta_linear(const BHSystem& sys, std::size_t budget, Exec exec) {
    CheckReport r = report("theta-linear[" + sys.describe() + "]", "the term order is a linear order");
    const Enumerated<Term> sample = sys.enumerate(budget);
    r.exhaustive = sample.exhaustive;
    const auto& xs = sample.items;
    kernels::OrderMatrix m;
    try {
        m = order_matrix(exec, xs, sys.comparator());
    } catch (const std::exception& e) {
        r.fail(std::string("comparison failed: ") + e.what());
        return r;
    }
    auto lin = exec == Exec::Serial ? kernels::linearity_serial(m, kRecorded) : kernels::linearity_parallel(m, kRecorded);
    absorb_linearity(r, lin, [&](std::size_t i) { return format_term(xs[i]); });

    if (const auto* theta = dynamic_cast<const ThetaSystem*>(&sys)) {
        auto res = pairs(exec, xs.size(), [&](std::size_t i, std::size_t j) {
            return kernels::sign_of(theta_compare(theta->base(), xs[i], xs[j])) == m.at(i, j);
        });
        absorb(r, res, "reference-agreement",
               [&](std::size_t i, std::size_t j) { return format_term(xs[i]) + " vs " + format_term(xs[j]); });
    }
    return r;
}

CheckReport check_collapse_admissible(const ThetaSystem& next, std::size_t budget, Exec exec) {
    CheckReport r = report("collapse-admissible[" + next.describe() + "]",
                  "theta_X satisfies both collapse conditions; subterms lie below their root");
    const BHSystem& X = next.base();
    const Enumerated<Term> sample = next.enumerate(budget);
    r.exhaustive = sample.exhaustive;
    const auto& terms = sample.items;
    const auto cmp = next.comparator();

    std::vector<std::vector<Term>> lifted(terms.size());  // [iota_X](supp sigma)
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (Term x : terms[i].support()) lifted[i].push_back(X.embed(x));

    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term s = terms[i];
        ++r.instances;
        if (!lt_fin_single(lifted[i], s, cmp))
            r.fail("condition (ii): " + join_terms(lifted[i]) + " not <fin " + format_term(s));

        const std::vector<Term> closure = subterm_closure(next, s);
        for (Term sub : closure) {
            r.instances += 3;
            if (cmp(sub, s) > 0) r.fail("subterm bound: " + format_term(sub) + " in E(" + format_term(s) + ") is above it");
            if (next.length(sub) > next.length(s))
                r.fail("subterm length: " + format_term(sub) + " in E(" + format_term(s) + ") is longer");
            const auto inner = subterm_closure(next, sub);
            const bool nested = std::all_of(inner.begin(), inner.end(), [&](Term q) {
                return std::find(closure.begin(), closure.end(), q) != closure.end();
            });
            if (!nested) r.fail("subterm closure: E(" + format_term(sub) + ") not inside E(" + format_term(s) + ")");
        }
    }

    auto body_lt = [&](std::size_t i, std::size_t j) {
        return compare_coded(X.dilator(), X.comparator(), terms[i].body(), terms[j].body()) < 0;
    };
    auto clause_i = pairs(exec, terms.size(), [&](std::size_t i, std::size_t j) {
        if (!body_lt(i, j) || !lt_fin_single(lifted[i], terms[j], cmp)) return true;
        return cmp(terms[i], terms[j]) < 0;
    });
    absorb(r, clause_i, "condition (i)",
           [&](std::size_t i, std::size_t j) { return format_term(terms[i]) + " vs " + format_term(terms[j]); });

    auto redundant = pairs(exec, terms.size(), [&](std::size_t i, std::size_t j) {
        if (!leq_fin_single(terms[i], lifted[j], cmp)) return true;
        return cmp(terms[i], terms[j]) < 0;
    });
    absorb(r, redundant, "clause (ii) without order test",
           [&](std::size_t i, std::size_t j) { return format_term(terms[i]) + " vs " + format_term(terms[j]); });
    return r;
}

CheckReport check_goodness(const ThetaSystem& next, std::size_t budget, Exec exec) {
    const BHSystem& X = next.base();
    CheckReport r = report("goodness[" + X.describe() + "]", "iota_X is an order embedding and L o iota_X = L_X");
    const Enumerated<Term> sample = X.enumerate(budget);
    r.exhaustive = sample.exhaustive;
    const auto& xs = sample.items;
    std::vector<Term> images;
    images.reserve(xs.size());
    for (Term x : xs) {
        const Term ix = X.embed(x);
        images.push_back(ix);
        r.instances += 2;
        if (!next.contains(ix)) r.fail("iota_X leaves theta_T(X): " + format_term(x) + " -> " + format_term(ix));
        const auto lhs = next.length(ix), rhs = X.length(x);
        if (lhs != rhs)
            r.fail("system equation: L(iota(" + format_term(x) + ")) = " + std::to_string(lhs) + " but L_X = " +
                   std::to_string(rhs));
    }
    auto res = pairs(exec, xs.size(), [&](std::size_t i, std::size_t j) {
        return kernels::sign_of(X.compare(xs[i], xs[j])) == kernels::sign_of(next.compare(images[i], images[j]));
    });
    absorb(r, res, "order embedding",
           [&](std::size_t i, std::size_t j) { return format_term(xs[i]) + " vs " + format_term(xs[j]); });
    return r;
}

CheckReport check_commuting_square(const ThetaSystem& next, std::size_t budget) {
    const BHSystem& X = next.base();
    CheckReport r = report("commuting-square[" + X.describe() + "]",
                  "iota_{theta_T(X)} o theta_X = theta_{theta_T(X)} o T_{iota_X}");
    const Enumerated<Term> sample = next.enumerate(budget);
    r.exhaustive = sample.exhaustive;
    for (Term s : sample.items) {
        const CodedElement<Term> sigma = s.body();
        ++r.instances;
        const Term lhs = next.embed(collapse(X, sigma));
        const Term rhs = collapse(next, map_coded([&](Term x) { return X.embed(x); }, sigma));
        if (!(lhs == rhs)) r.fail(format_term(s) + ": " + format_term(lhs) + " != " + format_term(rhs));
    }
    return r;
}

CheckReport check_fixed_point(const StageTower& tower, std::size_t stage_bound, std::size_t budget,
                              std::size_t sample_cap, Exec exec) {
    CheckReport r = report("fixed-point[" + tower.dilator().name() + "]",
                  "the glued collapse is a Bachmann-Howard collapse on BH(T)");
    const auto bh = enumerate_bh(tower, stage_bound, budget);
    const auto cmp = bh_comparator(tower);
    const auto sig = enumerate_coded(tower.dilator(), bh.items, budget, cmp, sample_cap);
    r.exhaustive = bh.exhaustive && sig.exhaustive;
    const auto& sigmas = sig.items;

    std::vector<BHElement> values(sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        const auto& s = sigmas[i];
        r.instances += 3;
        try {
            values[i] = glued_collapse(tower, s);
            if (!lt_fin_single(s.support, values[i], cmp))
                r.fail("condition (ii): supp of " + format_coded_bh(s) + " not <fin " + format_bh(values[i]));
            const std::size_t n = pullback_stage(s);
            if (n > 0) {
                const auto s0 = pull_back(tower, s, n);
                const auto back = map_coded([&](Term t) { return inject(tower, n, t); }, s0);
                if (!(back == s)) r.fail("absorption: " + format_coded_bh(s) + " not in rng(T_j) at stage " + std::to_string(n));
            }
            const BHElement later = glued_collapse_at(tower, s, n + 1);
            if (!(later == values[i]))
                r.fail("stage independence: " + format_coded_bh(s) + " gives " + format_bh(values[i]) + " and " +
                       format_bh(later));
        } catch (const std::exception& e) {
            r.fail("collapse: " + format_coded_bh(s) + " (" + e.what() + ")");
            return r;
        }
    }

    auto res = pairs(exec, sigmas.size(), [&](std::size_t i, std::size_t j) {
        if (compare_coded(tower.dilator(), cmp, sigmas[i], sigmas[j]) >= 0) return true;
        if (!lt_fin_single(sigmas[i].support, values[j], cmp)) return true;
        return compare_bh(tower, values[i], values[j]) < 0;
    });
    absorb(r, res, "condition (i)", [&](std::size_t i, std::size_t j) {
        return format_coded_bh(sigmas[i]) + " vs " + format_coded_bh(sigmas[j]);
    });
    return r;
}

CheckReport check_minimality(const StageTower& tower, const WitnessPtr<std::uint64_t>& witness,
                             std::size_t stage_bound, std::size_t budget, Exec exec) {
    CheckReport r = report("minimality[" + witness->name() + "]", "BH(T) embeds into the witness order");
    MinimalEmbedding<std::uint64_t> h(witness, tower);
    const auto bh = enumerate_bh(tower, stage_bound, budget);
    r.exhaustive = bh.exhaustive;
    const auto& es = bh.items;
    std::vector<std::uint64_t> values(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        try {
            values[i] = h(es[i]);
        } catch (const std::exception& e) {
            r.fail("embedding: " + format_bh(es[i]) + " (" + e.what() + ")");
            return r;
        }
        for (std::size_t m = es[i].birth_stage + 1; m <= es[i].birth_stage + 2; ++m) {
            ++r.instances;
            const auto via = h.at_stage(m + 1)(lift(tower, es[i], m));
            if (via != values[i])
                r.fail("cocone: " + format_bh(es[i]) + " is " + witness->format(values[i]) + " but " +
                       witness->format(via) + " via X_" + std::to_string(m + 1));
        }
    }
    // defining equation h_{X_{n+1}} o iota_{X_n} = h_{X_n} on each stage
    for (std::size_t n = 1; n <= stage_bound; ++n) {
        for (Term x : tower.stage(n).enumerate(budget).items) {
            ++r.instances;
            const auto lhs = h.at_stage(n + 1)(tower.stage(n).embed(x));
            const auto rhs = h.at_stage(n)(x);
            if (lhs != rhs)
                r.fail("interpretation equation at X_" + std::to_string(n) + ": " + format_term(x) + " maps to " +
                       witness->format(rhs) + " but its image to " + witness->format(lhs));
        }
    }
    auto res = pairs(exec, es.size(), [&](std::size_t i, std::size_t j) {
        return kernels::sign_of(compare_bh(tower, es[i], es[j])) == kernels::sign_of(witness->compare(values[i], values[j]));
    });
    absorb(r, res, "order embedding",
           [&](std::size_t i, std::size_t j) { return format_bh(es[i]) + " vs " + format_bh(es[j]); });
    return r;
}

CheckReport check_witness(const CollapseWitness<std::uint64_t>& w, std::size_t budget) {
    CheckReport r = report("witness[" + w.name() + "]", "the witness map is a Bachmann-Howard collapse");
    const auto sample = w.sample(budget);
    const auto cmp = w.comparator();
    const auto sig = enumerate_coded(w.dilator(), sample, budget, cmp);
    r.exhaustive = sig.exhaustive;
    const auto& sigmas = sig.items;
    std::vector<std::uint64_t> values(sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        ++r.instances;
        try {
            values[i] = w.collapse(sigmas[i]);
        } catch (const std::exception& e) {
            r.fail("collapse: " + format_coded_y(w, sigmas[i]) + " (" + e.what() + ")");
            return r;
        }
        if (!lt_fin_single(sigmas[i].support, values[i], cmp))
            r.fail("condition (ii): " + format_coded_y(w, sigmas[i]) + " -> " + w.format(values[i]));
    }
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        for (std::size_t j = 0; j < sigmas.size(); ++j) {
            ++r.instances;
            if (compare_coded(w.dilator(), cmp, sigmas[i], sigmas[j]) >= 0) continue;
            if (!lt_fin_single(sigmas[i].support, values[j], cmp)) continue;
            if (!(values[i] < values[j]))
                r.fail("condition (i): " + format_coded_y(w, sigmas[i]) + " vs " + format_coded_y(w, sigmas[j]));
        }
    }
    return r;
}

std::vector<CheckReport> run_suite(Suite suite, const DilatorPtr& dilator, const SuiteOptions& opts) {
    std::vector<CheckReport> out;
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Laws) out.push_back(check_dilator_laws(*dilator, opts.max_n, opts.budget, opts.exec));

    StageTower tower(dilator);
    try {
        if (all || suite == Suite::Theta) {
            for (std::size_t n = 0; n <= opts.stages; ++n) {
                const ThetaSystem& next = tower.theta_stage(n);
                out.push_back(check_theta_linear(next, opts.budget, opts.exec));
                out.push_back(check_collapse_admissible(next, opts.budget, opts.exec));
                out.push_back(check_goodness(next, opts.budget, opts.exec));
                out.push_back(check_commuting_square(next, opts.budget));
            }
        }
        if (all || suite == Suite::FixedPoint)
            out.push_back(check_fixed_point(tower, opts.stage_bound, opts.budget, opts.budget, opts.exec));
    } catch (const std::exception& e) {
        // a law-violating dilator can break the construction itself
        CheckReport broken = report("construction[" + dilator->name() + "]", "the stage tower can be built");
        broken.fail(e.what());
        out.push_back(std::move(broken));
    }

    if (all || suite == Suite::Minimality) {
        std::optional<std::string> name = opts.witness;
        if (!name && dilator->name() == "successor") name = "omega-successor";
        if (name) {
            auto w = make_witness(*name);
            out.push_back(check_witness(*w, opts.budget));
            out.push_back(check_minimality(tower, w, opts.stage_bound, opts.budget, opts.exec));
        } else if (suite == Suite::Minimality) {
            throw SemanticError("no builtin witness for " + dilator->name());
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return out;
}

std::optional<Suite> parse_suite(const std::string& name) {
    if (name == "all") return Suite::All;
    if (name == "laws") return Suite::Laws;
    if (name == "theta") return Suite::Theta;
    if (name == "fixedpoint") return Suite::FixedPoint;
    if (name == "minimality") return Suite::Minimality;
    return std::nullopt;
}

}  // namespace bh
