// bh: enumerate, compare and verify Bachmann-Howard fixed points of coded dilators.
//
// exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 semantic mismatch

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bh/bh_limit.hpp"
#include "bh/dilator_lib.hpp"
#include "bh/errors.hpp"
#include "bh/interpretation.hpp"
#include "bh/syntax.hpp"
#include "bh/verify.hpp"

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2, kSemantic = 3;

std::size_t default_budget() {
    const char* env = std::getenv("BH_BUDGET_DEFAULT");
    if (env == nullptr || *env == '\0') return 25;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(env, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || env[pos] != '\0' || env[0] == '-' || env[0] == '+')
        throw bh::ParseError(std::string("BH_BUDGET_DEFAULT is not a natural number: ") + env);
    return static_cast<std::size_t>(v);
}

struct EnumerateArgs {
    std::string dilator;
    std::size_t stages = 4;
    std::optional<std::size_t> budget;
    std::string format = "lines";
};

struct CompareArgs {
    std::string dilator, a, b;
};

struct VerifyArgs {
    std::string dilator;
    std::string suite = "all";
    std::optional<std::size_t> budget;
    std::optional<std::string> witness;
    std::size_t max_n = 4, stages = 3, stage_bound = 4;
    bool break_naturality = false;
    bool serial = false;
};

struct InterpretArgs {
    std::string dilator = "successor";
    std::string witness = "omega-successor";
    std::string term;
};

int run_enumerate(const EnumerateArgs& args) {
    const std::size_t budget = args.budget.value_or(default_budget());
    bh::StageTower tower(bh::parse_selector(args.dilator));
    const auto listing = bh::enumerate_bh(tower, args.stages, budget);
    const char* exhaustive = listing.exhaustive ? "true" : "false";
    if (args.format == "lines") {
        for (const auto& e : listing.items) std::cout << bh::format_bh(e) << '\n';
        std::cout << "# count=" << listing.items.size() << " exhaustive=" << exhaustive << '\n';
    } else {
        std::size_t k = 0;
        for (const auto& e : listing.items)
            std::cout << k++ << "\tstage " << e.birth_stage << "\t" << bh::format_bh(e) << '\n';
        std::cout << "# " << listing.items.size() << " elements of " << tower.dilator().name() << " born before stage "
                  << args.stages << ", budget " << budget << ", exhaustive=" << exhaustive << '\n';
    }
    return kOk;
}

int run_compare(const CompareArgs& args) {
    bh::StageTower tower(bh::parse_selector(args.dilator));
    const auto a = bh::parse_bh(args.a, tower);
    const auto b = bh::parse_bh(args.b, tower);
    std::cout << bh::ordering_name(bh::compare_bh(tower, a, b)) << '\n';
    return kOk;
}

int run_verify(const VerifyArgs& args) {
    const auto suite = bh::parse_suite(args.suite);
    if (!suite) throw bh::ParseError("unknown suite '" + args.suite + "'");
    auto dilator = bh::parse_selector(args.dilator);
    if (args.break_naturality) dilator = bh::make_broken_support(dilator);

    bh::SuiteOptions opts;
    opts.budget = args.budget.value_or(default_budget());
    opts.max_n = args.max_n;
    opts.stages = args.stages;
    opts.stage_bound = args.stage_bound;
    opts.witness = args.witness;
    opts.exec = args.serial ? bh::Exec::Serial : bh::Exec::Parallel;

    const auto reports = bh::run_suite(*suite, dilator, opts);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        std::cout << bh::format_report(r);
        if (!r.passed()) ++failed;
    }
    std::cout << "# checks=" << reports.size() << " failed=" << failed << '\n';
    return failed == 0 ? kOk : kFailed;
}

int run_interpret(const InterpretArgs& args) {
    bh::StageTower tower(bh::parse_selector(args.dilator));
    auto witness = bh::make_witness(args.witness);
    bh::MinimalEmbedding<std::uint64_t> h(witness, tower);
    const auto e = bh::parse_bh(args.term, tower);
    std::cout << witness->format(h(e)) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bachmann-Howard fixed points of coded dilators"};
    app.require_subcommand(1);

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "list BH(T) elements born before a stage");
    enumerate->add_option("--dilator", en.dilator, "dilator selector")->required();
    enumerate->add_option("--stages", en.stages, "stage bound");
    enumerate->add_option("--budget", en.budget, "per-stage sample size");
    enumerate->add_option("--format", en.format)->check(CLI::IsMember({"text", "lines"}));

    CompareArgs cm;
    auto* compare = app.add_subcommand("compare", "compare two BH(T) elements, prints LT, EQ or GT");
    compare->add_option("--dilator", cm.dilator, "dilator selector")->required();
    compare->add_option("a", cm.a, "@n:term")->required();
    compare->add_option("b", cm.b, "@n:term")->required();

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--dilator", vf.dilator, "dilator selector")->required();
    verify->add_option("--suite", vf.suite, "all|laws|theta|fixedpoint|minimality");
    verify->add_option("--budget", vf.budget, "sample size");
    verify->add_option("--witness", vf.witness, "collapse witness for minimality");
    verify->add_option("--max-n", vf.max_n, "arity bound for the dilator laws");
    verify->add_option("--stages", vf.stages, "last stage checked by the theta suite");
    verify->add_option("--stage-bound", vf.stage_bound, "BH(T) sample stage bound");
    verify->add_flag("--break-naturality", vf.break_naturality, "replace every support by the empty set");
    verify->add_flag("--serial", vf.serial, "use the serial kernels");

    InterpretArgs ip;
    auto* interpret = app.add_subcommand("interpret", "evaluate the embedding of BH(T) into a witness");
    interpret->add_option("--dilator", ip.dilator, "dilator selector");
    interpret->add_option("--witness", ip.witness, "collapse witness");
    interpret->add_option("term", ip.term, "@n:term")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enumerate) return run_enumerate(en);
        if (*compare) return run_compare(cm);
        if (*verify) return run_verify(vf);
        if (*interpret) return run_interpret(ip);
    } catch (const bh::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const bh::SemanticError& e) {
        std::cerr << "semantic error: " << e.what() << '\n';
        return kSemantic;
    } catch (const bh::DefectError& e) {
        std::cerr << "defect (" << e.law() << "): " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
