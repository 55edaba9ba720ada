#ifndef BH_KERNELS_HPP
#define BH_KERNELS_HPP

// Data-parallel inner loops of the verification suite. Every kernel has a
// serial reference version; the OpenMP versions must produce identical results
// (tests/kernels_test.cpp, bench/bench_kernels.cpp).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bh::kernels {

// cells[i * n + j] = sign of cmp(items[i], items[j]).
struct OrderMatrix {
    std::size_t n = 0;
    std::vector<std::int8_t> cells;

    std::int8_t at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
    friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;
};

inline std::int8_t sign_of(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

template <class T, class Cmp>
OrderMatrix order_matrix_serial(std::span<const T> items, Cmp cmp) {
    OrderMatrix m{items.size(), std::vector<std::int8_t>(items.size() * items.size())};
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) m.cells[i * m.n + j] = sign_of(cmp(items[i], items[j]));
    return m;
}

// Exceptions thrown by cmp are rethrown after the parallel region.
template <class T, class Cmp>
OrderMatrix order_matrix_parallel(std::span<const T> items, Cmp cmp) {
    OrderMatrix m{items.size(), std::vector<std::int8_t>(items.size() * items.size())};
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(m.n);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            try {
                m.cells[static_cast<std::size_t>(i * n + j)] =
                    sign_of(cmp(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(j)]));
            } catch (...) {
#pragma omp critical(bh_kernel_error)
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    return m;
}

enum class Violation : std::uint8_t { Irreflexive, NotTrichotomous, Antisymmetry, Transitivity };

inline const char* violation_name(Violation v) {
    switch (v) {
        case Violation::Irreflexive: return "reflexivity";
        case Violation::NotTrichotomous: return "trichotomy";
        case Violation::Antisymmetry: return "antisymmetry";
        case Violation::Transitivity: return "transitivity";
    }
    return "?";
}

struct LinearityFinding {
    Violation kind;
    std::size_t i, j, k;

    friend bool operator==(const LinearityFinding&, const LinearityFinding&) = default;
    friend auto operator<=>(const LinearityFinding& a, const LinearityFinding& b) {
        return std::tie(a.kind, a.i, a.j, a.k) <=> std::tie(b.kind, b.i, b.j, b.k);
    }
};

struct LinearityResult {
    std::size_t pairs = 0;
    std::size_t triples = 0;
    std::size_t violations = 0;
    std::vector<LinearityFinding> first;  // smallest findings, at most `keep`

    friend bool operator==(const LinearityResult&, const LinearityResult&) = default;
};

namespace detail {

inline void pair_findings(const OrderMatrix& m, std::size_t i, std::vector<LinearityFinding>& out) {
    if (m.at(i, i) != 0) out.push_back({Violation::Irreflexive, i, i, i});
    for (std::size_t j = i + 1; j < m.n; ++j) {
        // items are pairwise distinct, so off-diagonal EQ means the order identified them
        if (m.at(i, j) == 0) out.push_back({Violation::NotTrichotomous, i, j, j});
        if (m.at(i, j) != -m.at(j, i)) out.push_back({Violation::Antisymmetry, i, j, j});
    }
}

inline void triple_findings(const OrderMatrix& m, std::size_t i, std::vector<LinearityFinding>& out) {
    for (std::size_t j = 0; j < m.n; ++j) {
        if (m.at(i, j) >= 0) continue;
        for (std::size_t k = 0; k < m.n; ++k)
            if (m.at(j, k) < 0 && m.at(i, k) >= 0) out.push_back({Violation::Transitivity, i, j, k});
    }
}

inline LinearityResult finish(std::size_t n, std::vector<LinearityFinding> all, std::size_t keep) {
    LinearityResult r;
    r.pairs = n * n;
    r.triples = n * n * n;
    r.violations = all.size();
    std::sort(all.begin(), all.end());
    if (all.size() > keep) all.resize(keep);
    r.first = std::move(all);
    return r;
}

}  // namespace detail

// Irreflexivity, trichotomy and antisymmetry on all pairs, transitivity on all
// triples, for a matrix over pairwise distinct items.
inline LinearityResult linearity_serial(const OrderMatrix& m, std::size_t keep = 16) {
    std::vector<LinearityFinding> all;
    for (std::size_t i = 0; i < m.n; ++i) detail::pair_findings(m, i, all);
    for (std::size_t i = 0; i < m.n; ++i) detail::triple_findings(m, i, all);
    return detail::finish(m.n, std::move(all), keep);
}

inline LinearityResult linearity_parallel(const OrderMatrix& m, std::size_t keep = 16) {
    std::vector<LinearityFinding> all;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(m.n);
#pragma omp parallel
    {
        std::vector<LinearityFinding> local;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            detail::pair_findings(m, static_cast<std::size_t>(i), local);
            detail::triple_findings(m, static_cast<std::size_t>(i), local);
        }
#pragma omp critical(bh_kernel_merge)
        all.insert(all.end(), local.begin(), local.end());
    }
    return detail::finish(m.n, std::move(all), keep);
}

// Ordered pairs (i, j), i and j < n, for which `pred` fails or throws.
struct PairFailure {
    std::size_t i, j;
    std::string what;  // exception message, empty for a plain false

    friend bool operator==(const PairFailure&, const PairFailure&) = default;
};

struct PairResult {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<PairFailure> first;

    friend bool operator==(const PairResult&, const PairResult&) = default;
};

namespace detail {

template <class Pred>
void run_row(std::size_t n, std::size_t i, Pred& pred, std::vector<PairFailure>& out) {
    for (std::size_t j = 0; j < n; ++j) {
        try {
            if (!pred(i, j)) out.push_back({i, j, {}});
        } catch (const std::exception& e) {
            out.push_back({i, j, e.what()});
        }
    }
}

inline PairResult finish_pairs(std::size_t n, std::vector<PairFailure> all, std::size_t keep) {
    std::sort(all.begin(), all.end(), [](const PairFailure& a, const PairFailure& b) {
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    PairResult r;
    r.checked = n * n;
    r.failures = all.size();
    if (all.size() > keep) all.resize(keep);
    r.first = std::move(all);
    return r;
}

}  // namespace detail

template <class Pred>
PairResult check_pairs_serial(std::size_t n, Pred pred, std::size_t keep = 16) {
    std::vector<PairFailure> all;
    for (std::size_t i = 0; i < n; ++i) detail::run_row(n, i, pred, all);
    return detail::finish_pairs(n, std::move(all), keep);
}

template <class Pred>
PairResult check_pairs_parallel(std::size_t n, Pred pred, std::size_t keep = 16) {
    std::vector<PairFailure> all;
    const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
    {
        std::vector<PairFailure> local;
#pragma omp for schedule(dynamic, 4) nowait
        for (std::ptrdiff_t i = 0; i < sn; ++i) detail::run_row(n, static_cast<std::size_t>(i), pred, local);
#pragma omp critical(bh_kernel_merge)
        all.insert(all.end(), local.begin(), local.end());
    }
    return detail::finish_pairs(n, std::move(all), keep);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace bh::kernels

#endif
