#ifndef BH_DILATOR_LIB_HPP
#define BH_DILATOR_LIB_HPP

#include <cstddef>

#include "bh/dilator.hpp"

namespace bh {

// X -> X + {top}; top is maximal with empty support, v<i> has support {i}.
DilatorPtr make_successor();

// X -> omega^X: weakly descending sequences w[x0,...,xk] with x0 >= ... >= xk,
// lexicographic with a proper prefix below its extensions.
DilatorPtr make_omega_power();

// X -> {c0 < ... < c(k-1)} with empty supports.
DilatorPtr make_constant(std::size_t k);

// X -> X.
DilatorPtr make_identity();

// Disjoint sum, every L(..) below every R(..).
DilatorPtr make_sum(DilatorPtr left, DilatorPtr right);

// Lexicographic product P(a,b): compare a first, then b.
DilatorPtr make_product(DilatorPtr left, DilatorPtr right);

// Test hook: `inner` with every support reported empty. Violates the support
// condition as soon as T_0 misses some token.
DilatorPtr make_broken_support(DilatorPtr inner);

}  // namespace bh

#endif
