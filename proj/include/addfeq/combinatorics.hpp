#pragma once

#include <gmpxx.h>

#include <vector>

#include "addfeq/error.hpp"
#include "addfeq/rational.hpp"

namespace addfeq {

inline mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// p(p-1)...(p-r+1); zero once r exceeds p.
inline mpz_class falling_factorial(unsigned p, unsigned r) {
    if (r > p) return 0;
    mpz_class acc = 1;
    for (unsigned s = 0; s < r; ++s) acc *= static_cast<long>(p - s);
    return acc;
}

// k! / (parts_1! ... parts_m!). The parts must sum to k.
inline Rational multinomial(unsigned k, const std::vector<unsigned>& parts) {
    unsigned long total = 0;
    for (unsigned part : parts) total += part;
    require_input(total == k, "multinomial: parts do not sum to k");
    mpz_class denom = 1;
    for (unsigned part : parts) denom *= factorial(part);
    return Rational(factorial(k), denom);
}

} // namespace addfeq
