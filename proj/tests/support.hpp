/*
   Copyright 2026 The zerofree authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZEROFREE_TESTS_SUPPORT_HPP
#define ZEROFREE_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <random>
#include <vector>

#include "zerofree/poly.hpp"

namespace zf::testing {

inline Polynomial random_polynomial(std::mt19937_64& rng, int degree, long bound, bool positive_leading = true) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = coeff(rng);
    while (c.back() == 0 || (positive_leading && c.back() < 0)) c.back() = coeff(rng);
    return Polynomial(std::move(c));
}

// Nonconstant factor with nonzero leading coefficient.
inline Polynomial random_factor(std::mt19937_64& rng, int degree, long bound) {
    return random_polynomial(rng, degree, bound, false);
}

// Sum of a_i m^i with each power computed separately.
inline mpz_class naive_value(const Polynomial& f, const mpz_class& m) {
    mpz_class total = 0;
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(i));
        total += f.coeff(i) * power;
    }
    return total;
}

inline bool trial_division_prime(unsigned long x) {
    if (x < 2) return false;
    for (unsigned long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

}  // namespace zf::testing

#endif
