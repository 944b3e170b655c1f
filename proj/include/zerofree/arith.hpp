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

#ifndef ZEROFREE_ARITH_HPP
#define ZEROFREE_ARITH_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerofree/poly.hpp"

namespace zf {

enum class PrimalityStatus { proven_prime, probable_prime, composite, unit };
std::string to_string(PrimalityStatus s);
PrimalityStatus primality_status_from_string(const std::string& s);

struct PrimalityResult {
    PrimalityStatus status = PrimalityStatus::composite;
    std::string method;
    std::optional<mpz_class> factor;  // nontrivial factor of |x| when one was found
    bool negative = false;

    bool is_prime() const {
        return status == PrimalityStatus::proven_prime || status == PrimalityStatus::probable_prime;
    }
};

/// Values below this bound are decided deterministically by the strong
/// pseudoprime test to the first 13 prime bases.
const mpz_class& deterministic_prime_bound();

/// 1, -1 are units; 0 and all negatives are never prime (negatives note |x|).
PrimalityResult is_prime(const mpz_class& x);

/// Returns (v, cofactor) with |x| = p^v * cofactor and p not dividing cofactor.
std::pair<unsigned long, mpz_class> p_adic_valuation(const mpz_class& x, const mpz_class& p);

enum class WitnessMode { pq, prime_power };
std::string to_string(WitnessMode m);

struct WitnessSplit {
    mpz_class p;
    unsigned long k = 1;
    mpz_class q;
};

struct FactorizationWitness {
    mpz_class p;
    unsigned long k = 1;
    mpz_class q = 1;
    std::optional<unsigned long> ell;  // prime_power mode only
    std::optional<mpz_class> r;
    mpq_class s = 0;                   // min(ell, k/2); 0 in pq mode
    PrimalityResult primality;
    std::vector<WitnessSplit> alternatives;  // other admissible splits, larger q
};

struct WitnessOutcome {
    std::optional<FactorizationWitness> witness;
    std::string reason;  // set when witness is empty
};

/// Smallest q in [1, q_max] with value = p^k * q admissible (k = 1 in pq mode)
/// and p not dividing q. Prime-power mode also needs derivative_value != 0.
WitnessOutcome extract_witness(const mpz_class& value, const mpz_class& derivative_value, const mpz_class& q_max,
                               WitnessMode mode);

enum class RationalRootStatus { none, found, undecided };

struct RationalRootResult {
    RationalRootStatus status = RationalRootStatus::undecided;
    std::optional<mpq_class> root;

    bool proven_none() const { return status == RationalRootStatus::none; }
};

/// Rational root theorem search. Undecided only when a_0 or a_n cannot be
/// factored by trial division within the budget.
RationalRootResult has_rational_root(const Polynomial& f);

}  // namespace zf

#endif
