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

#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zerofree/arith.hpp"
#include "zerofree/errors.hpp"

using namespace zf;

TEST_SUITE("arith") {
    TEST_CASE("primality examples") {
        CHECK(is_prime(1973).status == PrimalityStatus::proven_prime);
        CHECK(is_prime(1).status == PrimalityStatus::unit);
        CHECK_FALSE(is_prime(1).is_prime());
        CHECK(is_prime(mpz_class("2305843009213693951")).status == PrimalityStatus::proven_prime);
        CHECK(is_prime(0).status == PrimalityStatus::composite);
        const PrimalityResult neg = is_prime(-7);
        CHECK_FALSE(neg.is_prime());
        CHECK(neg.negative);
        const PrimalityResult c = is_prime(1001);
        CHECK(c.status == PrimalityStatus::composite);
        REQUIRE(c.factor);
        CHECK(1001 % c.factor->get_si() == 0);
    }

    TEST_CASE("strong pseudoprimes are rejected") {
        // Composite strong pseudoprimes to several small bases.
        for (const char* s : {"3215031751", "2152302898747", "3474749660383", "341550071728321",
                              "3825123056546413051", "318665857834031151167461"})
            CHECK(is_prime(mpz_class(s)).status == PrimalityStatus::composite);
    }

    TEST_CASE("large primes") {
        CHECK(is_prime(mpz_class("170141183460469231731687303715884105727")).is_prime());
        const PrimalityResult big = is_prime(mpz_class("170141183460469231731687303715884105727"));
        CHECK(big.status == PrimalityStatus::probable_prime);
        CHECK(is_prime(mpz_class("1000000000000000000000007")).status == PrimalityStatus::proven_prime);
        CHECK(is_prime(mpz_class("1000000000000000000000009")).status == PrimalityStatus::composite);
        CHECK(is_prime(mpz_class("4000000000000000000000027")).status == PrimalityStatus::probable_prime);
        CHECK(is_prime(mpz_class("3317044064679887385961981")).status == PrimalityStatus::composite);
    }

    TEST_CASE("agrees with trial division up to a million") {
        for (unsigned long x = 0; x <= 1000000; ++x)
            REQUIRE(is_prime(mpz_class(x)).is_prime() == testing::trial_division_prime(x));
    }

    TEST_CASE("valuation") {
        CHECK(p_adic_valuation(12, 2) == std::make_pair(2UL, mpz_class(3)));
        CHECK(p_adic_valuation(1973, 2) == std::make_pair(0UL, mpz_class(1973)));
        CHECK(p_adic_valuation(1024 * 17, 2) == std::make_pair(10UL, mpz_class(17)));
        CHECK(p_adic_valuation(-18, 3) == std::make_pair(2UL, mpz_class(2)));
        CHECK_THROWS_AS(p_adic_valuation(0, 2), DomainError);
    }

    TEST_CASE("valuation is maximal") {
        std::mt19937_64 rng(51);
        std::uniform_int_distribution<long> dist(1, 1L << 40);
        for (int t = 0; t < 2000; ++t) {
            const mpz_class x = dist(rng);
            const mpz_class p = std::vector<long>{2, 3, 5, 7, 11, 13}[static_cast<std::size_t>(t % 6)];
            const auto [v, c] = p_adic_valuation(x, p);
            mpz_class pv;
            mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), v);
            REQUIRE(pv * c == x);
            REQUIRE(c % p != 0);
        }
    }

    TEST_CASE("witness examples") {
        const WitnessOutcome a = extract_witness(1973, 0, 1, WitnessMode::pq);
        REQUIRE(a.witness);
        CHECK(a.witness->p == 1973);
        CHECK(a.witness->k == 1);
        CHECK(a.witness->q == 1);

        const WitnessOutcome b = extract_witness(12, 6, 3, WitnessMode::prime_power);
        REQUIRE(b.witness);
        CHECK(b.witness->p == 2);
        CHECK(b.witness->k == 2);
        CHECK(b.witness->q == 3);
        CHECK(*b.witness->ell == 1);
        CHECK(*b.witness->r == 3);
        CHECK(b.witness->s == 1);

        const WitnessOutcome c = extract_witness(49, 5, 1, WitnessMode::prime_power);
        REQUIRE(c.witness);
        CHECK(c.witness->p == 7);
        CHECK(c.witness->k == 2);
        CHECK(*c.witness->ell == 0);
        CHECK(*c.witness->r == 5);
        CHECK(c.witness->s == 0);

        CHECK_FALSE(extract_witness(12, 6, 2, WitnessMode::pq).witness);
        CHECK_FALSE(extract_witness(49, 0, 1, WitnessMode::prime_power).witness);
        CHECK_THROWS_AS(extract_witness(0, 1, 1, WitnessMode::pq), DomainError);
        CHECK_THROWS_AS(extract_witness(5, 1, 0, WitnessMode::pq), DomainError);
    }

    TEST_CASE("witness picks the smallest q") {
        const WitnessOutcome a = extract_witness(15, 0, 5, WitnessMode::pq);
        REQUIRE(a.witness);
        CHECK(a.witness->p == 5);
        CHECK(a.witness->q == 3);
        REQUIRE(a.witness->alternatives.size() == 1);
        CHECK(a.witness->alternatives[0].p == 3);
        CHECK(a.witness->alternatives[0].q == 5);
        const WitnessOutcome b = extract_witness(8 * 3, 4, 3, WitnessMode::prime_power);
        REQUIRE(b.witness);
        CHECK(b.witness->p == 2);
        CHECK(b.witness->k == 3);
        CHECK(b.witness->s == mpq_class(3, 2));
    }

    TEST_CASE("witness reconstruction fuzz") {
        std::mt19937_64 rng(52);
        std::uniform_int_distribution<long> vd(1, 5000000), dd(-100000, 100000), qd(1, 6);
        int found = 0;
        for (int t = 0; t < 10000; ++t) {
            const mpz_class value = vd(rng);
            const mpz_class deriv = dd(rng);
            const mpz_class qmax = qd(rng);
            const WitnessMode mode = t % 2 ? WitnessMode::pq : WitnessMode::prime_power;
            const WitnessOutcome w = extract_witness(value, deriv, qmax, mode);
            if (!w.witness) continue;
            ++found;
            const FactorizationWitness& x = *w.witness;
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), x.p.get_mpz_t(), x.k);
            REQUIRE(pk * x.q == value);
            REQUIRE(x.q <= qmax);
            REQUIRE(x.q % x.p != 0);
            REQUIRE(testing::trial_division_prime(x.p.get_ui()));
            if (mode == WitnessMode::pq) REQUIRE(x.k == 1);
            if (mode == WitnessMode::prime_power) {
                REQUIRE(deriv != 0);
                mpz_class pl;
                mpz_pow_ui(pl.get_mpz_t(), x.p.get_mpz_t(), *x.ell);
                REQUIRE(pl * *x.r == abs(deriv));
                REQUIRE(*x.r % x.p != 0);
                const mpq_class half(static_cast<long>(x.k), 2);
                REQUIRE(x.s == std::min(mpq_class(static_cast<long>(*x.ell)), half));
            }
        }
        CHECK(found > 1000);
    }

    TEST_CASE("rational roots") {
        const RationalRootResult a = has_rational_root(parse_polynomial("X^2-1"));
        CHECK(a.status == RationalRootStatus::found);
        REQUIRE(a.root);
        CHECK(evaluate(RationalPolynomial(parse_polynomial("X^2-1")), *a.root) == 0);
        CHECK(has_rational_root(parse_polynomial("X^2+1")).proven_none());
        CHECK(has_rational_root(parse_polynomial("X^3-X^2-X+2")).proven_none());
        const RationalRootResult b = has_rational_root(parse_polynomial("6X^2-5X+1"));
        REQUIRE(b.root);
        CHECK((*b.root == mpq_class(1, 2) || *b.root == mpq_class(1, 3)));
        CHECK(*has_rational_root(parse_polynomial("X^3+X")).root == 0);
        CHECK(has_rational_root(parse_polynomial("X^4-10*X^3+2162")).proven_none());
    }
}
