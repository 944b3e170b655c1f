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
#include "zerofree/certifier.hpp"
#include "zerofree/errors.hpp"
#include "zerofree/oracle.hpp"

using namespace zf;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

CertifyOptions with_q(long q) {
    CertifyOptions o;
    o.q_max = q;
    return o;
}

Polynomial digit_polynomial(unsigned long value, unsigned long base) {
    std::vector<mpz_class> c;
    for (; value > 0; value /= base) c.emplace_back(value % base);
    return Polynomial(std::move(c));
}

Polynomial primitive_part(const Polynomial& f) {
    const mpz_class c = f.content();
    std::vector<mpz_class> cs = f.coeffs();
    for (auto& x : cs) x /= c;
    return Polynomial(std::move(cs));
}

}  // namespace

TEST_SUITE("certifier") {
    TEST_CASE("flagship quartic at m = 3") {
        const Polynomial f = P("X^4-10*X^3+2162");
        const CertifyResult r = certify_lens(f, 3);
        REQUIRE(r.certificate);
        const Certificate& c = *r.certificate;
        CHECK(c.criterion == "cor310_cot");
        CHECK(c.witness.p == 1973);
        CHECK(c.primality_status == PrimalityStatus::proven_prime);
        CHECK_FALSE(c.conditional);
        CHECK(parse_decimal(c.region["cot_interval"]["lo"].get<std::string>()) > mpq_class(241, 100));
        CHECK(parse_decimal(c.region["cot_interval"]["hi"].get<std::string>()) < mpq_class(359, 100));
        for (const CheckRecord& k : c.checks) CHECK(parse_decimal(k.margin) > 0);
        CHECK(certificate_verify(c).ok);
        CHECK(irreducible_bruteforce(f).verdict == IrreducibilityVerdict::irreducible);
    }

    TEST_CASE("flagship quartic at m = 5 is refused") {
        const Polynomial f = P("X^4-10*X^3+2162");
        CHECK_FALSE(certify_lens(f, 5).certificate);
        CHECK_FALSE(certify_sector_pq(f, 5, with_q(3)).certificate);
        const Lens L = *lens_of(f, Precision{}).lens;
        CHECK_FALSE(interval_cot(L, Precision{}).contains(5));
        CHECK_FALSE(interval_disk_in_lens(L, Precision{}).contains(5));
        CHECK_FALSE(combined_region(best_sector(f).best, L, Precision{}).contains(5));
    }

    TEST_CASE("non-negative digits at base ten") {
        const CertifyResult r = certify_sector_pq(P("X^3+9X^2+7X+3"), 10);
        REQUIRE(r.certificate);
        CHECK(r.certificate->criterion == "cor32_nonneg");
        CHECK(r.certificate->witness.p == 1973);
        CHECK(r.certificate->checks.at(0).right.substr(0, 6) == "1.1547");
        CHECK(certificate_verify(*r.certificate).ok);
    }

    TEST_CASE("dominant leading coefficient") {
        int certified = 0;
        for (long a2 = -3; a2 <= 3; ++a2)
            for (long a1 = -3; a1 <= 3; ++a1)
                for (long a0 = -3; a0 <= 3; ++a0) {
                    const Polynomial f({a0, a1, a2, 7});
                    const SignIndexSets sets = sign_index_sets(f);
                    if (sets.neg_indices.empty() || sets.neg_sum_abs >= 7) continue;
                    const mpz_class v = evaluate(f, 4);
                    if (v <= 0 || !is_prime(v).is_prime()) continue;
                    const CertifyResult r = certify_sector_pq(f, 4);
                    REQUIRE(r.certificate);
                    REQUIRE(certificate_verify(*r.certificate).ok);
                    ++certified;
                }
        CHECK(certified > 10);
    }

    TEST_CASE("reducible quadratic is never certified") {
        const Polynomial f = P("X^2-2X-3");
        for (long q = 1; q <= 3; ++q)
            for (long m = -50; m <= 200; ++m)
                for (auto fam : {CriterionFamily::sector_pq, CriterionFamily::prime_power})
                    REQUIRE_FALSE(certify_with(fam, f, m, with_q(q)).certificate);
    }

    TEST_CASE("prime power criterion") {
        const CertifyResult a = certify_sector_prime_power(P("X^2+X+1"), 2);
        REQUIRE(a.certificate);
        CHECK(a.certificate->criterion == "thm35_prime_power");
        CHECK(*a.certificate->witness.ell == 0);
        CHECK(a.certificate->witness.s == 0);
        CHECK(certificate_verify(*a.certificate).ok);

        // 12 = 2^2 * 3 and 6 = 2 * 3 give s = 1: the plain bound 6 is missed,
        // the square-root bound sqrt(6) is met because X^2 + 3 has no rational root.
        const CertifyResult b = certify_sector_prime_power(P("X^2+3"), 3, with_q(3));
        REQUIRE(b.certificate);
        CHECK(b.certificate->criterion == "thm35_sqrt");
        CHECK(b.certificate->witness.s == 1);
        CHECK(b.certificate->rational_roots == "none");
        CHECK(parse_decimal(b.certificate->checks.at(0).right) > mpq_class(2449, 1000));

        // Non-negative coefficients, f(m) a prime power, p not dividing f'(m).
        const CertifyResult c = certify_sector_prime_power(P("X^2+X+3"), 2);
        REQUIRE(c.certificate);
        CHECK(c.certificate->witness.p == 3);
        CHECK(c.certificate->witness.k == 2);
        CHECK(c.certificate->criterion == "thm35_prime_power");
        CHECK_FALSE(certify_sector_pq(P("X^2+X+3"), 2).certificate);
    }

    TEST_CASE("quartic family at m = 3") {
        int certified = 0;
        for (long a = 1; a <= 4; ++a)
            for (long b = 216 * a + 1; b <= 216 * a + 200; ++b) {
                const mpz_class value = 81 - 27 * a + b;
                if (!is_prime(value).is_prime()) continue;
                const CertifyResult r = certify_lens(Polynomial({b, 0, 0, -a, 1}), 3);
                REQUIRE(r.certificate);
                REQUIRE(r.certificate->witness.p == value);
                ++certified;
            }
        CHECK(certified > 50);
    }

    TEST_CASE("combined criterion") {
        const Polynomial f = P("X^4-10*X^3+2162");
        const CertifyResult a = certify_combined(f, 3);
        REQUIRE(a.certificate);
        CHECK(a.certificate->criterion == "cor312_combined");
        CHECK(a.certificate->branch == "lens");
        // f(13) = 8753 is prime and 13 > 10 + sqrt(2).
        CHECK(evaluate(f, 13) == 8753);
        const CertifyResult b = certify_combined(f, 13);
        REQUIRE(b.certificate);
        CHECK(b.certificate->branch == "ray");
        CHECK(certificate_verify(*b.certificate).ok);
        CHECK_FALSE(certify_combined(f, 12).certificate);

        const Polynomial g = P("X^3+9X^2+7X+3");
        const CertifyResult c = certify_combined(g, 10);
        REQUIRE(c.certificate);
        CHECK(c.certificate->branch == "ray");
        CHECK(c.certificate->region["shape"] == "ray_only");
    }

    TEST_CASE("search") {
        const SearchReport a = search_m(P("X^4-10*X^3+2162"), 1, 20);
        REQUIRE(a.first());
        CHECK(a.first()->m == 3);
        CHECK(a.outcomes.size() == 3);
        CHECK(a.outcomes[1].outcome == Outcome::value_composite);

        const SearchReport b = search_m(digit_polynomial(1973, 10), 10, 10);
        REQUIRE(b.first());
        CHECK(b.first()->m == 10);

        SearchOptions all;
        all.exhaustive = true;
        all.modes = {CriterionFamily::lens, CriterionFamily::sector_pq, CriterionFamily::prime_power,
                     CriterionFamily::combined};
        all.certify.q_max = 3;
        const SearchReport c = search_m(P("(X^2+1)*(X^2+3)"), 1, 50, all);
        CHECK_FALSE(c.first());
        CHECK(c.outcomes.size() == 50);

        const SearchReport d = search_m(P("X^4-10*X^3+2162"), 1, 30, all);
        CHECK(d.outcomes.size() == 30);
        for (const auto& mo : d.outcomes) CHECK((mo.outcome == Outcome::certified) == !mo.criterion.empty());

        CHECK_THROWS_AS(search_m(P("X^2+1"), 5, 4), DomainError);
        CHECK_THROWS_AS(search_m(P("X^2+1"), 0, 4), DomainError);
    }

    TEST_CASE("negative m") {
        const Polynomial f = P("X^3-9X^2+7X-3");
        CHECK(evaluate(f, -10) == -1973);
        const CertifyResult r = certify_sector_pq(f, -10);
        REQUIRE(r.certificate);
        CHECK(r.certificate->argument_negated);
        CHECK(r.certificate->sign_normalized);
        CHECK(r.certificate->m == -10);
        CHECK(certificate_verify(*r.certificate).ok);
        SearchOptions o;
        o.negative_m = true;
        const SearchReport s = search_m(f, 10, 10, o);
        REQUIRE(s.first());
        CHECK(s.first()->m == -10);
    }

    TEST_CASE("probable primes give conditional certificates") {
        const mpz_class p("4000000000000000000000027");
        const Polynomial f(std::vector<mpz_class>{p - 100, 0, 1});
        const CertifyResult r = certify_sector_pq(f, 10);
        REQUIRE(r.certificate);
        CHECK(r.certificate->primality_status == PrimalityStatus::probable_prime);
        CHECK(r.certificate->conditional);
        CHECK(certificate_verify(*r.certificate).ok);
    }

    TEST_CASE("json round trip and tampering") {
        const Certificate c = *certify_lens(P("X^4-10*X^3+2162"), 3).certificate;
        const auto j = c.to_json();
        CHECK(Certificate::from_json(j).to_json() == j);
        CHECK(Certificate::from_json(nlohmann::ordered_json::parse(j.dump())).to_json() == j);

        Certificate m = c;
        m.m -= 1;
        CHECK_FALSE(certificate_verify(m).ok);

        Certificate loose = c;
        loose.region["v_tilde_upper"] = "0.1";
        CHECK_FALSE(certificate_verify(loose).ok);

        Certificate margin = c;
        margin.checks[1].margin = "0.9";
        CHECK_FALSE(certificate_verify(margin).ok);

        auto bad = j;
        bad["schema"] = 2;
        CHECK_THROWS_AS(Certificate::from_json(bad), ParseError);
        auto missing = j;
        missing.erase("witness");
        CHECK_THROWS_AS(Certificate::from_json(missing), ParseError);
    }

    TEST_CASE("reducible products are never certified") {
        std::mt19937_64 rng(71);
        for (int t = 0; t < 40; ++t) {
            const int dg = 1 + t % 3, dh = 1 + (t / 3) % 4;
            const Polynomial f = testing::random_factor(rng, dg, 10) * testing::random_factor(rng, dh, 10);
            for (long q = 1; q <= 3; ++q) {
                SearchOptions o;
                o.exhaustive = true;
                o.certify.q_max = q;
                o.modes = {CriterionFamily::lens, CriterionFamily::sector_pq, CriterionFamily::prime_power,
                           CriterionFamily::combined};
                REQUIRE_FALSE(search_m(f, 1, 100, o).first());
            }
        }
    }

    TEST_CASE("certificates agree with the factorization oracle") {
        std::mt19937_64 rng(72);
        int certified = 0;
        for (int t = 0; t < 400; ++t) {
            const Polynomial f = primitive_part(testing::random_polynomial(rng, 2 + t % 5, 50));
            if (f.leading() < 0) continue;
            SearchOptions o;
            o.modes = {CriterionFamily::sector_pq};
            const SearchReport s = search_m(f, 1, 200, o);
            if (!s.first() || s.first()->witness.q != 1) continue;
            ++certified;
            REQUIRE(irreducible_bruteforce(f).verdict == IrreducibilityVerdict::irreducible);
            REQUIRE(certificate_verify(*s.first()).ok);
        }
        CHECK(certified > 100);
    }

    TEST_CASE("a fixed threshold certifies every larger admissible m") {
        std::mt19937_64 rng(73);
        for (int t = 0; t < 60; ++t) {
            const Polynomial f = testing::random_polynomial(rng, 2 + t % 4, 9);
            const CertificationContext ctx(f, false, with_q(3));
            std::optional<mpz_class> first_q;
            for (long m = 1; m <= 80; ++m) {
                const CertifyResult r = ctx.certify(CriterionFamily::sector_pq, m);
                if (!first_q) {
                    if (r.certificate && r.certificate->criterion != "thm31_sqrt_q") first_q = r.certificate->witness.q;
                    continue;
                }
                const mpz_class value = evaluate(f, m);
                if (value <= 0) continue;
                const WitnessOutcome w = extract_witness(value, 0, 3, WitnessMode::pq);
                if (w.witness && w.witness->q <= *first_q) REQUIRE(r.certificate);
            }
        }
    }
}
