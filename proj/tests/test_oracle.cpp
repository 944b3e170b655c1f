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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "zerofree/arith.hpp"
#include "zerofree/errors.hpp"
#include "zerofree/oracle.hpp"

using namespace zf;

namespace {

bool near_some(const std::vector<std::complex<double>>& roots, std::complex<double> z, double tol) {
    return std::any_of(roots.begin(), roots.end(), [&](auto r) { return std::abs(r - z) < tol; });
}

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("roots of small polynomials") {
        const RootSet a = roots_numeric(parse_polynomial("X^2-2X-3"));
        REQUIRE(a.converged);
        CHECK(near_some(a.roots, 3.0, 1e-10));
        CHECK(near_some(a.roots, -1.0, 1e-10));

        const RootSet b = roots_numeric(parse_polynomial("X^6-1"));
        REQUIRE(b.converged);
        REQUIRE(b.roots.size() == 6);
        for (int k = 0; k < 6; ++k) CHECK(near_some(b.roots, std::polar(1.0, k * std::numbers::pi / 3), 1e-10));

        const RootSet c = roots_numeric(parse_polynomial("X^3*(X-2)"));
        REQUIRE(c.converged);
        CHECK(std::count(c.roots.begin(), c.roots.end(), std::complex<double>(0, 0)) == 3);
        CHECK(near_some(c.roots, 2.0, 1e-10));
    }

    TEST_CASE("flagship roots avoid its sector") {
        const Polynomial f = parse_polynomial("X^4-10*X^3+2162");
        const RootSet r = roots_numeric(f);
        REQUIRE(r.converged);
        REQUIRE(r.roots.size() == 4);
        const Sector s = best_sector(f).best;
        for (const auto& z : r.roots) CHECK_FALSE(in_sector(z, s, 1e-6 + r.residual_bound));
    }

    TEST_CASE("vieta relations") {
        std::mt19937_64 rng(61);
        int converged = 0;
        for (int t = 0; t < 300; ++t) {
            const Polynomial f = testing::random_polynomial(rng, 2 + t % 9, 20);
            const RootSet r = roots_numeric(f);
            if (!r.converged) continue;
            ++converged;
            const int n = f.degree();
            std::complex<double> sum = 0, prod = 1;
            for (const auto& z : r.roots) {
                sum += z;
                prod *= z;
            }
            const double an = f.leading().get_d();
            const std::complex<double> want_sum = -f.coeff(n - 1).get_d() / an;
            const std::complex<double> want_prod = (n % 2 ? -1.0 : 1.0) * f.coeff(0).get_d() / an;
            REQUIRE(std::abs(sum - want_sum) <= 1e-8 * std::max(1.0, std::abs(want_sum)));
            REQUIRE(std::abs(prod - want_prod) <= 1e-8 * std::max(1.0, std::abs(want_prod)));
        }
        CHECK(converged > 290);
    }

    TEST_CASE("sector membership") {
        Sector s;
        s.vertex = BoundedReal(10);
        s.n = 4;
        CHECK(in_sector({11.0, 0.0}, s, 0.1));
        CHECK(in_sector({11.0, 0.5}, s, 0.0));
        CHECK_FALSE(in_sector({11.0, 1.0}, s, 0.0));
        CHECK_FALSE(in_sector({11.0, 1.01}, s, 0.0));
        CHECK_FALSE(in_sector({10.0, 0.0}, s, 0.0));
        CHECK_FALSE(in_sector({9.0, 0.0}, s, 0.0));
    }

    TEST_CASE("lens membership") {
        const Lens L{BoundedReal(mpq_class(1, 10)), 4, SectorMethod::neg_sum};
        CHECK(in_lens({5.0, 0.0}, L, 0.0));
        CHECK(in_lens({9.9, 0.0}, L, 0.0));
        CHECK_FALSE(in_lens({10.1, 0.0}, L, 0.0));
        CHECK_FALSE(in_lens({9.9, 0.0}, L, 0.2));
        CHECK_FALSE(in_lens({5.0, 5.0}, L, 0.0));
    }

    TEST_CASE("irreducibility examples") {
        CHECK(irreducible_bruteforce(parse_polynomial("X^2+X+1")).verdict == IrreducibilityVerdict::irreducible);
        const IrreducibilityResult a = irreducible_bruteforce(parse_polynomial("X^4+4"));
        REQUIRE(a.verdict == IrreducibilityVerdict::reducible);
        REQUIRE(a.factor);
        CHECK(divide_exact(parse_polynomial("X^4+4"), *a.factor));
        CHECK(irreducible_bruteforce(parse_polynomial("X^4-10*X^3+2162")).verdict ==
              IrreducibilityVerdict::irreducible);
        CHECK(irreducible_bruteforce(parse_polynomial("X^2-4")).verdict == IrreducibilityVerdict::reducible);
        CHECK_THROWS_AS(irreducible_bruteforce(parse_polynomial("2X^2+4")), DomainError);
    }

    TEST_CASE("planted products are reducible") {
        std::mt19937_64 rng(62);
        for (int t = 0; t < 200; ++t) {
            const int dg = 1 + t % 3, dh = 1 + (t / 3) % 3;
            Polynomial f = testing::random_factor(rng, dg, 10) * testing::random_factor(rng, dh, 10);
            f = Polynomial(std::vector<mpz_class>(f.coeffs()));
            const mpz_class c = f.content();
            std::vector<mpz_class> cs = f.coeffs();
            for (auto& x : cs) x /= c;
            const Polynomial g(std::move(cs));
            const IrreducibilityResult r = irreducible_bruteforce(g);
            REQUIRE(r.verdict == IrreducibilityVerdict::reducible);
            REQUIRE(divide_exact(g, *r.factor));
            REQUIRE(r.factor->degree() >= 1);
            REQUIRE(r.factor->degree() < g.degree());
        }
    }

    TEST_CASE("planted irreducibles are not split") {
        std::mt19937_64 rng(63);
        std::uniform_int_distribution<long> d(-20, 20);
        int tested = 0;
        for (int t = 0; t < 400 && tested < 200; ++t) {
            const long a = 1 + std::abs(d(rng)), b = d(rng), c = d(rng);
            Polynomial f;
            if (t % 2 == 0) {
                if (b * b - 4 * a * c >= 0) continue;
                f = Polynomial({c, b, a});
            } else {
                f = Polynomial({c, b, d(rng), a});
                if (f.coeff(0) == 0 || !has_rational_root(f).proven_none()) continue;
            }
            if (f.content() != 1) continue;
            ++tested;
            REQUIRE(irreducible_bruteforce(f).verdict == IrreducibilityVerdict::irreducible);
        }
        CHECK(tested >= 150);
    }

    TEST_CASE("budget exhaustion is out of reach") {
        const Polynomial f = parse_polynomial("720720*X^12+X+720720");
        CHECK(irreducible_bruteforce(f, std::chrono::milliseconds(0)).verdict == IrreducibilityVerdict::out_of_reach);
    }
}
