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

#include "zerofree/arith.hpp"

#include <algorithm>
#include <map>

#include "zerofree/errors.hpp"

namespace zf {

namespace {

constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr unsigned long kTrialLimit = 1000;
constexpr unsigned long kFactorTrialLimit = 10000000;
constexpr std::size_t kMaxRootCandidates = 2000000;

bool strong_probable_prime(const mpz_class& n, unsigned long base) {
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    mpz_class x;
    const mpz_class a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const mpz_class n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n1) return true;
    }
    return false;
}

// Trial-division factorization; empty optional when a cofactor above the
// limit squared remains that is not a proven prime.
std::optional<std::map<mpz_class, unsigned long>> factor_small(const mpz_class& x) {
    std::map<mpz_class, unsigned long> out;
    mpz_class n = abs(x);
    for (unsigned long d = 2; d <= kFactorTrialLimit; d += (d == 2 ? 1 : 2)) {
        if (mpz_class(d) * d > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[mpz_class(d)];
            n /= d;
        }
    }
    if (n > 1) {
        const PrimalityResult pr = is_prime(n);
        if (pr.status != PrimalityStatus::proven_prime) return std::nullopt;
        ++out[n];
    }
    return out;
}

std::vector<mpz_class> divisors_of(const std::map<mpz_class, unsigned long>& fac) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned long i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Largest k with x = b^k and b prime; returns (b, k) or empty.
std::optional<std::pair<mpz_class, unsigned long>> prime_power_split(const mpz_class& x) {
    if (x < 2) return std::nullopt;
    const unsigned long max_k = mpz_sizeinbase(x.get_mpz_t(), 2);
    for (unsigned long k = max_k; k >= 2; --k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), k) != 0) {
            if (root >= 2 && is_prime(root).is_prime()) return std::make_pair(root, k);
            if (root >= 2) return std::nullopt;
        }
    }
    if (is_prime(x).is_prime()) return std::make_pair(x, 1UL);
    return std::nullopt;
}

// e^n f(d/e), exact in integers.
mpz_class homogeneous_value(const Polynomial& f, const mpz_class& d, const mpz_class& e) {
    mpz_class acc = 0;
    mpz_class epow = 1;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * d + f.coeff(i) * epow;
        epow *= e;
    }
    return acc;
}

}  // namespace

std::string to_string(PrimalityStatus s) {
    switch (s) {
        case PrimalityStatus::proven_prime:
            return "proven_prime";
        case PrimalityStatus::probable_prime:
            return "probable_prime";
        case PrimalityStatus::composite:
            return "composite";
        case PrimalityStatus::unit:
            return "unit";
    }
    return "composite";
}

PrimalityStatus primality_status_from_string(const std::string& s) {
    if (s == "proven_prime") return PrimalityStatus::proven_prime;
    if (s == "probable_prime") return PrimalityStatus::probable_prime;
    if (s == "composite") return PrimalityStatus::composite;
    if (s == "unit") return PrimalityStatus::unit;
    throw ParseError("unknown primality status: " + s, 0);
}

const mpz_class& deterministic_prime_bound() {
    static const mpz_class bound("3317044064679887385961981");
    return bound;
}

PrimalityResult is_prime(const mpz_class& x) {
    PrimalityResult out;
    if (x < 0) {
        out = is_prime(mpz_class(-x));
        if (out.status != PrimalityStatus::unit) out.status = PrimalityStatus::composite;
        out.negative = true;
        out.method = "negative; |x| " + out.method;
        return out;
    }
    if (x == 1) {
        out.status = PrimalityStatus::unit;
        out.method = "unit";
        return out;
    }
    if (x == 0) {
        out.status = PrimalityStatus::composite;
        out.method = "zero";
        return out;
    }
    for (unsigned long d = 2; d <= kTrialLimit; ++d) {
        if (x == d) {
            out.status = PrimalityStatus::proven_prime;
            out.method = "trial_division";
            return out;
        }
        if (mpz_divisible_ui_p(x.get_mpz_t(), d)) {
            out.status = PrimalityStatus::composite;
            out.method = "trial_division";
            out.factor = mpz_class(d);
            return out;
        }
    }
    if (x < mpz_class(kTrialLimit) * kTrialLimit) {
        out.status = PrimalityStatus::proven_prime;
        out.method = "trial_division";
        return out;
    }
    if (x < deterministic_prime_bound()) {
        for (unsigned long b : kBases) {
            if (!strong_probable_prime(x, b)) {
                out.status = PrimalityStatus::composite;
                out.method = "strong_pseudoprime_base_" + std::to_string(b);
                return out;
            }
        }
        out.status = PrimalityStatus::proven_prime;
        out.method = "deterministic_strong_pseudoprime";
        return out;
    }
    const int r = mpz_probab_prime_p(x.get_mpz_t(), 30);
    if (r == 0) {
        out.status = PrimalityStatus::composite;
        out.method = "bpsw";
    } else {
        out.status = r == 2 ? PrimalityStatus::proven_prime : PrimalityStatus::probable_prime;
        out.method = "bpsw";
    }
    return out;
}

std::pair<unsigned long, mpz_class> p_adic_valuation(const mpz_class& x, const mpz_class& p) {
    if (x == 0) throw DomainError("p_adic_valuation of zero");
    if (p < 2) throw DomainError("p_adic_valuation requires p >= 2");
    mpz_class c = abs(x);
    const unsigned long v = mpz_remove(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    return {v, c};
}

std::string to_string(WitnessMode m) { return m == WitnessMode::pq ? "pq" : "prime_power"; }

WitnessOutcome extract_witness(const mpz_class& value, const mpz_class& derivative_value, const mpz_class& q_max,
                               WitnessMode mode) {
    if (value <= 0) throw DomainError("extract_witness requires value > 0");
    if (q_max < 1) throw DomainError("extract_witness requires q_max >= 1");
    WitnessOutcome out;
    if (mode == WitnessMode::prime_power && derivative_value == 0) {
        out.reason = "derivative vanishes at m";
        return out;
    }
    std::vector<WitnessSplit> splits;
    for (mpz_class q = 1; q <= q_max && q <= value; ++q) {
        if (!mpz_divisible_p(value.get_mpz_t(), q.get_mpz_t())) continue;
        const mpz_class cof = value / q;
        std::optional<std::pair<mpz_class, unsigned long>> pk;
        if (mode == WitnessMode::pq) {
            if (cof >= 2 && is_prime(cof).is_prime()) pk = std::make_pair(cof, 1UL);
        } else {
            pk = prime_power_split(cof);
        }
        if (!pk || mpz_divisible_p(q.get_mpz_t(), pk->first.get_mpz_t())) continue;
        splits.push_back({pk->first, pk->second, q});
    }
    if (splits.empty()) {
        out.reason = mode == WitnessMode::pq ? "no split p*q with p prime and q <= q_max"
                                             : "no split p^k*q with p prime and q <= q_max";
        return out;
    }
    FactorizationWitness w;
    w.p = splits.front().p;
    w.k = splits.front().k;
    w.q = splits.front().q;
    w.primality = is_prime(w.p);
    w.alternatives.assign(splits.begin() + 1, splits.end());
    if (mode == WitnessMode::prime_power) {
        auto [ell, r] = p_adic_valuation(derivative_value, w.p);
        w.ell = ell;
        w.r = r;
        const mpq_class half_k(static_cast<long>(w.k), 2);
        const mpq_class ell_q(static_cast<long>(ell));
        w.s = ell_q < half_k ? ell_q : half_k;
        w.s.canonicalize();
    }
    out.witness = std::move(w);
    return out;
}

RationalRootResult has_rational_root(const Polynomial& f) {
    if (f.degree() < 0) throw DomainError("has_rational_root of zero polynomial");
    RationalRootResult out;
    if (f.degree() == 0) {
        out.status = RationalRootStatus::none;
        return out;
    }
    if (f.coeff(0) == 0) {
        out.status = RationalRootStatus::found;
        out.root = mpq_class(0);
        return out;
    }
    const auto fa0 = factor_small(f.coeff(0));
    const auto fan = factor_small(f.leading());
    if (!fa0 || !fan) return out;
    const std::vector<mpz_class> num = divisors_of(*fa0);
    const std::vector<mpz_class> den = divisors_of(*fan);
    if (num.size() * den.size() > kMaxRootCandidates) return out;
    for (const mpz_class& e : den) {
        for (const mpz_class& d : num) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                const mpz_class sd = sign * d;
                if (homogeneous_value(f, sd, e) == 0) {
                    out.status = RationalRootStatus::found;
                    out.root = mpq_class(sd, e);
                    out.root->canonicalize();
                    return out;
                }
            }
        }
    }
    out.status = RationalRootStatus::none;
    return out;
}

}  // namespace zf
