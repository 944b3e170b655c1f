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

#include "scan.hpp"

#include <algorithm>
#include <random>

#include "zerofree/errors.hpp"

namespace zf::cli {

namespace {

constexpr std::size_t kMaxInstances = 100000;

ParseError bad(const std::string& what) { return ParseError("family descriptor: " + what, 0); }

mpz_class integer_field(const nlohmann::json& j, const char* key) {
    const auto& x = j.at(key);
    if (x.is_number_integer()) return mpz_class(x.get<long>());
    if (x.is_string()) {
        mpz_class out;
        if (out.set_str(x.get<std::string>(), 10) == 0) return out;
    }
    throw bad(std::string("field ") + key + " must be an integer");
}

std::pair<mpz_class, mpz_class> range_field(const nlohmann::json& j, const char* key) {
    const auto& x = j.at(key);
    if (!x.is_array() || x.size() != 2) throw bad(std::string("field ") + key + " must be [lo, hi]");
    nlohmann::json pair{{"lo", x[0]}, {"hi", x[1]}};
    const mpz_class lo = integer_field(pair, "lo"), hi = integer_field(pair, "hi");
    if (lo > hi) throw bad(std::string("empty range in ") + key);
    if (hi - lo > 10 * kMaxInstances) throw bad(std::string("range too large in ") + key);
    return {lo, hi};
}

std::vector<mpz_class> primes_in(const std::pair<mpz_class, mpz_class>& r) {
    std::vector<mpz_class> out;
    for (mpz_class x = std::max(r.first, mpz_class(2)); x <= r.second; ++x)
        if (is_prime(x).is_prime()) out.push_back(x);
    return out;
}

// Deterministic subsample keeping ascending order.
std::vector<mpz_class> sample(std::vector<mpz_class> xs, const nlohmann::json& d) {
    if (!d.contains("sample")) return xs;
    const auto n = d.at("sample").get<std::size_t>();
    if (n >= xs.size()) return xs;
    std::mt19937_64 rng(d.value("seed", 1u));
    std::vector<mpz_class> out;
    std::sample(xs.begin(), xs.end(), std::back_inserter(out), n, rng);
    return out;
}

Polynomial digits_of(mpz_class value, const mpz_class& base) {
    std::vector<mpz_class> c;
    while (value > 0) {
        c.push_back(value % base);
        value /= base;
    }
    return Polynomial(std::move(c));
}

std::vector<CriterionFamily> criteria(const nlohmann::json& d, std::vector<CriterionFamily> fallback) {
    if (!d.contains("criteria")) return fallback;
    std::vector<CriterionFamily> out;
    for (const auto& c : d.at("criteria")) {
        const auto f = criterion_family_from_string(c.get<std::string>());
        if (!f) throw bad("unknown criterion " + c.get<std::string>());
        out.push_back(*f);
    }
    if (out.empty()) throw bad("criteria must not be empty");
    return out;
}

ScanRow run_one(std::string label, const Polynomial& g, const mpz_class& m, const std::vector<CriterionFamily>& modes,
                const CertifyOptions& opts) {
    ScanRow row;
    row.label = std::move(label);
    row.polynomial = g;
    row.m = m;
    if (g.degree() < 2) {
        row.reason = "degree < 2";
        row.outcome = Outcome::outside_region;
        return row;
    }
    SearchOptions so;
    so.certify = opts;
    so.modes = modes;
    so.negative_m = m < 0;
    const mpz_class k = abs(m);
    if (k == 0) {
        row.reason = "m = 0 is not scanned";
        return row;
    }
    const SearchReport rep = search_m(g, k, k, so);
    const MOutcome& mo = rep.outcomes.front();
    row.outcome = mo.outcome;
    row.criterion = mo.criterion;
    row.reason = mo.reason;
    return row;
}

}  // namespace

std::size_t ScanReport::certified() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.outcome == Outcome::certified; }));
}

ScanReport run_scan(const nlohmann::json& d, const CertifyOptions& base) {
    try {
        if (!d.is_object()) throw bad("expected a JSON object");
        ScanReport rep;
        rep.family = d.at("family").get<std::string>();
        CertifyOptions opts = base;
        if (d.contains("q_max")) opts.q_max = integer_field(d, "q_max");
        if (opts.q_max < 1) throw bad("q_max must be >= 1");

        if (rep.family == "digit_polynomial") {
            const mpz_class b = d.contains("base") ? integer_field(d, "base") : mpz_class(10);
            if (b < 2) throw bad("base must be >= 2");
            const mpz_class m = d.contains("m") ? integer_field(d, "m") : b;
            const auto modes = criteria(d, {CriterionFamily::sector_pq});
            for (const mpz_class& p : sample(primes_in(range_field(d, "primes")), d))
                rep.rows.push_back(run_one("p=" + p.get_str(), digits_of(p, b), m, modes, opts));
        } else if (rep.family == "quartic") {
            const auto ar = range_field(d, "a"), br = range_field(d, "b");
            const mpz_class m = d.contains("m") ? integer_field(d, "m") : mpz_class(3);
            const auto modes = criteria(d, {CriterionFamily::lens, CriterionFamily::sector_pq});
            if ((ar.second - ar.first + 1) * (br.second - br.first + 1) > kMaxInstances) throw bad("too many instances");
            for (mpz_class a = ar.first; a <= ar.second; ++a)
                for (mpz_class b = br.first; b <= br.second; ++b) {
                    const Polynomial g(std::vector<mpz_class>{b, 0, 0, -a, 1});
                    rep.rows.push_back(run_one("a=" + a.get_str() + " b=" + b.get_str(), g, m, modes, opts));
                }
        } else if (rep.family == "shifted_prime" || rep.family == "shifted_prime_power") {
            const Polynomial f = parse_polynomial(d.at("base").get<std::string>());
            const mpz_class m = integer_field(d, "m");
            const bool power = rep.family == "shifted_prime_power";
            const unsigned long k = power ? d.value("k", 2UL) : 1UL;
            if (k < 1 || k > 64) throw bad("k must lie in [1, 64]");
            const auto modes = criteria(d, power ? std::vector{CriterionFamily::prime_power}
                                                 : std::vector{CriterionFamily::lens, CriterionFamily::sector_pq});
            const mpz_class fm = evaluate(f, m);
            for (const mpz_class& p : sample(primes_in(range_field(d, "primes")), d)) {
                mpz_class pk;
                mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
                const Polynomial g = f + Polynomial::constant(pk - fm);
                rep.rows.push_back(run_one("p=" + p.get_str(), g, m, modes, opts));
            }
        } else {
            throw bad("unknown family " + rep.family);
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw bad(e.what());
    }
}

}  // namespace zf::cli
