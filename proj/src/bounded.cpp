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

#include "zerofree/bounded.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "zerofree/errors.hpp"

namespace zf {

namespace {

// RAII holder for an mpfr_t.
class Mpfr {
   public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return v_; }

    mpq_class to_q() {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

   private:
    mpfr_t v_;
};

mpfr_prec_t mpfr_bits(const Precision& prec) { return static_cast<mpfr_prec_t>(prec.bits() + 32); }

// pi/d rounded in direction rnd.
void pi_over(Mpfr& out, unsigned long d, mpfr_rnd_t rnd) {
    mpfr_const_pi(out.get(), rnd);
    mpfr_div_ui(out.get(), out.get(), d, rnd);
}

// Bounds on g(pi/d) for g increasing on [0, pi/d_max].
template <class Fn>
BoundedReal increasing_at_pi_over(unsigned long d, const Precision& prec, Fn fn) {
    Mpfr lo(mpfr_bits(prec)), hi(mpfr_bits(prec));
    pi_over(lo, d, MPFR_RNDD);
    pi_over(hi, d, MPFR_RNDU);
    fn(lo.get(), lo.get(), MPFR_RNDD);
    fn(hi.get(), hi.get(), MPFR_RNDU);
    return {lo.to_q(), hi.to_q()};
}

BoundedReal sin_pi_over(int n, const Precision& prec) {
    if (n < 1) throw DomainError("sin(pi/n) requires n >= 1");
    if (n == 1) return mpq_class(0);
    if (n == 2) return mpq_class(1);
    if (n == 6) return mpq_class(1, 2);
    return increasing_at_pi_over(static_cast<unsigned long>(n), prec, mpfr_sin);
}

BoundedReal tan_pi_over(unsigned long d, const Precision& prec) {
    if (d < 3) throw DomainError("tan(pi/d) requires d >= 3");
    if (d == 4) return mpq_class(1);
    return increasing_at_pi_over(d, prec, mpfr_tan);
}

BoundedReal reciprocal_of_positive(const BoundedReal& x) {
    return {mpq_class(1) / x.upper(), mpq_class(1) / x.lower()};
}

mpz_class pow10(int places) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(places));
    return p;
}

std::string render_scaled(const mpz_class& scaled, int places) {
    std::string digits = mpz_class(abs(scaled)).get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
    }
    return (scaled < 0 ? "-" : "") + digits;
}

}  // namespace

// ---------------------------------------------------------------------------

int Precision::bits() const { return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 8; }

Precision Precision::from_env() {
    if (const char* env = std::getenv("ZEROFREE_DIGITS")) {
        char* end = nullptr;
        long d = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && d >= 8 && d <= 10000) return Precision{static_cast<int>(d)};
    }
    return Precision{};
}

BoundedReal::BoundedReal(const mpq_class& exact) : lower_(exact), upper_(exact) {}

BoundedReal::BoundedReal(long exact) : lower_(exact), upper_(exact) {}

BoundedReal::BoundedReal(mpq_class lower, mpq_class upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    lower_.canonicalize();
    upper_.canonicalize();
    if (lower_ > upper_) throw DomainError("bounded real with lower > upper");
}

double BoundedReal::approx() const {
    mpq_class mid = (lower_ + upper_) / 2;
    return mid.get_d();
}

bool BoundedReal::within_width_bound() const {
    mpq_class scale = std::max(mpq_class(1), mpq_class(abs(upper_)));
    return width() * mpq_class(1000000000000) <= scale;
}

BoundedReal operator+(const BoundedReal& a, const BoundedReal& b) {
    return {a.lower_ + b.lower_, a.upper_ + b.upper_};
}

BoundedReal operator-(const BoundedReal& a, const BoundedReal& b) {
    return {a.lower_ - b.upper_, a.upper_ - b.lower_};
}

BoundedReal operator*(const BoundedReal& a, const BoundedReal& b) {
    if (a.lower_ >= 0 && b.lower_ >= 0) return {a.lower_ * b.lower_, a.upper_ * b.upper_};
    mpq_class p[4] = {a.lower_ * b.lower_, a.lower_ * b.upper_, a.upper_ * b.lower_, a.upper_ * b.upper_};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

BoundedReal operator/(const BoundedReal& a, const BoundedReal& b) {
    if (b.lower_ <= 0 && b.upper_ >= 0) throw DomainError("division by an interval containing zero");
    return a * BoundedReal(mpq_class(1) / b.upper_, mpq_class(1) / b.lower_);
}

BoundedReal max(const BoundedReal& a, const BoundedReal& b) {
    return {std::max(a.lower(), b.lower()), std::max(a.upper(), b.upper())};
}

BoundedReal min(const BoundedReal& a, const BoundedReal& b) {
    return {std::min(a.lower(), b.lower()), std::min(a.upper(), b.upper())};
}

BoundedReal square(const BoundedReal& a) {
    if (a.lower() >= 0) return a * a;
    if (a.upper() <= 0) return (-a) * (-a);
    mpq_class m = std::max(mpq_class(-a.lower()), a.upper());
    return {mpq_class(0), m * m};
}

// ---------------------------------------------------------------------------
// Radicals

BoundedReal nth_root_bounds(const mpq_class& x, unsigned long k, const Precision& prec) {
    if (k == 0) throw DomainError("root index must be positive");
    if (x < 0) throw DomainError("root of a negative number");
    if (x == 0 || k == 1) return x;

    mpz_class num_root, den_root;
    if (mpz_root(num_root.get_mpz_t(), x.get_num_mpz_t(), k) != 0 &&
        mpz_root(den_root.get_mpz_t(), x.get_den_mpz_t(), k) != 0)
        return mpq_class(num_root, den_root);

    // floor((x * 2^(k*B))^(1/k)) / 2^B and its successor enclose x^(1/k).
    const unsigned long bits = static_cast<unsigned long>(prec.bits());
    mpz_class scaled = x.get_num();
    scaled <<= k * bits;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    mpz_class r;
    mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k);
    mpz_class scale = 1;
    scale <<= bits;
    return {mpq_class(r, scale), mpq_class(r + 1, scale)};
}

BoundedReal nth_root_bounds(const BoundedReal& x, unsigned long k, const Precision& prec) {
    if (x.lower() < 0) throw DomainError("root of a possibly negative number");
    if (x.is_exact()) return nth_root_bounds(x.lower(), k, prec);
    return {nth_root_bounds(x.lower(), k, prec).lower(), nth_root_bounds(x.upper(), k, prec).upper()};
}

// ---------------------------------------------------------------------------
// Trigonometric values

BoundedReal trig_bounds(TrigKind kind, int n, const Precision& prec) {
    switch (kind) {
        case TrigKind::sin_pi_over_n:
            return sin_pi_over(n, prec);
        case TrigKind::tan_pi_over_2n:
            if (n < 2) throw DomainError("tan(pi/(2n)) requires n >= 2");
            return tan_pi_over(2UL * static_cast<unsigned long>(n), prec);
        case TrigKind::cot_pi_over_2n:
            if (n < 1) throw DomainError("cot(pi/(2n)) requires n >= 1");
            if (n == 1) return mpq_class(0);
            return reciprocal_of_positive(tan_pi_over(2UL * static_cast<unsigned long>(n), prec));
        case TrigKind::cot_pi_over_n:
            if (n < 2) throw DomainError("cot(pi/n) requires n >= 2");
            if (n == 2) return mpq_class(0);
            return reciprocal_of_positive(tan_pi_over(static_cast<unsigned long>(n), prec));
    }
    throw DomainError("unknown trigonometric kind");
}

BoundedReal pi_bounds(const Precision& prec) {
    Mpfr lo(mpfr_bits(prec)), hi(mpfr_bits(prec));
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return {lo.to_q(), hi.to_q()};
}

BoundedReal arctan_bounds(const BoundedReal& t, const Precision& prec) {
    if (t.is_exact() && t.lower() == 0) return mpq_class(0);
    Mpfr lo(mpfr_bits(prec)), hi(mpfr_bits(prec));
    mpfr_set_q(lo.get(), t.lower().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), t.upper().get_mpq_t(), MPFR_RNDU);
    mpfr_atan(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_atan(hi.get(), hi.get(), MPFR_RNDU);
    return {lo.to_q(), hi.to_q()};
}

// ---------------------------------------------------------------------------
// Decimal rendering

std::string decimal_down(const mpq_class& x, int places) {
    mpz_class scaled = x.get_num() * pow10(places);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    return render_scaled(scaled, places);
}

std::string decimal_up(const mpq_class& x, int places) {
    mpz_class scaled = x.get_num() * pow10(places);
    mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    return render_scaled(scaled, places);
}

mpq_class parse_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    std::string digits;
    int places = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_point) ++places;
        } else {
            throw ParseError("malformed decimal", pos);
        }
    }
    if (digits.empty()) throw ParseError("malformed decimal", pos);
    mpq_class q(mpz_class(digits, 10), pow10(places));
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

}  // namespace zf
