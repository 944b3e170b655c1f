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

#ifndef ZEROFREE_BOUNDED_HPP
#define ZEROFREE_BOUNDED_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zf {

/// Working precision in decimal digits. Radicals and trigonometric values are
/// enclosed with an absolute width of about 2^-bits().
struct Precision {
    int digits = 16;

    int bits() const;
    /// Number of decimal places used when bounds are printed.
    int decimal_places() const { return digits + 4; }
    Precision doubled() const { return Precision{2 * digits}; }

    /// Default precision, overridable through the ZEROFREE_DIGITS variable.
    static Precision from_env();

    friend bool operator==(const Precision&, const Precision&) = default;
};

/// A real number known only through exact rational bounds lower <= x <= upper.
class BoundedReal {
   public:
    BoundedReal() = default;
    BoundedReal(const mpq_class& exact);  // NOLINT: exact values convert implicitly
    BoundedReal(long exact);              // NOLINT
    BoundedReal(mpq_class lower, mpq_class upper);

    const mpq_class& lower() const noexcept { return lower_; }
    const mpq_class& upper() const noexcept { return upper_; }
    mpq_class width() const { return upper_ - lower_; }
    bool is_exact() const { return lower_ == upper_; }
    bool contains(const mpq_class& x) const { return lower_ <= x && x <= upper_; }
    double approx() const;

    /// width <= 10^-12 * max(1, |upper|).
    bool within_width_bound() const;

    BoundedReal operator-() const { return {-upper_, -lower_}; }
    friend BoundedReal operator+(const BoundedReal& a, const BoundedReal& b);
    friend BoundedReal operator-(const BoundedReal& a, const BoundedReal& b);
    friend BoundedReal operator*(const BoundedReal& a, const BoundedReal& b);
    /// Throws DomainError when the divisor interval contains zero.
    friend BoundedReal operator/(const BoundedReal& a, const BoundedReal& b);

    friend bool operator==(const BoundedReal& a, const BoundedReal& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

   private:
    mpq_class lower_ = 0;
    mpq_class upper_ = 0;
};

BoundedReal max(const BoundedReal& a, const BoundedReal& b);
BoundedReal min(const BoundedReal& a, const BoundedReal& b);
/// Square of an interval, tight when it straddles zero.
BoundedReal square(const BoundedReal& a);

/// Two-sided bounds on x^(1/k) for rational x >= 0; exact when x is a perfect
/// k-th power of a rational.
BoundedReal nth_root_bounds(const mpq_class& x, unsigned long k, const Precision& prec);
/// Monotone extension to intervals; requires x.lower() >= 0.
BoundedReal nth_root_bounds(const BoundedReal& x, unsigned long k, const Precision& prec);
inline BoundedReal sqrt_bounds(const BoundedReal& x, const Precision& prec) { return nth_root_bounds(x, 2, prec); }

enum class TrigKind {
    sin_pi_over_n,   // sin(pi/n), n >= 1
    tan_pi_over_2n,  // tan(pi/(2n)), n >= 2
    cot_pi_over_2n,  // cot(pi/(2n)), n >= 1
    cot_pi_over_n,   // cot(pi/n), n >= 2
};

BoundedReal trig_bounds(TrigKind kind, int n, const Precision& prec);
BoundedReal pi_bounds(const Precision& prec);
/// arctan over an interval argument.
BoundedReal arctan_bounds(const BoundedReal& t, const Precision& prec);

/// Fixed-point decimal renderings rounded toward -inf / +inf.
std::string decimal_down(const mpq_class& x, int places);
std::string decimal_up(const mpq_class& x, int places);
/// Exact value of a decimal string such as "-12.0625" or an integer.
mpq_class parse_decimal(std::string_view text);

}  // namespace zf

#endif
