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

#ifndef ZEROFREE_POLY_HPP
#define ZEROFREE_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zf {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored as a_0, a_1, ..., a_n. Trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const mpz_class& c);
    static Polynomial monomial(const mpz_class& c, int exponent);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of X^i; zero for i beyond the degree.
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    /// Canonical serialization "a0,a1,...,an" ("0" for the zero polynomial).
    std::string to_string() const;
    /// Human-readable form, highest degree first, e.g. "X^4 - 10*X^3 + 2162".
    std::string to_expression() const;

    /// Gcd of the coefficients, sign taken from the leading coefficient.
    mpz_class content() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const mpz_class& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

/// Polynomial over the rationals; used for shifted polynomials f(X + alpha).
class RationalPolynomial {
   public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coeffs);
    explicit RationalPolynomial(const Polynomial& p);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(int i) const;
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
    bool all_nonnegative() const;
    std::string to_string() const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

   private:
    std::vector<mpq_class> coeffs_;
};

/// Partial sums s_j = alpha^j a_n + alpha^(j-1) a_(n-1) + ... + a_(n-j), j = 0..n.
struct PartialSums {
    mpq_class alpha;
    std::vector<mpq_class> sums;
    bool all_nonneg = true;
};

/// Negative-coefficient indices j_1 < ... < j_l, the positive indices k > j_l,
/// and L_-(f) = |a_(j_1) + ... + a_(j_l)|.
struct SignIndexSets {
    std::vector<int> neg_indices;
    std::vector<int> pos_indices_above;
    mpz_class neg_sum_abs;
};

/// One maximal positive run followed (optionally) by the maximal negative run
/// beneath it. Indices follow the descending picture: P >= p > N >= n_low.
struct SignBlock {
    int P = 0;
    int p = 0;
    bool has_negative = false;
    int N = -1;
    int n_low = -1;
    mpz_class S_plus;
    mpz_class S_minus;
    std::vector<int> neg_indices;  // nonzero negative indices inside [n_low, N]
};

struct SignBlockPartition {
    std::vector<SignBlock> blocks;
    int sign_changes = 0;
};

/// Parses either a coefficient list "a0,a1,...,an" or an expression in X
/// using integers, + - * / ^ and parentheses. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);
/// Parses a strictly comma-separated coefficient list.
Polynomial parse_coefficients(std::string_view text);

mpz_class evaluate(const Polynomial& f, const mpz_class& m);
mpq_class evaluate(const RationalPolynomial& f, const mpq_class& x);
Polynomial derivative(const Polynomial& f);
/// X^n f(1/X). Throws DomainError when f(0) = 0 or deg f < 1.
Polynomial reciprocal(const Polynomial& f);
/// f(X + alpha), exact. Throws DomainError when alpha < 0.
RationalPolynomial shift(const Polynomial& f, const mpq_class& alpha);
RationalPolynomial shift(const RationalPolynomial& f, const mpq_class& alpha);
PartialSums partial_sums(const Polynomial& f, const mpq_class& alpha);
SignIndexSets sign_index_sets(const Polynomial& f);
SignBlockPartition sign_blocks(const Polynomial& f);
/// f(-X).
Polynomial negate_argument(const Polynomial& f);

/// Exact division of f by g over Z; nullopt when g does not divide f in Z[X].
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace zf

#endif
