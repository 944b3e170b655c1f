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

#include "zerofree/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "zerofree/errors.hpp"

namespace zf {

namespace {

const mpz_class kZeroZ = 0;
const mpq_class kZeroQ = 0;

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::constant(const mpz_class& c) { return Polynomial(std::vector<mpz_class>{c}); }

Polynomial Polynomial::monomial(const mpz_class& c, int exponent) {
    std::vector<mpz_class> v(static_cast<std::size_t>(exponent) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return kZeroZ;
    return coeffs_[static_cast<std::size_t>(i)];
}

const mpz_class& Polynomial::leading() const { return is_zero() ? kZeroZ : coeffs_.back(); }

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out;
}

std::string Polynomial::to_expression() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'X';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (!is_zero() && leading() < 0) g = -g;
    return g;
}

Polynomial Polynomial::operator-() const {
    std::vector<mpz_class> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const mpz_class& c, const Polynomial& a) {
    std::vector<mpz_class> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial::RationalPolynomial(const Polynomial& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

const mpq_class& RationalPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return kZeroQ;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool RationalPolynomial::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c >= 0; });
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExpressionParser {
   public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("empty input", pos_);
        Polynomial p = parse_sum();
        skip_space();
        if (pos_ < text_.size()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return p;
    }

   private:
    static constexpr int kMaxExponent = 100000;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial parse_sum() {
        Polynomial acc = parse_product();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + parse_product();
            } else if (c == '-') {
                ++pos_;
                acc = acc - parse_product();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_product() {
        Polynomial acc = parse_unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_unary();
            } else if (c == '/') {
                std::size_t at = pos_++;
                Polynomial d = parse_unary();
                acc = divide_by_constant(acc, d, at);
            } else if (c == 'X' || c == 'x' || c == '(') {
                // implicit multiplication: 3X, 2(X+1)
                acc = acc * parse_unary();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_unary();
        }
        if (c == '+') {
            ++pos_;
            return parse_unary();
        }
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_primary();
        if (peek() != '^') return base;
        std::size_t at = pos_++;
        Polynomial e = parse_unary();
        if (e.degree() > 0) throw ParseError("exponent must be an integer constant", at);
        const mpz_class ev = e.is_zero() ? mpz_class(0) : e.coeff(0);
        if (ev < 0) throw ParseError("negative exponent makes the input a non-polynomial", at);
        if (ev > kMaxExponent) throw ParseError("exponent too large", at);
        return power(base, static_cast<int>(ev.get_si()));
    }

    Polynomial parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_sum();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'X' || c == 'x') {
            ++pos_;
            return Polynomial::monomial(1, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial::constant(mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    static Polynomial power(const Polynomial& base, int e) {
        Polynomial result = Polynomial::constant(1);
        Polynomial b = base;
        while (e > 0) {
            if (e & 1) result = result * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return result;
    }

    static Polynomial divide_by_constant(const Polynomial& num, const Polynomial& den, std::size_t at) {
        if (den.degree() != 0) throw ParseError("division is only allowed by a nonzero integer constant", at);
        const mpz_class& d = den.coeff(0);
        std::vector<mpz_class> out(num.coeffs());
        for (auto& c : out) {
            if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
                throw ParseError("division does not yield integer coefficients", at);
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        }
        return Polynomial(std::move(out));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_coefficients(std::string_view text) {
    std::vector<mpz_class> coeffs;
    std::size_t pos = 0;
    for (;;) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer coefficient", pos);
        std::string token(text.substr(start, pos - start));
        if (token.front() == '+') token.erase(0, 1);
        coeffs.emplace_back(token);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        ++pos;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial parse_polynomial(std::string_view text) {
    if (text.find(',') != std::string_view::npos) return parse_coefficients(text);
    return ExpressionParser(text).parse();
}

// ---------------------------------------------------------------------------
// Evaluation and transforms

mpz_class evaluate(const Polynomial& f, const mpz_class& m) {
    mpz_class acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        acc *= m;
        acc += f.coeff(i);
    }
    return acc;
}

mpq_class evaluate(const RationalPolynomial& f, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i);
    return acc;
}

Polynomial derivative(const Polynomial& f) {
    if (f.degree() < 1) return {};
    std::vector<mpz_class> v(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = f.coeff(i) * i;
    return Polynomial(std::move(v));
}

Polynomial reciprocal(const Polynomial& f) {
    if (f.degree() < 1) throw DomainError("reciprocal requires degree >= 1");
    if (f.coeff(0) == 0) throw DomainError("reciprocal requires a nonzero constant term");
    std::vector<mpz_class> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Polynomial(std::move(v));
}

RationalPolynomial shift(const RationalPolynomial& f, const mpq_class& alpha) {
    if (alpha < 0) throw DomainError("shift requires alpha >= 0");
    // Taylor shift by repeated synthetic division.
    std::vector<mpq_class> c(f.coeffs());
    const int n = f.degree();
    for (int i = 0; i < n; ++i) {
        for (int j = n - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += alpha * c[static_cast<std::size_t>(j + 1)];
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial shift(const Polynomial& f, const mpq_class& alpha) { return shift(RationalPolynomial(f), alpha); }

PartialSums partial_sums(const Polynomial& f, const mpq_class& alpha) {
    if (f.degree() < 1) throw DomainError("partial sums require degree >= 1");
    if (alpha < 0) throw DomainError("partial sums require alpha >= 0");
    PartialSums out;
    out.alpha = alpha;
    const int n = f.degree();
    out.sums.reserve(static_cast<std::size_t>(n) + 1);
    mpq_class s = f.coeff(n);
    out.sums.push_back(s);
    for (int j = 1; j <= n; ++j) {
        s = alpha * s + f.coeff(n - j);
        out.sums.push_back(s);
    }
    out.all_nonneg = std::all_of(out.sums.begin(), out.sums.end(), [](const mpq_class& x) { return x >= 0; });
    return out;
}

SignIndexSets sign_index_sets(const Polynomial& f) {
    if (f.is_zero() || f.leading() <= 0) throw DomainError("sign analysis requires a positive leading coefficient");
    SignIndexSets out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) < 0) {
            out.neg_indices.push_back(i);
            out.neg_sum_abs -= f.coeff(i);
        }
    }
    const int floor_index = out.neg_indices.empty() ? -1 : out.neg_indices.back();
    for (int k = floor_index + 1; k <= f.degree(); ++k)
        if (f.coeff(k) > 0) out.pos_indices_above.push_back(k);
    return out;
}

SignBlockPartition sign_blocks(const Polynomial& f) {
    if (f.is_zero() || f.leading() <= 0) throw DomainError("sign analysis requires a positive leading coefficient");
    SignBlockPartition out;
    int prev_sign = 0;
    for (int i = f.degree(); i >= 0; --i) {
        const int sign = sgn(f.coeff(i));
        if (sign == 0) continue;
        if (prev_sign != 0 && sign != prev_sign) ++out.sign_changes;
        if (sign > 0) {
            if (prev_sign != 1) {
                SignBlock b;
                b.P = i;
                out.blocks.push_back(std::move(b));
            }
            SignBlock& b = out.blocks.back();
            b.p = i;
            b.S_plus += f.coeff(i);
        } else {
            SignBlock& b = out.blocks.back();
            if (!b.has_negative) {
                b.has_negative = true;
                b.N = i;
            }
            b.n_low = i;
            b.S_minus -= f.coeff(i);
            b.neg_indices.push_back(i);
        }
        prev_sign = sign;
    }
    return out;
}

Polynomial negate_argument(const Polynomial& f) {
    std::vector<mpz_class> v(f.coeffs());
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Polynomial(std::move(v));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    if (f.is_zero()) return Polynomial{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<mpz_class> rem(f.coeffs());
    std::vector<mpz_class> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
    const mpz_class& lead = g.leading();
    for (int i = f.degree() - g.degree(); i >= 0; --i) {
        mpz_class& top = rem[static_cast<std::size_t>(i + g.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quot[static_cast<std::size_t>(i)] = q;
        for (int j = 0; j <= g.degree(); ++j) rem[static_cast<std::size_t>(i + j)] -= q * g.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return Polynomial(std::move(quot));
}

}  // namespace zf
