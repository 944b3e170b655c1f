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

#include "zerofree/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "zerofree/errors.hpp"

namespace zf {

namespace {

using cld = std::complex<long double>;

struct HornerResult {
    cld value;
    cld derivative;
    long double magnitude;  // sum |c_i| |z|^i, for the rounding error bound
};

HornerResult horner(const std::vector<long double>& c, cld z) {
    HornerResult h{0, 0, 0};
    const long double az = std::abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        h.derivative = h.derivative * z + h.value;
        h.value = h.value * z + c[i];
        h.magnitude = h.magnitude * az + std::fabs(c[i]);
    }
    return h;
}

}  // namespace

RootSet roots_numeric(const Polynomial& f, double tol, int max_sweeps) {
    if (f.degree() < 1) throw DomainError("roots_numeric requires degree >= 1");
    RootSet out;
    int zeros = 0;
    while (f.coeff(zeros) == 0) ++zeros;
    for (int i = 0; i < zeros; ++i) out.roots.emplace_back(0.0, 0.0);
    const int d = f.degree() - zeros;
    if (d == 0) {
        out.converged = true;
        return out;
    }
    std::vector<long double> c(static_cast<std::size_t>(d) + 1);
    {
        mpfr_t t;
        mpfr_init2(t, std::numeric_limits<long double>::digits);
        for (int i = 0; i <= d; ++i) {
            mpq_class q(f.coeff(i + zeros), f.leading());
            q.canonicalize();
            mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
            c[static_cast<std::size_t>(i)] = mpfr_get_ld(t, MPFR_RNDN);
        }
        mpfr_clear(t);
    }
    c.back() = 1.0L;

    long double radius = 0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::fabs(c[static_cast<std::size_t>(i)]));
    radius += 1;
    std::mt19937 rng(20240917u);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    std::vector<cld> z(static_cast<std::size_t>(d));
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (int k = 0; k < d; ++k) {
        const long double phi = two_pi * (k + 0.5L + jitter(rng)) / d + 0.4L / d;
        z[static_cast<std::size_t>(k)] = std::polar(radius, phi);
    }

    for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
        long double worst = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            const HornerResult h = horner(c, z[k]);
            if (h.value == cld(0)) continue;
            const cld w = h.value / h.derivative;
            cld s = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            const cld step = w / (1.0L - w * s);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < tol) {
            out.converged = true;
            break;
        }
    }
    out.sweeps = std::min(out.sweeps, max_sweeps);

    // Weierstrass corrections W_k: every root lies in some disk |z - z_k| <= d |W_k|.
    const long double eps = std::numeric_limits<long double>::epsilon();
    long double worst_w = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        const HornerResult h = horner(c, z[k]);
        long double prod = 1;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != k) prod *= std::abs(z[k] - z[j]);
        const long double num = std::abs(h.value) + 4 * (d + 1) * eps * h.magnitude;
        worst_w = std::max(worst_w, prod > 0 ? num / prod : std::numeric_limits<long double>::infinity());
    }
    long double largest = 0;
    for (const cld& r : z) largest = std::max(largest, std::abs(r));
    out.residual_bound = static_cast<double>(d * worst_w + 2 * largest * std::numeric_limits<double>::epsilon());
    if (!std::isfinite(out.residual_bound)) out.converged = false;
    for (const cld& r : z) out.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    return out;
}

bool in_sector(std::complex<double> z, const Sector& sector, double margin) {
    const double v = mpq_class(sector.vertex.upper()).get_d();
    const double theta = std::numbers::pi / sector.angle_denominator();
    if (!(z.real() > v + margin)) return false;
    return std::fabs(std::arg(z - v)) < theta - margin;
}

bool in_lens(std::complex<double> z, const Lens& lens, double margin) {
    const double cx = lens.center_x().get_d();
    const double angle = std::numbers::pi / lens.n;
    const double cy = cx / std::tan(angle);
    const double r = cx / std::sin(angle) - margin;
    if (r <= 0) return false;
    return std::abs(z - std::complex<double>(cx, cy)) < r && std::abs(z - std::complex<double>(cx, -cy)) < r;
}

std::string to_string(IrreducibilityVerdict v) {
    switch (v) {
        case IrreducibilityVerdict::irreducible:
            return "irreducible";
        case IrreducibilityVerdict::reducible:
            return "reducible";
        case IrreducibilityVerdict::out_of_reach:
            return "out_of_reach";
    }
    return "out_of_reach";
}

namespace {

struct TimedOut {};

class Kronecker {
public:
    Kronecker(const Polynomial& f, std::chrono::milliseconds budget)
        : f_(f), deadline_(std::chrono::steady_clock::now() + budget) {}

    IrreducibilityResult run() {
        IrreducibilityResult out;
        const int n = f_.degree();
        if (n == 1) {
            out.verdict = IrreducibilityVerdict::irreducible;
            return out;
        }
        // Points with small divisor counts keep the search tree narrow.
        std::vector<std::pair<std::size_t, long>> ranked;
        for (long x = 0; x <= 4L * n + 4; x = x > 0 ? -x : 1 - x) {
            const mpz_class val = evaluate(f_, mpz_class(x));
            if (val == 0) {
                out.verdict = IrreducibilityVerdict::reducible;
                out.factor = Polynomial(std::vector<mpz_class>{mpz_class(-x), mpz_class(1)});
                return out;
            }
            auto divs = positive_divisors(abs(val));
            if (!divs) continue;
            ranked.emplace_back(divs->size(), x);
            divisors_[x] = std::move(*divs);
            if (x < -4L * n - 4) break;
        }
        std::sort(ranked.begin(), ranked.end());
        const int max_d = n / 2;
        if (static_cast<int>(ranked.size()) < max_d + 1) return out;
        for (int i = 0; i <= max_d; ++i) points_.push_back(ranked[static_cast<std::size_t>(i)].second);
        try {
            for (int d = 1; d <= max_d; ++d) {
                target_degree_ = d;
                table_.assign(static_cast<std::size_t>(d) + 1, {});
                if (auto g = search(0)) {
                    out.verdict = IrreducibilityVerdict::reducible;
                    out.factor = std::move(g);
                    return out;
                }
            }
        } catch (const TimedOut&) {
            return out;
        }
        out.verdict = IrreducibilityVerdict::irreducible;
        return out;
    }

private:
    // Divisors by trial division; empty when |v| is too large to factor cheaply.
    static std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& v) {
        if (mpz_sizeinbase(v.get_mpz_t(), 2) > 80) return std::nullopt;
        std::vector<std::pair<mpz_class, unsigned long>> fac;
        mpz_class n = v;
        for (unsigned long p = 2; mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
            if (p > 20000000UL) return std::nullopt;
            unsigned long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            if (e > 0) fac.emplace_back(mpz_class(p), e);
        }
        if (n > 1) fac.emplace_back(n, 1);
        std::vector<mpz_class> divs{1};
        for (const auto& [p, e] : fac) {
            const std::size_t base = divs.size();
            mpz_class pk = 1;
            for (unsigned long i = 1; i <= e; ++i) {
                pk *= p;
                for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
            }
        }
        return divs;
    }

    void tick() {
        if ((nodes_++ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) throw TimedOut{};
    }

    // table_[j] holds the divided differences g[x_i..x_j] for i <= j.
    std::optional<Polynomial> search(int j) {
        tick();
        if (j > target_degree_) return candidate();
        const long xj = points_[static_cast<std::size_t>(j)];
        for (const mpz_class& dv : divisors_.at(xj)) {
            for (int sign : {1, -1}) {
                if (j == 0 && sign < 0) continue;
                std::vector<mpz_class> row(static_cast<std::size_t>(j) + 1);
                row[static_cast<std::size_t>(j)] = sign * dv;
                bool integral = true;
                for (int i = j - 1; i >= 0 && integral; --i) {
                    const mpz_class num =
                        row[static_cast<std::size_t>(i) + 1] - table_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i)];
                    const mpz_class den = xj - points_[static_cast<std::size_t>(i)];
                    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
                        integral = false;
                        break;
                    }
                    row[static_cast<std::size_t>(i)] = num / den;
                }
                if (!integral) continue;
                if (j == target_degree_) {
                    const mpz_class& top = row[0];
                    if (top == 0 || !mpz_divisible_p(f_.leading().get_mpz_t(), top.get_mpz_t())) continue;
                }
                table_[static_cast<std::size_t>(j)] = std::move(row);
                if (auto g = search(j + 1)) return g;
            }
        }
        return std::nullopt;
    }

    std::optional<Polynomial> candidate() {
        // Newton form g = sum_j c_j prod_{i<j} (X - x_i), with c_j = g[x_0..x_j].
        Polynomial g;
        Polynomial basis{1};
        for (int j = 0; j <= target_degree_; ++j) {
            g = g + table_[static_cast<std::size_t>(j)][0] * basis;
            basis = basis * Polynomial(std::vector<mpz_class>{mpz_class(-points_[static_cast<std::size_t>(j)]), mpz_class(1)});
        }
        if (g.degree() != target_degree_) return std::nullopt;
        if (divide_exact(f_, g)) return g;
        return std::nullopt;
    }

    const Polynomial& f_;
    std::chrono::steady_clock::time_point deadline_;
    std::map<long, std::vector<mpz_class>> divisors_;
    std::vector<long> points_;
    std::vector<std::vector<mpz_class>> table_;
    int target_degree_ = 1;
    unsigned long nodes_ = 0;
};

}  // namespace

IrreducibilityResult irreducible_bruteforce(const Polynomial& f, std::chrono::milliseconds budget) {
    if (f.degree() < 1) throw DomainError("irreducible_bruteforce requires degree >= 1");
    if (f.content() != 1) throw DomainError("irreducible_bruteforce requires a primitive polynomial");
    return Kronecker(f, budget).run();
}

}  // namespace zf
