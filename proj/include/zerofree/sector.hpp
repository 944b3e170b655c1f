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

#ifndef ZEROFREE_SECTOR_HPP
#define ZEROFREE_SECTOR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "zerofree/bounded.hpp"
#include "zerofree/poly.hpp"

namespace zf {

enum class HalfAngle { pi_over_n, pi_over_2n };

enum class SectorMethod {
    nonneg,              // non-negative coefficients, imaginary-part argument
    nonneg_real_part,    // non-negative coefficients, real-part argument (pi/2n)
    neg_sum,             // summed negative coefficients over a_n, endpoint radicals
    min_over_positives,  // minimum over positive coefficients above the last negative one
    summed_denominator,  // summed positive coefficients, clamped at 1
    sign_blocks,         // per sign-block vertices
    shifted,             // f(X + alpha) has non-negative coefficients
    parametrized,        // user weights lambda_i
};

std::string to_string(SectorMethod m);
std::optional<SectorMethod> sector_method_from_string(const std::string& s);

/// Open sector {v + rho e^(i phi) : rho > 0, |phi| < theta} free of roots of the
/// polynomial it was computed for, for every vertex x >= vertex.upper().
struct Sector {
    BoundedReal vertex;
    int n = 1;
    HalfAngle kind = HalfAngle::pi_over_n;
    SectorMethod method = SectorMethod::nonneg;
    std::optional<mpq_class> alpha;  // shift used by SectorMethod::shifted

    /// Denominator d of the half-angle pi/d.
    int angle_denominator() const { return kind == HalfAngle::pi_over_n ? n : 2 * n; }
    /// "pi/n" or "pi/2n".
    std::string angle_label() const { return kind == HalfAngle::pi_over_n ? "pi/n" : "pi/2n"; }
    /// Method name, including the shift for SectorMethod::shifted ("shifted:1").
    std::string method_label() const;
};

Sector sector_nonneg(const Polynomial& f, const Precision& prec = {});
Sector sector_nonneg_real_part(const Polynomial& f, const Precision& prec = {});
Sector sector_neg_sum(const Polynomial& f, const Precision& prec = {});
Sector sector_parametrized(const Polynomial& f, const std::vector<mpq_class>& lambdas, const Precision& prec = {});
Sector sector_min_over_positives(const Polynomial& f, const Precision& prec = {});
Sector sector_summed_denominator(const Polynomial& f, const Precision& prec = {});
Sector sector_sign_blocks(const Polynomial& f, const Precision& prec = {});
std::optional<Sector> sector_shifted(const Polynomial& f, const mpq_class& alpha);

/// Full maximum over every negative index in the summed-negative radical
/// (the unshortened form of sector_neg_sum's vertex).
BoundedReal neg_sum_vertex_all_indices(const Polynomial& f, const Precision& prec = {});

struct SectorCandidate {
    SectorMethod method;
    std::optional<mpq_class> alpha;
    std::optional<Sector> sector;
    std::string note;  // why a producer was not applicable
};

struct SectorReport {
    Sector best;
    std::vector<SectorCandidate> candidates;
};

/// Default shift candidates {0, 1}.
std::vector<mpq_class> default_shift_candidates();

/// Runs every producer and returns the smallest vertex.upper(); ties go to
/// the producer listed first.
SectorReport best_sector(const Polynomial& f, const std::vector<mpq_class>& alphas = default_shift_candidates(),
                         const Precision& prec = {});

}  // namespace zf

#endif
