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

#ifndef ZEROFREE_LENS_HPP
#define ZEROFREE_LENS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "zerofree/bounded.hpp"
#include "zerofree/poly.hpp"
#include "zerofree/sector.hpp"

namespace zf {

/// Root-free lens of f: the image under z -> 1/z of the reciprocal's sector
/// S_(v_tilde, pi/n). All geometry is evaluated at the exact parameter
/// v_tilde.upper(), whose lens is contained in the lens of the true vertex.
struct Lens {
    BoundedReal v_tilde;
    int n = 3;
    SectorMethod reciprocal_method = SectorMethod::neg_sum;

    const mpq_class& parameter() const { return v_tilde.upper(); }
    /// 1/(2 v_tilde): real part of both disk centres.
    mpq_class center_x() const;
    /// cot(pi/n)/(2 v_tilde): centres sit at (center_x, +-center_y).
    BoundedReal center_y(const Precision& prec) const;
    /// 1/(2 v_tilde sin(pi/n)).
    BoundedReal radius(const Precision& prec) const;
};

struct LensAnalysis {
    Polynomial reciprocal;  // sign-normalized so its leading coefficient is positive
    SectorReport reciprocal_report;
    std::optional<Lens> lens;
    std::string note;
};

/// Requires deg f >= 3 and f(0) != 0. When the reciprocal's best vertex is 0
/// no bounded lens exists and `lens` is empty (the note says why).
LensAnalysis lens_of(const Polynomial& f, const Precision& prec = {},
                     const std::vector<mpq_class>& alphas = default_shift_candidates());

enum class Containment { inside, outside, undecided };
std::string to_string(Containment c);

Containment lens_contains(const Lens& lens, const mpq_class& x, const mpq_class& y, const Precision& prec = {});

/// Half-angle alpha of a vertex-0 sector covered by S_(v,pi/n) union L_(v_tilde,pi/n).
/// Throws DomainError unless v * v_tilde < 1 holds for the upper bounds.
BoundedReal union_angle(const BoundedReal& v, const BoundedReal& v_tilde, int n, const Precision& prec = {});

enum class IntervalSource { disk_in_lens, cot, effective, combined };
std::string to_string(IntervalSource s);

/// Open interval of admissible integers; endpoints are enclosures and
/// membership uses lo.upper() < m < hi.lower().
struct AdmissibleInterval {
    BoundedReal lo;
    BoundedReal hi;
    IntervalSource source = IntervalSource::cot;
    bool empty = false;

    bool contains(const mpz_class& m) const;
    /// this is contained in other, judged on the rounded membership endpoints.
    bool within(const AdmissibleInterval& other) const;
};

AdmissibleInterval interval_disk_in_lens(const Lens& lens, const Precision& prec = {});
AdmissibleInterval interval_cot(const Lens& lens, const Precision& prec = {});
AdmissibleInterval interval_effective(const Lens& lens, const Precision& prec = {});

enum class RegionShape {
    union_of_parts,  // interval and ray kept separately
    ray_only,        // v <= cot(pi/n): the interval lies inside the ray
    from_cot,        // the ray starts inside the interval: m > cot(pi/(2n))
};
std::string to_string(RegionShape s);

/// Union of the cot interval and the ray (v + 1/sin(pi/n), oo).
struct RegionDescriptor {
    std::optional<AdmissibleInterval> interval;
    BoundedReal ray_lo;
    RegionShape shape = RegionShape::union_of_parts;
    std::vector<std::string> notes;

    bool in_interval(const mpz_class& m) const { return interval && interval->contains(m); }
    bool in_ray(const mpz_class& m) const { return m > ray_lo.upper(); }
    bool contains(const mpz_class& m) const { return in_interval(m) || in_ray(m); }
};

RegionDescriptor combined_region(const Sector& sector, const std::optional<Lens>& lens, const Precision& prec = {});

}  // namespace zf

#endif
