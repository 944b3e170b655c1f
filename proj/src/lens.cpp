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

#include "zerofree/lens.hpp"

#include <utility>

#include "zerofree/errors.hpp"

namespace zf {

namespace {

AdmissibleInterval make_interval(BoundedReal lo, BoundedReal hi, IntervalSource source) {
    AdmissibleInterval out;
    out.empty = lo.upper() >= hi.lower();
    out.lo = std::move(lo);
    out.hi = std::move(hi);
    out.source = source;
    return out;
}

// Strict v_tilde < (1/2) tan(pi/(2n)), decided on conservative bounds.
void require_disk_precondition(const Lens& lens, const Precision& prec) {
    const BoundedReal t = trig_bounds(TrigKind::tan_pi_over_2n, lens.n, prec);
    if (!(lens.parameter() < t.lower() / 2))
        throw DomainError("lens criterion requires v_tilde < tan(pi/(2n))/2");
}

}  // namespace

mpq_class Lens::center_x() const {
    mpq_class c = mpq_class(1) / (2 * parameter());
    c.canonicalize();
    return c;
}

BoundedReal Lens::center_y(const Precision& prec) const {
    return trig_bounds(TrigKind::cot_pi_over_n, n, prec) * BoundedReal(center_x());
}

BoundedReal Lens::radius(const Precision& prec) const {
    return BoundedReal(center_x()) / trig_bounds(TrigKind::sin_pi_over_n, n, prec);
}

LensAnalysis lens_of(const Polynomial& f, const Precision& prec, const std::vector<mpq_class>& alphas) {
    if (f.degree() < 3) throw DomainError("lens_of requires degree >= 3");
    if (f.coeff(0) == 0) throw DomainError("lens_of requires a nonzero constant term");
    LensAnalysis out;
    out.reciprocal = reciprocal(f);
    if (out.reciprocal.leading() < 0) out.reciprocal = -out.reciprocal;
    out.reciprocal_report = best_sector(out.reciprocal, alphas, prec);
    const Sector& s = out.reciprocal_report.best;
    if (s.vertex.upper() == 0) {
        out.note =
            "reciprocal vertex is 0: no bounded lens; the reciprocal's sector S_(0,pi/n) inverts to itself";
        return out;
    }
    out.lens = Lens{s.vertex, f.degree(), s.method};
    return out;
}

std::string to_string(Containment c) {
    switch (c) {
        case Containment::inside:
            return "inside";
        case Containment::outside:
            return "outside";
        case Containment::undecided:
            return "undecided";
    }
    return "undecided";
}

Containment lens_contains(const Lens& lens, const mpq_class& x, const mpq_class& y, const Precision& prec) {
    // z lies in the lens iff 1/z lies in the sector, i.e.
    // x - v(x^2 + y^2) - |y| cot(pi/n) > 0.
    const mpq_class& v = lens.parameter();
    const mpq_class abs_y = abs(y);
    const BoundedReal cot = trig_bounds(TrigKind::cot_pi_over_n, lens.n, prec);
    const BoundedReal d = BoundedReal(mpq_class(x - v * (x * x + y * y))) - BoundedReal(abs_y) * cot;
    if (d.is_exact()) return d.lower() > 0 ? Containment::inside : Containment::outside;
    if (d.lower() > 0) return Containment::inside;
    if (d.upper() <= 0) return Containment::outside;
    return Containment::undecided;
}

BoundedReal union_angle(const BoundedReal& v, const BoundedReal& v_tilde, int n, const Precision& prec) {
    if (n < 2) throw DomainError("union_angle requires n >= 2");
    const BoundedReal pi_n = pi_bounds(prec) / BoundedReal(n);
    if (v.upper() == 0) return pi_n;
    const mpq_class prod_hi = v.upper() * v_tilde.upper();
    if (v_tilde.lower() <= 0 || !(prod_hi < 1)) throw DomainError("union_angle requires 0 < v * v_tilde < 1");

    const BoundedReal s = trig_bounds(TrigKind::sin_pi_over_n, n, prec);
    const mpq_class prod_lo = v.lower() * v_tilde.lower();
    // t = sin / sqrt(1/(v v~) - sin^2), increasing in sin and in v v~.
    const mpq_class x_lo = mpq_class(1) / prod_hi;
    const BoundedReal t_hi = BoundedReal(s.upper()) / sqrt_bounds(BoundedReal(x_lo - s.upper() * s.upper()), prec);
    mpq_class t_lower = 0;
    if (prod_lo > 0) {
        const mpq_class x_hi = mpq_class(1) / prod_lo;
        const BoundedReal t_lo =
            BoundedReal(s.lower()) / sqrt_bounds(BoundedReal(x_hi - s.lower() * s.lower()), prec);
        t_lower = t_lo.lower();
    }
    const BoundedReal atan = arctan_bounds(BoundedReal(t_lower, t_hi.upper()), prec);
    return pi_n - atan;
}

std::string to_string(IntervalSource s) {
    switch (s) {
        case IntervalSource::disk_in_lens:
            return "thm_disk_in_lens";
        case IntervalSource::cot:
            return "cor_cot";
        case IntervalSource::effective:
            return "cor_effective";
        case IntervalSource::combined:
            return "combined";
    }
    return "combined";
}

bool AdmissibleInterval::contains(const mpz_class& m) const {
    return !empty && m > lo.upper() && m < hi.lower();
}

bool AdmissibleInterval::within(const AdmissibleInterval& other) const {
    if (empty) return true;
    if (other.empty) return false;
    return lo.upper() >= other.lo.upper() && hi.lower() <= other.hi.lower();
}

AdmissibleInterval interval_disk_in_lens(const Lens& lens, const Precision& prec) {
    require_disk_precondition(lens, prec);
    const mpq_class& v = lens.parameter();
    const BoundedReal s = trig_bounds(TrigKind::sin_pi_over_n, lens.n, prec);
    const BoundedReal c(lens.center_x());
    const BoundedReal delta_sq = BoundedReal(1) + c * c - BoundedReal(mpq_class(mpq_class(1) / v)) / s;
    if (delta_sq.lower() <= 0) throw DomainError("delta is not resolvable at this precision");
    const BoundedReal delta = sqrt_bounds(delta_sq, prec);
    return make_interval(c - delta, c + delta, IntervalSource::disk_in_lens);
}

AdmissibleInterval interval_cot(const Lens& lens, const Precision& prec) {
    require_disk_precondition(lens, prec);
    const BoundedReal cot = trig_bounds(TrigKind::cot_pi_over_2n, lens.n, prec);
    const BoundedReal inv(mpq_class(mpq_class(1) / lens.parameter()));
    return make_interval(cot, inv - cot, IntervalSource::cot);
}

AdmissibleInterval interval_effective(const Lens& lens, const Precision& prec) {
    const BoundedReal pi = pi_bounds(prec);
    const BoundedReal bound = pi / BoundedReal(4L * lens.n);
    if (!(lens.parameter() < bound.lower())) throw DomainError("effective lens criterion requires v_tilde < pi/(4n)");
    // Only the outward-rounded 2n/pi is used, giving rational endpoints.
    const mpq_class k = mpq_class(2L * lens.n) / pi.lower();
    const mpq_class inv = mpq_class(1) / lens.parameter();
    return make_interval(BoundedReal(k), BoundedReal(mpq_class(inv - k)), IntervalSource::effective);
}

std::string to_string(RegionShape s) {
    switch (s) {
        case RegionShape::union_of_parts:
            return "union";
        case RegionShape::ray_only:
            return "ray_only";
        case RegionShape::from_cot:
            return "from_cot";
    }
    return "union";
}

RegionDescriptor combined_region(const Sector& sector, const std::optional<Lens>& lens, const Precision& prec) {
    RegionDescriptor out;
    const int n = sector.n;
    const BoundedReal s = trig_bounds(TrigKind::sin_pi_over_n, n, prec);
    out.ray_lo = BoundedReal(sector.vertex.upper()) + BoundedReal(1) / s;

    if (n >= 2) {
        const BoundedReal cot_n = trig_bounds(TrigKind::cot_pi_over_n, n, prec);
        if (sector.vertex.upper() <= cot_n.lower()) {
            out.shape = RegionShape::ray_only;
            out.notes.emplace_back("v <= cot(pi/n): the lens interval lies inside the ray");
        }
    }
    if (!lens) {
        out.notes.emplace_back("no lens: region is the ray only");
        return out;
    }
    try {
        out.interval = interval_cot(*lens, prec);
    } catch (const DomainError& e) {
        out.notes.emplace_back(std::string("lens interval dropped: ") + e.what());
        return out;
    }
    if (out.interval->empty) out.notes.emplace_back("lens interval is empty");
    if (out.shape != RegionShape::ray_only && !out.interval->empty &&
        out.ray_lo.upper() < out.interval->hi.lower()) {
        out.shape = RegionShape::from_cot;
        out.notes.emplace_back("ray starts inside the lens interval: region is m > cot(pi/(2n))");
    }
    return out;
}

}  // namespace zf
