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

#include "zerofree/certifier.hpp"

#include <algorithm>
#include <utility>

#include "zerofree/errors.hpp"

namespace zf {

using nlohmann::ordered_json;

std::string to_string(CriterionFamily f) {
    switch (f) {
        case CriterionFamily::lens:
            return "lens";
        case CriterionFamily::sector_pq:
            return "sector_pq";
        case CriterionFamily::prime_power:
            return "prime_power";
        case CriterionFamily::combined:
            return "combined";
    }
    return "sector_pq";
}

std::optional<CriterionFamily> criterion_family_from_string(const std::string& s) {
    for (auto f : {CriterionFamily::lens, CriterionFamily::sector_pq, CriterionFamily::prime_power,
                   CriterionFamily::combined})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

std::optional<CriterionFamily> family_of_criterion(const std::string& tag) {
    if (tag == "thm39_lens" || tag == "cor310_cot") return CriterionFamily::lens;
    if (tag == "cor312_combined") return CriterionFamily::combined;
    if (tag == "thm35_prime_power" || tag == "thm35_sqrt") return CriterionFamily::prime_power;
    if (tag == "thm31_pq" || tag == "thm31_sqrt_q" || tag == "cor32_nonneg" || tag == "cor34_partial_sums" ||
        tag == "cor35_fujiwara" || tag == "cor38_single_variation")
        return CriterionFamily::sector_pq;
    return std::nullopt;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::certified:
            return "certified";
        case Outcome::value_composite:
            return "value_composite";
        case Outcome::outside_region:
            return "outside_region";
        case Outcome::witness_absent:
            return "witness_absent";
    }
    return "witness_absent";
}

namespace {

std::string str(const mpz_class& x) { return x.get_str(); }
std::string str(const mpq_class& x) { return x.get_str(); }

mpz_class parse_mpz(const ordered_json& j, const char* key) {
    const std::string s = j.at(key).get<std::string>();
    mpz_class out;
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError(std::string("bad integer in field ") + key, 0);
    return out;
}

mpq_class parse_mpq(const std::string& s) {
    mpq_class out;
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError("bad rational: " + s, 0);
    out.canonicalize();
    return out;
}

CheckRecord greater_check(std::string description, const mpz_class& m, const BoundedReal& threshold, int places) {
    return {std::move(description), str(m), decimal_up(threshold.upper(), places),
            decimal_down(mpq_class(m - threshold.upper()), places)};
}

CheckRecord less_check(std::string description, const mpz_class& m, const BoundedReal& bound, int places) {
    return {std::move(description), str(m), decimal_down(bound.lower(), places),
            decimal_down(mpq_class(bound.lower() - m), places)};
}

ordered_json sector_block(const Sector& s, const BoundedReal& sin, int places) {
    ordered_json j;
    j["kind"] = "sector";
    j["method"] = s.method_label();
    j["n"] = s.n;
    j["angle"] = s.angle_label();
    j["vertex_lower"] = decimal_down(s.vertex.lower(), places);
    j["vertex_upper"] = decimal_up(s.vertex.upper(), places);
    j["sin_lower"] = decimal_down(sin.lower(), places);
    return j;
}

ordered_json interval_json(const AdmissibleInterval& iv, int places) {
    ordered_json j;
    j["lo"] = decimal_up(iv.lo.upper(), places);
    j["hi"] = decimal_down(iv.hi.lower(), places);
    j["empty"] = iv.empty;
    return j;
}

ordered_json lens_block(const Lens& lens, const std::optional<AdmissibleInterval>& disk,
                        const std::optional<AdmissibleInterval>& cot, int places) {
    ordered_json j;
    j["kind"] = "lens_interval";
    j["n"] = lens.n;
    j["reciprocal_method"] = to_string(lens.reciprocal_method);
    j["v_tilde_lower"] = decimal_down(lens.v_tilde.lower(), places);
    j["v_tilde_upper"] = decimal_up(lens.v_tilde.upper(), places);
    j["disk_interval"] = disk ? interval_json(*disk, places) : ordered_json(nullptr);
    j["cot_interval"] = cot ? interval_json(*cot, places) : ordered_json(nullptr);
    return j;
}

CheckRecord lens_precondition_check(const Lens& lens, const Precision& prec) {
    const BoundedReal t = trig_bounds(TrigKind::tan_pi_over_2n, lens.n, prec);
    const mpq_class half = t.lower() / 2;
    const int places = prec.decimal_places();
    return {"v_tilde < tan(pi/(2n))/2", decimal_up(lens.parameter(), places), decimal_down(half, places),
            decimal_down(mpq_class(half - lens.parameter()), places)};
}

std::string sector_tag(const Sector& s, const Polynomial& g, const mpz_class& q) {
    if (q != 1) return "thm31_pq";
    switch (s.method) {
        case SectorMethod::nonneg:
        case SectorMethod::nonneg_real_part:
            return "cor32_nonneg";
        case SectorMethod::shifted:
            if (s.alpha && *s.alpha == 0) return "cor32_nonneg";
            if (s.alpha && *s.alpha == 1) return "cor34_partial_sums";
            return "thm31_pq";
        case SectorMethod::neg_sum: {
            const SignIndexSets sets = sign_index_sets(g);
            return g.leading() > sets.neg_sum_abs ? "cor35_fujiwara" : "thm31_pq";
        }
        case SectorMethod::summed_denominator:
        case SectorMethod::sign_blocks:
            return sign_blocks(g).sign_changes == 1 ? "cor38_single_variation" : "thm31_pq";
        case SectorMethod::min_over_positives:
        case SectorMethod::parametrized:
            return "thm31_pq";
    }
    return "thm31_pq";
}

int outcome_rank(Outcome o) {
    switch (o) {
        case Outcome::certified:
            return 3;
        case Outcome::outside_region:
            return 2;
        case Outcome::value_composite:
            return 1;
        case Outcome::witness_absent:
            return 0;
    }
    return 0;
}

CertifyResult fail(Outcome o, std::string reason) { return {std::nullopt, o, std::move(reason)}; }

}  // namespace

ordered_json Certificate::to_json() const {
    ordered_json j;
    j["schema"] = schema;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : polynomial.coeffs()) coeffs.push_back(str(c));
    j["polynomial"] = coeffs;
    j["m"] = str(m);
    j["q_max"] = str(q_max);
    j["digits"] = digits;
    ordered_json alphas = ordered_json::array();
    for (const auto& a : shift_candidates) alphas.push_back(str(a));
    j["shift_candidates"] = alphas;
    j["criterion"] = criterion;
    j["branch"] = branch;
    j["region"] = region;
    ordered_json w;
    w["p"] = str(witness.p);
    w["k"] = witness.k;
    w["q"] = str(witness.q);
    w["ell"] = witness.ell ? ordered_json(*witness.ell) : ordered_json(nullptr);
    w["r"] = witness.r ? ordered_json(str(*witness.r)) : ordered_json(nullptr);
    w["s"] = str(witness.s);
    ordered_json alts = ordered_json::array();
    for (const auto& a : witness.alternatives) alts.push_back({{"p", str(a.p)}, {"k", a.k}, {"q", str(a.q)}});
    w["alternatives"] = alts;
    j["witness"] = w;
    ordered_json cs = ordered_json::array();
    for (const auto& c : checks)
        cs.push_back({{"description", c.description}, {"left", c.left}, {"right", c.right}, {"margin", c.margin}});
    j["checks"] = cs;
    j["primality_status"] = to_string(primality_status);
    j["primality_method"] = primality_method;
    j["conditional"] = conditional;
    j["rational_roots"] = rational_roots;
    j["transforms"] = {{"sign_normalized", sign_normalized}, {"argument_negated", argument_negated}};
    return j;
}

Certificate Certificate::from_json(const ordered_json& j) {
    try {
        Certificate c;
        c.schema = j.at("schema").get<int>();
        if (c.schema != kCertificateSchema)
            throw ParseError("unsupported certificate schema " + std::to_string(c.schema), 0);
        std::vector<mpz_class> coeffs;
        for (const auto& x : j.at("polynomial")) {
            mpz_class v;
            if (v.set_str(x.get<std::string>(), 10) != 0) throw ParseError("bad polynomial coefficient", 0);
            coeffs.push_back(v);
        }
        c.polynomial = Polynomial(std::move(coeffs));
        c.m = parse_mpz(j, "m");
        c.q_max = parse_mpz(j, "q_max");
        c.digits = j.at("digits").get<int>();
        if (c.digits < 1) throw ParseError("digits must be positive", 0);
        for (const auto& a : j.at("shift_candidates")) c.shift_candidates.push_back(parse_mpq(a.get<std::string>()));
        c.criterion = j.at("criterion").get<std::string>();
        c.branch = j.at("branch").get<std::string>();
        c.region = j.at("region");
        const auto& w = j.at("witness");
        c.witness.p = parse_mpz(w, "p");
        c.witness.k = w.at("k").get<unsigned long>();
        c.witness.q = parse_mpz(w, "q");
        if (!w.at("ell").is_null()) c.witness.ell = w.at("ell").get<unsigned long>();
        if (!w.at("r").is_null()) c.witness.r = parse_mpz(w, "r");
        c.witness.s = parse_mpq(w.at("s").get<std::string>());
        for (const auto& a : w.at("alternatives"))
            c.witness.alternatives.push_back({parse_mpz(a, "p"), a.at("k").get<unsigned long>(), parse_mpz(a, "q")});
        for (const auto& x : j.at("checks"))
            c.checks.push_back({x.at("description").get<std::string>(), x.at("left").get<std::string>(),
                                x.at("right").get<std::string>(), x.at("margin").get<std::string>()});
        c.primality_status = primality_status_from_string(j.at("primality_status").get<std::string>());
        c.primality_method = j.at("primality_method").get<std::string>();
        c.witness.primality.status = c.primality_status;
        c.witness.primality.method = c.primality_method;
        c.conditional = j.at("conditional").get<bool>();
        c.rational_roots = j.at("rational_roots").get<std::string>();
        c.sign_normalized = j.at("transforms").at("sign_normalized").get<bool>();
        c.argument_negated = j.at("transforms").at("argument_negated").get<bool>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

struct CertificationContext::Value {
    mpz_class m_work;
    mpz_class value;
    mpz_class derivative;
};

CertificationContext::CertificationContext(const Polynomial& f, bool negate_argument_flag, const CertifyOptions& opts)
    : input_(f), negate_(negate_argument_flag), opts_(opts) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    if (opts.q_max < 1) throw DomainError("q_max must be >= 1");
    g_ = negate_ ? negate_argument(f) : f;
    if (g_.leading() < 0) {
        g_ = -g_;
        sign_normalized_ = true;
    }
    dg_ = derivative(g_);
    if (g_.degree() >= 2) {
        report_ = best_sector(g_, opts_.alphas, opts_.prec);
        sin_ = trig_bounds(TrigKind::sin_pi_over_n, report_.best.angle_denominator(), opts_.prec);
    }
    if (g_.degree() >= 3 && g_.coeff(0) != 0) {
        lens_ = lens_of(g_, opts_.prec, opts_.alphas);
        if (!lens_->lens) lens_note_ = lens_->note;
    } else {
        lens_note_ = "lens needs degree >= 3 and a nonzero constant term";
    }
}

CertificationContext::Value CertificationContext::value_at(const mpz_class& m) const {
    Value v;
    v.m_work = negate_ ? mpz_class(-m) : m;
    v.value = evaluate(g_, v.m_work);
    v.derivative = evaluate(dg_, v.m_work);
    return v;
}

RationalRootStatus CertificationContext::rational_roots() const {
    if (!rational_) rational_ = has_rational_root(g_).status;
    return *rational_;
}

Certificate CertificationContext::skeleton(const mpz_class& m) const {
    Certificate c;
    c.polynomial = input_;
    c.m = m;
    c.q_max = opts_.q_max;
    c.digits = opts_.prec.digits;
    c.shift_candidates = opts_.alphas;
    c.sign_normalized = sign_normalized_;
    c.argument_negated = negate_;
    return c;
}

namespace {

void set_primality(Certificate& c, const PrimalityResult& pr) {
    c.primality_status = pr.status;
    c.primality_method = pr.method;
    c.conditional = pr.status == PrimalityStatus::probable_prime;
}

}  // namespace

CertifyResult CertificationContext::sector_pq(const mpz_class& m) const {
    if (g_.degree() < 2) return fail(Outcome::outside_region, "sector criteria need degree >= 2");
    const Value v = value_at(m);
    if (v.value <= 0) return fail(Outcome::witness_absent, "f(m) <= 0");
    WitnessOutcome wo = extract_witness(v.value, v.derivative, opts_.q_max, WitnessMode::pq);
    if (!wo.witness) return fail(Outcome::value_composite, wo.reason);
    const FactorizationWitness& w = *wo.witness;
    const Sector& s = report_.best;
    const int places = opts_.prec.decimal_places();

    const BoundedReal vertex(s.vertex.upper());
    const BoundedReal thr = vertex + BoundedReal(mpq_class(w.q)) / sin_;
    std::string tag;
    CheckRecord check;
    std::string rational = "unused";
    if (v.m_work > thr.upper()) {
        tag = sector_tag(s, g_, w.q);
        check = greater_check("m > v + q/sin(pi/n)", v.m_work, thr, places);
    } else {
        if (w.q == 1 || rational_roots() != RationalRootStatus::none)
            return fail(Outcome::outside_region, "m <= v + q/sin(pi/n)");
        const BoundedReal thr2 = vertex + sqrt_bounds(BoundedReal(mpq_class(w.q)), opts_.prec) / sin_;
        if (!(v.m_work > thr2.upper())) return fail(Outcome::outside_region, "m <= v + sqrt(q)/sin(pi/n)");
        tag = "thm31_sqrt_q";
        check = greater_check("m > v + sqrt(q)/sin(pi/n)", v.m_work, thr2, places);
        rational = "none";
    }
    Certificate c = skeleton(m);
    c.criterion = tag;
    c.branch = "sector";
    c.region = sector_block(s, sin_, places);
    c.witness = w;
    c.checks.push_back(std::move(check));
    c.rational_roots = rational;
    set_primality(c, w.primality);
    return {std::move(c), Outcome::certified, {}};
}

CertifyResult CertificationContext::prime_power(const mpz_class& m) const {
    if (g_.degree() < 2) return fail(Outcome::outside_region, "sector criteria need degree >= 2");
    const Value v = value_at(m);
    if (v.value <= 0) return fail(Outcome::witness_absent, "f(m) <= 0");
    WitnessOutcome wo = extract_witness(v.value, v.derivative, opts_.q_max, WitnessMode::prime_power);
    if (!wo.witness)
        return fail(v.derivative == 0 ? Outcome::witness_absent : Outcome::value_composite, wo.reason);
    const FactorizationWitness& w = *wo.witness;
    const Sector& s = report_.best;
    const int places = opts_.prec.decimal_places();

    // (p^s q)^2 = p^(2s) q^2 with 2s = min(2 ell, k) an integer.
    const unsigned long two_s = std::min(2 * *w.ell, w.k);
    mpz_class sq;
    mpz_pow_ui(sq.get_mpz_t(), w.p.get_mpz_t(), two_s);
    sq *= w.q * w.q;
    const BoundedReal vertex(s.vertex.upper());
    const BoundedReal thr = vertex + nth_root_bounds(mpq_class(sq), 2, opts_.prec) / sin_;
    std::string tag;
    CheckRecord check;
    std::string rational = "unused";
    if (v.m_work > thr.upper()) {
        tag = "thm35_prime_power";
        check = greater_check("m > v + p^s q/sin(pi/n)", v.m_work, thr, places);
    } else {
        if (sq == 1 || rational_roots() != RationalRootStatus::none)
            return fail(Outcome::outside_region, "m <= v + p^s q/sin(pi/n)");
        const BoundedReal thr2 = vertex + nth_root_bounds(mpq_class(sq), 4, opts_.prec) / sin_;
        if (!(v.m_work > thr2.upper())) return fail(Outcome::outside_region, "m <= v + sqrt(p^s q)/sin(pi/n)");
        tag = "thm35_sqrt";
        check = greater_check("m > v + sqrt(p^s q)/sin(pi/n)", v.m_work, thr2, places);
        rational = "none";
    }
    Certificate c = skeleton(m);
    c.criterion = tag;
    c.branch = "sector";
    c.region = sector_block(s, sin_, places);
    c.witness = w;
    c.checks.push_back(std::move(check));
    c.rational_roots = rational;
    set_primality(c, w.primality);
    return {std::move(c), Outcome::certified, {}};
}

CertifyResult CertificationContext::lens(const mpz_class& m) const {
    const Value v = value_at(m);
    if (v.value <= 0) return fail(Outcome::witness_absent, "f(m) <= 0");
    const PrimalityResult pr = is_prime(v.value);
    if (!pr.is_prime()) return fail(Outcome::value_composite, "f(m) is not prime");
    if (!lens_ || !lens_->lens) return fail(Outcome::outside_region, lens_note_);
    const Lens& L = *lens_->lens;
    const int places = opts_.prec.decimal_places();
    std::optional<AdmissibleInterval> disk, cot;
    std::string why;
    try {
        cot = interval_cot(L, opts_.prec);
        disk = interval_disk_in_lens(L, opts_.prec);
    } catch (const DomainError& e) {
        why = e.what();
    }
    const AdmissibleInterval* used = nullptr;
    std::string tag;
    if (cot && cot->contains(v.m_work)) {
        used = &*cot;
        tag = "cor310_cot";
    } else if (disk && disk->contains(v.m_work)) {
        used = &*disk;
        tag = "thm39_lens";
    }
    if (!used) return fail(Outcome::outside_region, why.empty() ? "m outside the lens intervals" : why);

    Certificate c = skeleton(m);
    c.criterion = tag;
    c.branch = "lens";
    c.region = lens_block(L, disk, cot, places);
    c.region["interval_source"] = to_string(used->source);
    c.witness.p = v.value;
    c.witness.primality = pr;
    c.checks.push_back(lens_precondition_check(L, opts_.prec));
    c.checks.push_back(greater_check("m > interval lower end", v.m_work, used->lo, places));
    c.checks.push_back(less_check("m < interval upper end", v.m_work, used->hi, places));
    set_primality(c, pr);
    return {std::move(c), Outcome::certified, {}};
}

CertifyResult CertificationContext::combined(const mpz_class& m) const {
    if (g_.degree() < 2) return fail(Outcome::outside_region, "sector criteria need degree >= 2");
    const Value v = value_at(m);
    if (v.value <= 0) return fail(Outcome::witness_absent, "f(m) <= 0");
    const PrimalityResult pr = is_prime(v.value);
    if (!pr.is_prime()) return fail(Outcome::value_composite, "f(m) is not prime");
    const std::optional<Lens> L = lens_ ? lens_->lens : std::nullopt;
    const RegionDescriptor region = combined_region(report_.best, L, opts_.prec);
    const int places = opts_.prec.decimal_places();

    Certificate c = skeleton(m);
    c.criterion = "cor312_combined";
    ordered_json block;
    block["kind"] = "combined";
    block["shape"] = to_string(region.shape);
    block["sector"] = sector_block(report_.best, sin_, places);
    block["ray_lo"] = decimal_up(region.ray_lo.upper(), places);
    block["cot_interval"] = region.interval ? interval_json(*region.interval, places) : ordered_json(nullptr);
    if (region.in_interval(v.m_work)) {
        c.branch = "lens";
        block["v_tilde_upper"] = decimal_up(L->parameter(), places);
        c.checks.push_back(lens_precondition_check(*L, opts_.prec));
        c.checks.push_back(greater_check("m > cot(pi/(2n))", v.m_work, region.interval->lo, places));
        c.checks.push_back(less_check("m < 1/v_tilde - cot(pi/(2n))", v.m_work, region.interval->hi, places));
    } else if (region.in_ray(v.m_work)) {
        c.branch = "ray";
        c.checks.push_back(greater_check("m > v + 1/sin(pi/n)", v.m_work, region.ray_lo, places));
    } else {
        return fail(Outcome::outside_region, "m outside the combined region");
    }
    c.region = std::move(block);
    c.witness.p = v.value;
    c.witness.primality = pr;
    set_primality(c, pr);
    return {std::move(c), Outcome::certified, {}};
}

CertifyResult CertificationContext::certify(CriterionFamily family, const mpz_class& m) const {
    switch (family) {
        case CriterionFamily::lens:
            return lens(m);
        case CriterionFamily::sector_pq:
            return sector_pq(m);
        case CriterionFamily::prime_power:
            return prime_power(m);
        case CriterionFamily::combined:
            return combined(m);
    }
    return fail(Outcome::outside_region, "unknown criterion family");
}

CertifyResult certify_with(CriterionFamily family, const Polynomial& f, const mpz_class& m, const CertifyOptions& opts) {
    return CertificationContext(f, m < 0, opts).certify(family, m);
}

CertifyResult certify_sector_pq(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts) {
    return certify_with(CriterionFamily::sector_pq, f, m, opts);
}

CertifyResult certify_sector_prime_power(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts) {
    return certify_with(CriterionFamily::prime_power, f, m, opts);
}

CertifyResult certify_lens(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts) {
    return certify_with(CriterionFamily::lens, f, m, opts);
}

CertifyResult certify_combined(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts) {
    return certify_with(CriterionFamily::combined, f, m, opts);
}

SearchReport search_m(const Polynomial& f, const mpz_class& lo, const mpz_class& hi, const SearchOptions& opts) {
    if (lo < 1 || lo > hi) throw DomainError("search range must satisfy 1 <= lo <= hi");
    if (opts.modes.empty()) throw DomainError("no criterion enabled");
    SearchReport report;
    report.lo = lo;
    report.hi = hi;
    const CertificationContext ctx(f, opts.negative_m, opts.certify);
    for (mpz_class k = lo; k <= hi; ++k) {
        const mpz_class m = opts.negative_m ? mpz_class(-k) : k;
        MOutcome mo;
        mo.m = m;
        bool first = true;
        for (CriterionFamily family : opts.modes) {
            CertifyResult r = ctx.certify(family, m);
            if (r.certificate) {
                mo.outcome = Outcome::certified;
                mo.criterion = r.certificate->criterion;
                mo.reason.clear();
                report.certificates.push_back(std::move(*r.certificate));
                break;
            }
            if (first || outcome_rank(r.outcome) > outcome_rank(mo.outcome)) {
                mo.outcome = r.outcome;
                mo.reason = to_string(family) + ": " + r.reason;
            }
            first = false;
        }
        report.outcomes.push_back(std::move(mo));
        if (!report.certificates.empty() && !opts.exhaustive) break;
    }
    return report;
}

VerifyResult certificate_verify(const Certificate& c) {
    VerifyResult out;
    const auto family = family_of_criterion(c.criterion);
    if (!family) {
        out.reason = "unknown criterion " + c.criterion;
        return out;
    }
    CertifyOptions opts;
    opts.q_max = c.q_max;
    opts.prec = Precision{c.digits};
    opts.alphas = c.shift_candidates;
    if (c.polynomial.degree() < 2 || c.q_max < 1 || c.digits < 1) {
        out.reason = "certificate inputs out of range";
        return out;
    }
    try {
        const CertifyResult again = certify_with(*family, c.polynomial, c.m, opts);
        if (!again.certificate) {
            out.reason = "replay issued no certificate: " + again.reason;
            return out;
        }
        const ordered_json fresh = again.certificate->to_json();
        const ordered_json given = c.to_json();
        if (fresh != given) {
            for (const auto& [key, value] : fresh.items()) {
                if (!given.contains(key) || given.at(key) != value) {
                    out.reason = "replay differs in field " + key;
                    return out;
                }
            }
            out.reason = "replay differs";
            return out;
        }
        opts.prec = opts.prec.doubled();
        const CertifyResult fine = certify_with(*family, c.polynomial, c.m, opts);
        if (!fine.certificate) {
            out.reason = "replay at doubled precision failed: " + fine.reason;
            return out;
        }
        const FactorizationWitness& w = fine.certificate->witness;
        if (family_of_criterion(fine.certificate->criterion) != family || w.p != c.witness.p ||
            w.k != c.witness.k || w.q != c.witness.q) {
            out.reason = "replay at doubled precision changed the criterion or witness";
            return out;
        }
    } catch (const std::exception& e) {
        out.reason = std::string("replay error: ") + e.what();
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace zf
