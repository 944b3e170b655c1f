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

#include "zerofree/sector.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "zerofree/errors.hpp"

namespace zf {

namespace {

void require_positive_leading(const Polynomial& f) {
    if (f.degree() < 1) throw DomainError("sector producers require degree >= 1");
    if (f.leading() <= 0) throw DomainError("sector producers require a positive leading coefficient");
}

Sector make_sector(BoundedReal vertex, const Polynomial& f, SectorMethod method) {
    Sector s;
    s.vertex = std::move(vertex);
    s.n = f.degree();
    s.kind = HalfAngle::pi_over_n;
    s.method = method;
    return s;
}

// max over i of base^(1/(top - j_i)) for every listed index.
BoundedReal max_radical(const mpq_class& base, int top, const std::vector<int>& indices, const Precision& prec) {
    BoundedReal best;
    bool first = true;
    for (int j : indices) {
        BoundedReal r = nth_root_bounds(base, static_cast<unsigned long>(top - j), prec);
        best = first ? r : max(best, r);
        first = false;
    }
    return best;
}

constexpr std::array<std::pair<SectorMethod, const char*>, 8> kMethodNames{{
    {SectorMethod::nonneg, "nonneg"},
    {SectorMethod::nonneg_real_part, "nonneg_real_part"},
    {SectorMethod::neg_sum, "neg_sum"},
    {SectorMethod::min_over_positives, "min_over_positives"},
    {SectorMethod::summed_denominator, "summed_denominator"},
    {SectorMethod::sign_blocks, "sign_blocks"},
    {SectorMethod::shifted, "shifted"},
    {SectorMethod::parametrized, "parametrized"},
}};

}  // namespace

std::string to_string(SectorMethod m) {
    for (const auto& [method, name] : kMethodNames)
        if (method == m) return name;
    return "unknown";
}

std::optional<SectorMethod> sector_method_from_string(const std::string& s) {
    for (const auto& [method, name] : kMethodNames)
        if (s == name) return method;
    return std::nullopt;
}

std::string Sector::method_label() const {
    std::string label = to_string(method);
    if (method == SectorMethod::shifted && alpha) label += ":" + alpha->get_str();
    return label;
}

Sector sector_nonneg(const Polynomial& f, const Precision&) {
    require_positive_leading(f);
    for (const auto& c : f.coeffs())
        if (c < 0) throw DomainError("sector_nonneg requires non-negative coefficients");
    return make_sector(mpq_class(0), f, SectorMethod::nonneg);
}

Sector sector_nonneg_real_part(const Polynomial& f, const Precision& prec) {
    Sector s = sector_nonneg(f, prec);
    s.kind = HalfAngle::pi_over_2n;
    s.method = SectorMethod::nonneg_real_part;
    return s;
}

Sector sector_neg_sum(const Polynomial& f, const Precision& prec) {
    require_positive_leading(f);
    const SignIndexSets sets = sign_index_sets(f);
    if (sets.neg_indices.empty()) {
        Sector s = sector_nonneg(f, prec);
        s.method = SectorMethod::neg_sum;
        return s;
    }
    const mpq_class base(sets.neg_sum_abs, f.leading());
    // The maximum over all indices is attained at the first or last one.
    const std::vector<int> ends{sets.neg_indices.front(), sets.neg_indices.back()};
    return make_sector(max_radical(base, f.degree(), ends, prec), f, SectorMethod::neg_sum);
}

BoundedReal neg_sum_vertex_all_indices(const Polynomial& f, const Precision& prec) {
    require_positive_leading(f);
    const SignIndexSets sets = sign_index_sets(f);
    if (sets.neg_indices.empty()) return mpq_class(0);
    return max_radical(mpq_class(sets.neg_sum_abs, f.leading()), f.degree(), sets.neg_indices, prec);
}

Sector sector_parametrized(const Polynomial& f, const std::vector<mpq_class>& lambdas, const Precision& prec) {
    require_positive_leading(f);
    const SignIndexSets sets = sign_index_sets(f);
    if (sets.neg_indices.empty()) throw DomainError("sector_parametrized requires a negative coefficient");
    if (lambdas.size() != sets.neg_indices.size())
        throw DomainError("sector_parametrized needs one weight per negative coefficient");
    mpq_class total = 0;
    for (const auto& l : lambdas) {
        if (l <= 0) throw DomainError("sector_parametrized weights must be positive");
        total += l;
    }
    if (total != 1) throw DomainError("sector_parametrized weights must sum to 1");

    BoundedReal vertex;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const int j = sets.neg_indices[i];
        mpq_class base = mpq_class(abs(f.coeff(j))) / (lambdas[i] * f.leading());
        base.canonicalize();
        BoundedReal r = nth_root_bounds(base, static_cast<unsigned long>(f.degree() - j), prec);
        vertex = i == 0 ? r : max(vertex, r);
    }
    return make_sector(vertex, f, SectorMethod::parametrized);
}

Sector sector_min_over_positives(const Polynomial& f, const Precision& prec) {
    require_positive_leading(f);
    const SignIndexSets sets = sign_index_sets(f);
    if (sets.neg_indices.empty()) throw DomainError("sector_min_over_positives requires a negative coefficient");
    BoundedReal vertex;
    bool first = true;
    for (int k : sets.pos_indices_above) {
        const mpq_class base(sets.neg_sum_abs, f.coeff(k));
        BoundedReal inner = max_radical(base, k, sets.neg_indices, prec);
        vertex = first ? inner : min(vertex, inner);
        first = false;
    }
    return make_sector(vertex, f, SectorMethod::min_over_positives);
}

Sector sector_summed_denominator(const Polynomial& f, const Precision& prec) {
    require_positive_leading(f);
    const SignIndexSets sets = sign_index_sets(f);
    if (sets.neg_indices.empty()) throw DomainError("sector_summed_denominator requires a negative coefficient");
    mpz_class d = 0;
    for (int k : sets.pos_indices_above) d += f.coeff(k);
    const mpq_class base(sets.neg_sum_abs, d);
    BoundedReal inner = max_radical(base, sets.pos_indices_above.front(), sets.neg_indices, prec);
    return make_sector(max(BoundedReal(1), inner), f, SectorMethod::summed_denominator);
}

Sector sector_sign_blocks(const Polynomial& f, const Precision& prec) {
    require_positive_leading(f);
    const SignBlockPartition part = sign_blocks(f);
    if (part.sign_changes == 0) throw DomainError("sector_sign_blocks requires at least one sign change");
    BoundedReal vertex(1);
    for (const auto& block : part.blocks) {
        if (!block.has_negative) continue;
        const mpq_class base(block.S_minus, block.S_plus);
        vertex = max(vertex, max_radical(base, block.p, block.neg_indices, prec));
    }
    return make_sector(vertex, f, SectorMethod::sign_blocks);
}

std::optional<Sector> sector_shifted(const Polynomial& f, const mpq_class& alpha) {
    require_positive_leading(f);
    if (!partial_sums(f, alpha).all_nonneg) return std::nullopt;
    Sector s = make_sector(alpha, f, SectorMethod::shifted);
    s.alpha = alpha;
    return s;
}

std::vector<mpq_class> default_shift_candidates() { return {mpq_class(0), mpq_class(1)}; }

SectorReport best_sector(const Polynomial& f, const std::vector<mpq_class>& alphas, const Precision& prec) {
    require_positive_leading(f);
    const SignIndexSets sets = sign_index_sets(f);
    const bool has_negative = !sets.neg_indices.empty();

    std::vector<SectorCandidate> candidates;
    auto attempt = [&](SectorMethod method, auto&& producer) {
        SectorCandidate c{method, std::nullopt, std::nullopt, {}};
        try {
            c.sector = producer();
        } catch (const DomainError& e) {
            c.note = e.what();
        }
        candidates.push_back(std::move(c));
    };

    attempt(SectorMethod::nonneg, [&] { return sector_nonneg(f, prec); });
    attempt(SectorMethod::neg_sum, [&] { return sector_neg_sum(f, prec); });
    attempt(SectorMethod::min_over_positives, [&] { return sector_min_over_positives(f, prec); });
    attempt(SectorMethod::summed_denominator, [&] { return sector_summed_denominator(f, prec); });
    attempt(SectorMethod::sign_blocks, [&] { return sector_sign_blocks(f, prec); });
    for (const auto& alpha : alphas) {
        SectorCandidate c{SectorMethod::shifted, alpha, std::nullopt, {}};
        if (alpha < 0) {
            c.note = "negative shift";
        } else {
            c.sector = sector_shifted(f, alpha);
            if (!c.sector) c.note = "a partial sum is negative";
        }
        candidates.push_back(std::move(c));
    }
    if (has_negative) {
        const std::vector<mpq_class> uniform(sets.neg_indices.size(),
                                             mpq_class(1, static_cast<unsigned long>(sets.neg_indices.size())));
        attempt(SectorMethod::parametrized, [&] { return sector_parametrized(f, uniform, prec); });
    } else {
        candidates.push_back({SectorMethod::parametrized, std::nullopt, std::nullopt, "no negative coefficient"});
    }

    const Sector* best = nullptr;
    for (const auto& c : candidates)
        if (c.sector && (!best || c.sector->vertex.upper() < best->vertex.upper())) best = &*c.sector;
    // sector_neg_sum always applies under the preconditions, so best is set.
    return SectorReport{*best, std::move(candidates)};
}

}  // namespace zf
