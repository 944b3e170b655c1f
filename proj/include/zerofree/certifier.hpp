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

#ifndef ZEROFREE_CERTIFIER_HPP
#define ZEROFREE_CERTIFIER_HPP

#include <gmpxx.h>

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "zerofree/arith.hpp"
#include "zerofree/bounded.hpp"
#include "zerofree/lens.hpp"
#include "zerofree/poly.hpp"
#include "zerofree/sector.hpp"

namespace zf {

inline constexpr int kCertificateSchema = 1;

enum class CriterionFamily { lens, sector_pq, prime_power, combined };
std::string to_string(CriterionFamily f);
std::optional<CriterionFamily> criterion_family_from_string(const std::string& s);
/// Family that issues certificates with the given criterion tag.
std::optional<CriterionFamily> family_of_criterion(const std::string& tag);

enum class Outcome { certified, value_composite, outside_region, witness_absent };
std::string to_string(Outcome o);

struct CheckRecord {
    std::string description;
    std::string left;
    std::string right;
    std::string margin;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Certificate {
    int schema = kCertificateSchema;
    Polynomial polynomial;  // as given, before any normalization
    mpz_class m;
    mpz_class q_max = 1;
    int digits = 16;
    std::vector<mpq_class> shift_candidates;
    std::string criterion;
    std::string branch;  // sector, lens or ray
    nlohmann::ordered_json region;
    FactorizationWitness witness;
    std::vector<CheckRecord> checks;
    PrimalityStatus primality_status = PrimalityStatus::proven_prime;
    std::string primality_method;
    bool conditional = false;
    std::string rational_roots = "unused";
    bool sign_normalized = false;   // worked with -f because a_n < 0
    bool argument_negated = false;  // worked with f(-X) at -m because m < 0

    nlohmann::ordered_json to_json() const;
    /// Throws ParseError on malformed input or a schema other than 1.
    static Certificate from_json(const nlohmann::ordered_json& j);
};

struct CertifyOptions {
    mpz_class q_max = 1;
    Precision prec = Precision::from_env();
    std::vector<mpq_class> alphas = default_shift_candidates();
};

struct CertifyResult {
    std::optional<Certificate> certificate;
    Outcome outcome = Outcome::witness_absent;
    std::string reason;
};

/// Per-polynomial data shared by every m: best sector, lens, intervals.
class CertificationContext {
public:
    CertificationContext(const Polynomial& f, bool negate_argument, const CertifyOptions& opts);

    /// m is the caller's integer; with negate_argument it must be <= 0.
    CertifyResult certify(CriterionFamily family, const mpz_class& m) const;

    const Polynomial& working() const { return g_; }
    const SectorReport& sector_report() const { return report_; }
    const std::optional<LensAnalysis>& lens_analysis() const { return lens_; }

private:
    struct Value;
    Value value_at(const mpz_class& m) const;
    CertifyResult sector_pq(const mpz_class& m) const;
    CertifyResult prime_power(const mpz_class& m) const;
    CertifyResult lens(const mpz_class& m) const;
    CertifyResult combined(const mpz_class& m) const;
    Certificate skeleton(const mpz_class& m) const;
    RationalRootStatus rational_roots() const;

    Polynomial input_;
    Polynomial g_;
    Polynomial dg_;
    bool negate_ = false;
    bool sign_normalized_ = false;
    CertifyOptions opts_;
    SectorReport report_;
    BoundedReal sin_;
    std::optional<LensAnalysis> lens_;
    std::string lens_note_;
    mutable std::optional<RationalRootStatus> rational_;
};

CertifyResult certify_sector_pq(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts = {});
CertifyResult certify_sector_prime_power(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts = {});
CertifyResult certify_lens(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts = {});
CertifyResult certify_combined(const Polynomial& f, const mpz_class& m, const CertifyOptions& opts = {});
CertifyResult certify_with(CriterionFamily family, const Polynomial& f, const mpz_class& m,
                           const CertifyOptions& opts = {});

struct SearchOptions {
    CertifyOptions certify;
    std::vector<CriterionFamily> modes{CriterionFamily::lens, CriterionFamily::sector_pq};
    bool exhaustive = false;
    bool negative_m = false;  // scan -lo, ..., -hi instead
};

struct MOutcome {
    mpz_class m;
    Outcome outcome = Outcome::witness_absent;
    std::string criterion;  // set when certified
    std::string reason;
};

struct SearchReport {
    mpz_class lo;
    mpz_class hi;
    std::vector<MOutcome> outcomes;
    std::vector<Certificate> certificates;  // the first only, unless exhaustive

    const Certificate* first() const { return certificates.empty() ? nullptr : &certificates.front(); }
};

/// Scans m ascending over [lo, hi], trying the modes in order at each m.
SearchReport search_m(const Polynomial& f, const mpz_class& lo, const mpz_class& hi, const SearchOptions& opts = {});

struct VerifyResult {
    bool ok = false;
    std::string reason;
};

/// Replays the certificate at its recorded precision (the re-issued
/// certificate must match field for field) and again at doubled precision.
VerifyResult certificate_verify(const Certificate& c);

}  // namespace zf

#endif
