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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "plot.hpp"
#include "scan.hpp"
#include "zerofree/certifier.hpp"
#include "zerofree/errors.hpp"
#include "zerofree/oracle.hpp"

namespace {

using namespace zf;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNoCertificate = 1;
constexpr int kInputError = 2;

struct Config {
    std::string expression;
    std::string coeffs;
    std::string file;
    std::string m;
    std::string search;
    std::string q_max = "1";
    std::string criteria;
    std::string plot;
    std::string path;
    int digits = 0;
    bool prime_power = false;
    bool json = false;
    bool negative_m = false;
    bool exhaustive = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polynomial load_polynomial(const Config& cfg) {
    const int sources = !cfg.expression.empty() + !cfg.coeffs.empty() + !cfg.file.empty();
    if (sources != 1) throw InputError("give exactly one polynomial: an expression, --coeffs or --file");
    if (!cfg.coeffs.empty()) return parse_coefficients(cfg.coeffs);
    if (!cfg.file.empty()) return parse_polynomial(read_file(cfg.file));
    return parse_polynomial(cfg.expression);
}

mpz_class parse_integer(const std::string& s, const char* what) {
    mpz_class out;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || out.set_str(t, 10) != 0) throw InputError(std::string("invalid ") + what + ": " + s);
    return out;
}

Precision precision(const Config& cfg) {
    if (cfg.digits == 0) return Precision::from_env();
    if (cfg.digits < 8 || cfg.digits > 10000) throw InputError("--digits must lie in [8, 10000]");
    return Precision{cfg.digits};
}

std::string interval_text(const BoundedReal& b, int places = 8) {
    return "[" + decimal_down(b.lower(), places) + ", " + decimal_up(b.upper(), places) + "]";
}

std::string admissible_text(const AdmissibleInterval& iv, int places = 8) {
    if (iv.empty) return "empty";
    return "(" + decimal_up(iv.lo.upper(), places) + ", " + decimal_down(iv.hi.lower(), places) + ")";
}

ordered_json bounded_json(const BoundedReal& b, int places) {
    return {{"lower", decimal_down(b.lower(), places)}, {"upper", decimal_up(b.upper(), places)}};
}

int cmd_analyze(const Config& cfg) {
    const Polynomial f0 = load_polynomial(cfg);
    const Precision prec = precision(cfg);
    const int places = prec.decimal_places();
    if (f0.degree() < 1) throw InputError("analyze needs a nonconstant polynomial");
    const bool negated = f0.leading() < 0;
    const Polynomial f = negated ? -f0 : f0;
    const int n = f.degree();

    ordered_json j;
    std::ostringstream text;
    j["polynomial"] = f0.to_expression();
    j["degree"] = n;
    j["sign_normalized"] = negated;
    text << "polynomial: " << f0.to_expression() << "  (degree " << n << ")\n";
    if (negated) text << "leading coefficient negative: analysing -f\n";

    std::optional<SectorReport> report;
    if (n >= 2) {
        report = best_sector(f, default_shift_candidates(), prec);
        ordered_json cands = ordered_json::array();
        text << "sectors (half-angle pi/" << n << "):\n";
        for (const SectorCandidate& c : report->candidates) {
            std::string name = to_string(c.method);
            if (c.alpha) name += ":" + c.alpha->get_str();
            ordered_json cj{{"method", name}};
            char line[64];
            std::snprintf(line, sizeof line, "  %-22s ", name.c_str());
            text << line;
            if (c.sector) {
                cj["vertex"] = bounded_json(c.sector->vertex, places);
                text << "v in " << interval_text(c.sector->vertex) << "\n";
            } else {
                cj["note"] = c.note;
                text << "n/a (" << c.note << ")\n";
            }
            cands.push_back(cj);
        }
        const Sector& s = report->best;
        j["sectors"] = cands;
        j["best_sector"] = {{"method", s.method_label()},
                            {"vertex", bounded_json(s.vertex, places)},
                            {"angle", "pi/" + std::to_string(s.angle_denominator())}};
        text << "best sector: v = " << interval_text(s.vertex) << " via " << s.method_label() << ", angle pi/"
             << s.angle_denominator() << "\n";
    } else {
        mpq_class root(-f.coeff(0), f.leading());
        root.canonicalize();
        text << "degree 1: root " << root.get_str() << "\n";
        j["root"] = root.get_str();
    }

    const SignBlockPartition blocks = sign_blocks(f);
    ordered_json bj = ordered_json::array();
    text << "sign blocks (" << blocks.sign_changes << " sign changes):\n";
    for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
        const SignBlock& b = blocks.blocks[i];
        bj.push_back({{"S_plus", b.S_plus.get_str()}, {"S_minus", b.S_minus.get_str()}, {"has_negative", b.has_negative}});
        text << "  block " << i + 1 << ": S+ = " << b.S_plus << ", S- = " << b.S_minus << "\n";
    }
    j["sign_blocks"] = bj;
    j["sign_changes"] = blocks.sign_changes;

    std::optional<Lens> lens;
    if (n >= 3 && f.coeff(0) != 0) {
        const LensAnalysis la = lens_of(f, prec);
        lens = la.lens;
        if (lens) {
            ordered_json lj{{"v_tilde", bounded_json(lens->v_tilde, places)},
                            {"reciprocal_method", to_string(lens->reciprocal_method)}};
            text << "lens: v~ = " << interval_text(lens->v_tilde) << " via reciprocal " << to_string(lens->reciprocal_method)
                 << "\n";
            auto add = [&](const char* name, auto&& fn) {
                try {
                    const AdmissibleInterval iv = fn();
                    lj[name] = {{"lo", decimal_up(iv.lo.upper(), places)},
                                {"hi", decimal_down(iv.hi.lower(), places)},
                                {"empty", iv.empty}};
                    text << "  " << name << " interval: " << admissible_text(iv) << "\n";
                } catch (const DomainError& e) {
                    lj[name] = {{"error", e.what()}};
                    text << "  " << name << " interval: n/a (" << e.what() << ")\n";
                }
            };
            add("disk", [&] { return interval_disk_in_lens(*lens, prec); });
            add("cot", [&] { return interval_cot(*lens, prec); });
            add("effective", [&] { return interval_effective(*lens, prec); });
            if (report) {
                try {
                    const BoundedReal a = union_angle(report->best.vertex, lens->v_tilde, n, prec);
                    lj["union_angle"] = bounded_json(a, places);
                    text << "  union angle: " << interval_text(a) << "\n";
                } catch (const DomainError& e) {
                    lj["union_angle"] = {{"error", e.what()}};
                    text << "  union angle: n/a (" << e.what() << ")\n";
                }
            }
            j["lens"] = lj;
        } else {
            j["lens"] = {{"note", la.note}};
            text << "lens: none (" << la.note << ")\n";
        }
    } else {
        j["lens"] = {{"note", "needs degree >= 3 and f(0) != 0"}};
        text << "lens: none (needs degree >= 3 and f(0) != 0)\n";
    }
    if (report) {
        const RegionDescriptor r = combined_region(report->best, lens, prec);
        ordered_json rj{{"shape", to_string(r.shape)}, {"ray_lo", decimal_up(r.ray_lo.upper(), places)}};
        text << "admissible m: ";
        if (r.interval && !r.interval->empty) {
            rj["interval"] = {{"lo", decimal_up(r.interval->lo.upper(), places)},
                              {"hi", decimal_down(r.interval->hi.lower(), places)}};
            text << admissible_text(*r.interval) << " U ";
        }
        text << "(" << decimal_up(r.ray_lo.upper(), 8) << ", oo)  [" << to_string(r.shape) << "]\n";
        j["combined_region"] = rj;
    }

    if (!cfg.plot.empty()) {
        if (!report) throw InputError("--plot needs degree >= 2");
        const RootSet roots = roots_numeric(f);
        std::ofstream out(cfg.plot);
        if (!out) throw InputError("cannot write " + cfg.plot);
        out << cli::render_svg(report->best, lens, roots, prec);
        text << "plot written to " << cfg.plot << "\n";
    }
    if (cfg.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return kOk;
}

std::vector<CriterionFamily> modes_of(const Config& cfg) {
    if (!cfg.criteria.empty()) {
        std::vector<CriterionFamily> out;
        std::stringstream ss(cfg.criteria);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto f = criterion_family_from_string(item);
            if (!f) throw InputError("unknown criterion family: " + item);
            out.push_back(*f);
        }
        if (out.empty()) throw InputError("--criteria is empty");
        return out;
    }
    if (cfg.prime_power) return {CriterionFamily::lens, CriterionFamily::prime_power, CriterionFamily::sector_pq};
    return {CriterionFamily::lens, CriterionFamily::sector_pq};
}

void print_certificate_text(const Certificate& c) {
    std::cout << "certified irreducible at m = " << c.m << " via " << c.criterion << " (" << c.branch << ")\n";
    std::cout << "  f(m) = " << c.witness.p;
    if (c.witness.k != 1) std::cout << "^" << c.witness.k;
    if (c.witness.q != 1) std::cout << " * " << c.witness.q;
    std::cout << ", " << to_string(c.primality_status) << " (" << c.primality_method << ")\n";
    if (c.witness.ell) std::cout << "  |f'(m)| = " << c.witness.p << "^" << *c.witness.ell << " * " << *c.witness.r
                                 << ", s = " << c.witness.s << "\n";
    for (const CheckRecord& k : c.checks)
        std::cout << "  check " << k.description << ": " << k.left << " vs " << k.right << ", margin " << k.margin
                  << "\n";
    if (c.conditional) std::cout << "  CONDITIONAL: primality is a strong probable-prime result\n";
}

int cmd_certify(const Config& cfg) {
    const Polynomial f = load_polynomial(cfg);
    if (cfg.m.empty() == cfg.search.empty()) throw InputError("give exactly one of --m and --search");
    SearchOptions so;
    so.certify.prec = precision(cfg);
    so.certify.q_max = parse_integer(cfg.q_max, "--q-max");
    if (so.certify.q_max < 1) throw InputError("--q-max must be >= 1");
    so.modes = modes_of(cfg);
    so.exhaustive = cfg.exhaustive;
    if (f.degree() < 2) throw InputError("certification needs degree >= 2");

    mpz_class lo, hi;
    if (!cfg.m.empty()) {
        const mpz_class m = parse_integer(cfg.m, "--m");
        if (m == 0) throw InputError("--m must be nonzero");
        so.negative_m = m < 0;
        lo = hi = abs(m);
    } else {
        const auto dots = cfg.search.find("..");
        if (dots == std::string::npos) throw InputError("--search expects LO..HI");
        lo = parse_integer(cfg.search.substr(0, dots), "--search");
        hi = parse_integer(cfg.search.substr(dots + 2), "--search");
        if (lo < 1 || lo > hi) throw InputError("--search needs 1 <= LO <= HI");
        so.negative_m = cfg.negative_m;
    }
    const SearchReport rep = search_m(f, lo, hi, so);

    if (cfg.json) {
        if (cfg.exhaustive) {
            ordered_json arr = ordered_json::array();
            for (const Certificate& c : rep.certificates) arr.push_back(c.to_json());
            std::cout << arr.dump(2) << "\n";
        } else if (rep.first()) {
            std::cout << rep.first()->to_json().dump(2) << "\n";
        } else {
            ordered_json j = ordered_json::array();
            for (const MOutcome& mo : rep.outcomes)
                j.push_back({{"m", mo.m.get_str()}, {"outcome", to_string(mo.outcome)}, {"reason", mo.reason}});
            std::cout << ordered_json{{"certified", false}, {"outcomes", j}}.dump(2) << "\n";
        }
    } else {
        for (const MOutcome& mo : rep.outcomes)
            if (mo.outcome != Outcome::certified)
                std::cout << "m = " << mo.m << ": " << to_string(mo.outcome) << " (" << mo.reason << ")\n";
        for (const Certificate& c : rep.certificates) print_certificate_text(c);
        if (!rep.first()) std::cout << "no certificate found\n";
    }
    return rep.first() ? kOk : kNoCertificate;
}

int cmd_scan(const Config& cfg) {
    nlohmann::json d;
    try {
        d = nlohmann::json::parse(read_file(cfg.path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid family descriptor: ") + e.what());
    }
    CertifyOptions opts;
    opts.prec = precision(cfg);
    const cli::ScanReport rep = cli::run_scan(d, opts);
    if (cfg.json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"instance", r.label},
                            {"polynomial", r.polynomial.to_expression()},
                            {"m", r.m.get_str()},
                            {"outcome", to_string(r.outcome)},
                            {"criterion", r.criterion},
                            {"reason", r.reason}});
        std::cout << ordered_json{{"family", rep.family},
                                  {"instances", rep.rows.size()},
                                  {"certified", rep.certified()},
                                  {"rows", rows}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& r : rep.rows) {
            std::cout << r.label << "  " << r.polynomial.to_expression() << "  m=" << r.m << "  "
                      << to_string(r.outcome);
            if (!r.criterion.empty()) std::cout << "  " << r.criterion;
            if (!r.reason.empty()) std::cout << "  (" << r.reason << ")";
            std::cout << "\n";
        }
        std::cout << rep.family << ": " << rep.certified() << " of " << rep.rows.size() << " certified\n";
    }
    return kOk;
}

int cmd_verify(const Config& cfg) {
    ordered_json j;
    try {
        j = ordered_json::parse(read_file(cfg.path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid certificate file: ") + e.what());
    }
    const Certificate c = Certificate::from_json(j);
    if (Certificate::from_json(c.to_json()).to_json() != c.to_json()) throw InputError("certificate does not round-trip");
    const VerifyResult r = certificate_verify(c);
    if (cfg.json)
        std::cout << ordered_json{{"valid", r.ok}, {"reason", r.reason}}.dump(2) << "\n";
    else
        std::cout << (r.ok ? "certificate verified" : "certificate rejected: " + r.reason) << "\n";
    return r.ok ? kOk : kNoCertificate;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-free regions and irreducibility certificates for integer polynomials"};
    app.require_subcommand(1);
    Config cfg;

    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("polynomial", cfg.expression, "Polynomial in X, e.g. \"X^4-10*X^3+2162\"");
        sub->add_option("--coeffs", cfg.coeffs, "Coefficients a0,a1,...,an");
        sub->add_option("--file", cfg.file, "File holding the polynomial");
        sub->add_option("--digits", cfg.digits, "Working precision in decimal digits (default ZEROFREE_DIGITS or 16)");
        sub->add_flag("--json", cfg.json, "JSON output");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Zero-free sectors, lens and admissible intervals");
    add_poly(analyze);
    analyze->add_option("--plot", cfg.plot, "Write an SVG of sector, lens and roots");

    CLI::App* certify = app.add_subcommand("certify", "Issue an irreducibility certificate");
    add_poly(certify);
    certify->add_option("--m", cfg.m, "Evaluation point");
    certify->add_option("--search", cfg.search, "Scan range LO..HI");
    certify->add_option("--q-max", cfg.q_max, "Largest cofactor q allowed in f(m) = p^k q");
    certify->add_flag("--prime-power", cfg.prime_power, "Try the prime-power criterion before the pq criterion");
    certify->add_option("--criteria", cfg.criteria, "Comma list of lens,sector_pq,prime_power,combined");
    certify->add_flag("--negative-m", cfg.negative_m, "Scan -LO..-HI instead");
    certify->add_flag("--exhaustive", cfg.exhaustive, "Keep scanning after the first certificate");

    CLI::App* scan = app.add_subcommand("scan", "Certify a family of polynomials");
    scan->add_option("descriptor", cfg.path, "Family descriptor (JSON)")->required();
    scan->add_option("--digits", cfg.digits, "Working precision in decimal digits");
    scan->add_flag("--json", cfg.json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "Replay a certificate");
    verify->add_option("certificate", cfg.path, "Certificate (JSON)")->required();
    verify->add_flag("--json", cfg.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*analyze) return cmd_analyze(cfg);
        if (*certify) return cmd_certify(cfg);
        if (*scan) return cmd_scan(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
