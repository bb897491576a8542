/*
 * Copyright 2026 the negacode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "negacode/asymptote.hpp"
#include "negacode/census.hpp"
#include "negacode/dncode.hpp"
#include "negacode/errors.hpp"
#include "negacode/field.hpp"
#include "negacode/negafactor.hpp"
#include "negacode/poly.hpp"

namespace negacode::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct PrimePower {
    uint64_t p;
    unsigned k;
};

PrimePower decompose_prime_power(uint64_t q) {
    if (q < 3 || q % 2 == 0) throw DomainError("q must be an odd prime power >= 3");
    uint64_t p = q;
    for (uint64_t d = 3; d * d <= q; d += 2) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned k = 0;
    uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw DomainError("q must be an odd prime power >= 3");
    return {p, k};
}

Field make_field(uint64_t q) {
    const PrimePower pp = decompose_prime_power(q);
    return Field(pp.p, pp.k);
}

double env_capacity(double fallback) {
    if (const char* s = std::getenv("NEGACODE_CAPACITY")) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && v > 0) return v;
    }
    return fallback;
}

std::vector<uint64_t> parse_coeff_list(const std::string& text) {
    std::vector<uint64_t> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t used = 0;
        unsigned long long v = 0;
        if (!item.empty()) {
            try {
                v = std::stoull(item, &used);
            } catch (...) {
                used = 0;
            }
        }
        if (used != item.size() || item.empty()) {
            throw DomainError("coefficient list must be comma-separated integers");
        }
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("coefficient list is empty");
    return out;
}

std::string join_coeffs(const std::vector<uint64_t>& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s;
}

ordered_json poly_record(const Poly& p) {
    ordered_json j;
    j["poly"] = p.str();
    j["degree"] = p.degree();
    j["coeffs"] = p.coeffs();
    return j;
}

ordered_json profile_record(const FactorizationProfile& profile) {
    ordered_json j;
    j["n"] = profile.n;
    j["has_x_plus_one"] = profile.has_x_plus_one;
    ordered_json selfrec = ordered_json::array();
    for (const auto& [g, d] : profile.self_reciprocal) {
        ordered_json rec = poly_record(g);
        rec["half_degree"] = d;
        selfrec.push_back(std::move(rec));
    }
    j["self_reciprocal"] = std::move(selfrec);
    ordered_json pairs = ordered_json::array();
    for (const auto& [h, hstar, e] : profile.pairs) {
        ordered_json rec;
        rec["poly"] = h.str();
        rec["coeffs"] = h.coeffs();
        rec["mate"] = hstar.str();
        rec["mate_coeffs"] = hstar.coeffs();
        rec["half_degree"] = e;
        pairs.push_back(std::move(rec));
    }
    j["pairs"] = std::move(pairs);
    j["s"] = profile.s();
    j["t"] = profile.t();
    return j;
}

ordered_json monomial_record(const Monomial& m) {
    ordered_json j;
    j["perm"] = m.perm();
    j["signs"] = m.signs();
    return j;
}

std::vector<std::vector<uint64_t>> enumerate_codes(const Field& f, uint64_t n,
                                                   const std::string& method, double capacity,
                                                   std::string* method_used) {
    const double brute_work =
        std::pow(static_cast<double>(f.size()), static_cast<double>(n));
    if (method == "brute" || (method == "auto" && brute_work <= capacity)) {
        *method_used = "brute";
        return enumerate_self_dual_bruteforce(f, n, capacity);
    }
    CrtEnumeration crt = enumerate_self_dual_crt(f, n, capacity);
    *method_used = crt.fallback_used ? "crt+fallback" : "crt";
    return crt.elements;
}

int cmd_factor(std::ostream& out, uint64_t q, uint64_t n, const std::string& method,
               uint64_t seed, const std::string& format) {
    const Field f = make_field(q);
    std::vector<Poly> factors;
    std::optional<bool> agreement;
    if (method == "closed") {
        factors = factor_xn_plus_one_closed(f, n);
    } else if (method == "generic") {
        factors = factor_xn_plus_one(f, n, seed);
    } else {
        std::vector<Poly> closed = factor_xn_plus_one_closed(f, n);
        std::vector<Poly> generic = factor_xn_plus_one(f, n, seed);
        agreement = (closed == generic);
        factors = std::move(closed);
    }
    const FactorizationProfile profile = profile_of(factors, n);
    if (format == "text") {
        out << "x^" << n << " + 1 over F_" << q << " = product of " << factors.size()
            << " irreducible factor(s)\n";
        for (const Poly& p : factors) out << "  " << p.str() << "\n";
        out << "self-reciprocal factors: " << profile.s()
            << ", reciprocal pairs: " << profile.t() << "\n";
        if (agreement) {
            out << "closed form agrees with generic factorization: "
                << (*agreement ? "yes" : "no") << "\n";
        }
    } else {
        ordered_json doc;
        doc["command"] = "factor";
        doc["q"] = q;
        doc["n"] = n;
        doc["method"] = method;
        ordered_json fs = ordered_json::array();
        for (const Poly& p : factors) fs.push_back(poly_record(p));
        doc["factors"] = std::move(fs);
        doc["profile"] = profile_record(profile);
        if (agreement) doc["agreement"] = *agreement;
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_census(std::ostream& out, std::ostream& err, uint64_t q, uint64_t n,
               const std::string& method, double capacity, uint64_t seed,
               const std::string& format) {
    const Field f = make_field(q);
    const FactorizationProfile profile = profile_of(factor_xn_plus_one(f, n, seed), n);
    // The counting formula needs a square root of -1 for odd n; the
    // enumeration itself does not, so keep going and report the count as
    // unavailable (the census is then empty).
    std::optional<BigUint> formula;
    std::string formula_note;
    try {
        formula = count_self_dual(profile);
    } catch (const HypothesisUnmet& e) {
        formula_note = e.what();
    }
    std::string method_used;
    const std::vector<std::vector<uint64_t>> codes =
        enumerate_codes(f, n, method, capacity, &method_used);
    const bool agree = formula && formula->fits_u64() && formula->to_u64() == codes.size();
    if (format == "text") {
        out << "census q=" << q << " n=" << n << ": " << codes.size()
            << " self-dual code(s), formula count " << (formula ? formula->str() : "n/a")
            << (agree ? " (agreement)" : formula ? " (MISMATCH)" : "") << ", method "
            << method_used << "\n";
        for (const auto& a : codes) out << "  a = " << join_coeffs(a) << "\n";
    } else {
        for (const auto& a : codes) {
            ordered_json rec;
            rec["q"] = q;
            rec["n"] = n;
            rec["a"] = a;
            rec["self_dual"] = true;
            out << rec.dump() << "\n";
        }
        ordered_json summary;
        summary["summary"] = true;
        summary["q"] = q;
        summary["n"] = n;
        summary["count_formula"] = formula ? ordered_json(formula->str()) : ordered_json();
        summary["count_enumerated"] = codes.size();
        summary["method"] = method_used;
        summary["agreement"] = agree;
        out << summary.dump() << "\n";
    }
    if (!formula) {
        err << "error: " << formula_note << "\n";
        return 2;
    }
    return 0;
}

int cmd_search(std::ostream& out, uint64_t q, uint64_t n, const std::string& method,
               double capacity, double distance_capacity, uint64_t seed,
               const std::string& format) {
    const Field f = make_field(q);
    const FactorizationProfile profile = profile_of(factor_xn_plus_one(f, n, seed), n);
    const BigUint formula = count_self_dual(profile);
    std::string method_used;
    const std::vector<std::vector<uint64_t>> codes =
        enumerate_codes(f, n, method, capacity, &method_used);
    DistanceOptions options;
    options.capacity = distance_capacity;
    std::vector<std::pair<uint64_t, std::vector<uint64_t>>> scored;
    scored.reserve(codes.size());
    for (const auto& a : codes) {
        scored.emplace_back(min_distance(DNCode(f, a), options), a);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    if (format == "text") {
        out << "search q=" << q << " n=" << n << ": " << scored.size()
            << " self-dual code(s), formula count " << formula.str() << "\n";
        for (const auto& [d, a] : scored) {
            out << "  d = " << d << "  a = " << join_coeffs(a) << "\n";
        }
    } else {
        for (const auto& [d, a] : scored) {
            ordered_json rec;
            rec["q"] = q;
            rec["n"] = n;
            rec["a"] = a;
            rec["d"] = d;
            out << rec.dump() << "\n";
        }
        ordered_json summary;
        summary["summary"] = true;
        summary["q"] = q;
        summary["n"] = n;
        summary["count"] = scored.size();
        if (!scored.empty()) summary["best_d"] = scored.front().first;
        out << summary.dump() << "\n";
    }
    return 0;
}

int cmd_check(std::ostream& out, std::ostream& err, uint64_t q, uint64_t n,
              const std::string& coeff_text, bool dihedral, double distance_capacity,
              const std::string& format) {
    const Field f = make_field(q);
    std::vector<uint64_t> a = parse_coeff_list(coeff_text);
    if (a.size() != n) throw DomainError("--a must list exactly n coefficients");
    const DNCode code(f, std::move(a));
    const bool self_dual = is_self_dual(code);
    DistanceOptions options;
    options.capacity = distance_capacity;
    const uint64_t d = min_distance(code, options);
    const std::vector<uint64_t> weights = weight_enumerator(code, distance_capacity);

    // The verdict document is still emitted when the witness preconditions
    // fail; only the exit status reports the unmet hypothesis.
    std::optional<WitnessResult> witness;
    std::string witness_blocked;
    if (dihedral) {
        try {
            witness = consta_dihedral_witness(code);
        } catch (const HypothesisUnmet& e) {
            witness_blocked = e.what();
        } catch (const UnsupportedShape& e) {
            witness_blocked = e.what();
        }
    }

    if (format == "text") {
        out << "check q=" << q << " n=" << n << " a=" << join_coeffs(code.ring_element())
            << ": self_dual = " << (self_dual ? "true" : "false") << ", d = " << d << "\n";
        out << "weight enumerator:";
        for (uint64_t w : weights) out << " " << w;
        out << "\n";
        if (witness) {
            if (witness->ok()) {
                out << "dihedral witness: ok, relation scalar "
                    << witness->witness->relation_scalar << ", permutation group order "
                    << witness->witness->permutation_group_order << "\n";
            } else {
                out << "dihedral witness: failed (" << witness->failure << ")\n";
            }
        } else if (dihedral) {
            out << "dihedral witness: unavailable (" << witness_blocked << ")\n";
        }
    } else {
        ordered_json doc;
        doc["command"] = "check";
        doc["q"] = q;
        doc["n"] = n;
        doc["a"] = code.ring_element();
        doc["self_dual"] = self_dual;
        doc["d"] = d;
        doc["weight_enumerator"] = weights;
        if (witness) {
            ordered_json w;
            w["ok"] = witness->ok();
            if (witness->ok()) {
                w["relation_scalar"] = witness->witness->relation_scalar;
                w["permutation_group_order"] = witness->witness->permutation_group_order;
                w["tau"] = monomial_record(witness->witness->tau);
                w["sigma"] = monomial_record(witness->witness->sigma);
            } else {
                w["failure"] = witness->failure;
            }
            doc["witness"] = std::move(w);
        } else if (dihedral) {
            ordered_json w;
            w["ok"] = false;
            w["failure"] = witness_blocked;
            doc["witness"] = std::move(w);
        }
        out << doc.dump(2) << "\n";
    }
    if (!witness_blocked.empty()) {
        err << "error: " << witness_blocked << "\n";
        return 2;
    }
    return 0;
}

int cmd_bound(std::ostream& out, uint64_t q, double tol, const std::string& format) {
    decompose_prime_power(q);  // reject even or composite-non-power sizes
    const double delta = gv_threshold(q, tol);
    const double h = entropy_q(delta, q);
    if (format == "text") {
        out << "delta* for q=" << q << " is " << delta << " (entropy " << h << ", tolerance "
            << tol << ")\n";
    } else {
        ordered_json doc;
        doc["command"] = "bound";
        doc["q"] = q;
        doc["tol"] = tol;
        doc["delta_star"] = delta;
        doc["entropy"] = h;
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_report(std::ostream& out, uint64_t q, const std::vector<uint64_t>& n_list,
               double capacity, double distance_capacity, const std::string& format) {
    const Field f = make_field(q);
    const std::vector<FamilyRow> rows = family_report(f, n_list, capacity, distance_capacity);
    if (format == "json") {
        ordered_json doc;
        doc["command"] = "report";
        doc["q"] = q;
        ordered_json arr = ordered_json::array();
        for (const FamilyRow& row : rows) {
            ordered_json r;
            r["q"] = row.q;
            r["n"] = row.n;
            r["count_formula"] =
                row.count_formula ? ordered_json(row.count_formula->str()) : ordered_json();
            r["count_enum"] =
                row.count_enumerated ? ordered_json(*row.count_enumerated) : ordered_json();
            r["best_d"] = row.best_distance ? ordered_json(*row.best_distance) : ordered_json();
            r["delta"] = row.delta ? ordered_json(*row.delta) : ordered_json();
            r["H_q_delta"] = row.entropy ? ordered_json(*row.entropy) : ordered_json();
            r["skipped"] = row.skipped;
            if (!row.note.empty()) r["note"] = row.note;
            arr.push_back(std::move(r));
        }
        doc["rows"] = std::move(arr);
        out << doc.dump(2) << "\n";
    } else {
        out << family_report_csv(rows);
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for self-dual double negacirculant codes over odd fields"};
    app.require_subcommand(1);

    uint64_t q = 0;
    uint64_t n = 0;
    double capacity = env_capacity(1e7);
    double distance_capacity = env_capacity(1e8);
    uint64_t seed = 0;
    std::string format;
    std::string factor_method = "generic";
    std::string census_method = "auto";
    std::string coeff_text;
    bool dihedral = false;
    double tol = 1e-9;
    std::vector<uint64_t> n_list;

    CLI::App* factor = app.add_subcommand("factor", "factor x^n + 1 into irreducibles over F_q");
    factor->add_option("--q", q, "odd prime power field size")->required();
    factor->add_option("--n", n, "exponent of x^n + 1")->required();
    factor->add_option("--method", factor_method, "closed|generic|both")
        ->check(CLI::IsMember({"closed", "generic", "both"}))
        ->capture_default_str();
    factor->add_option("--seed", seed, "seed for the generic factorizer")->capture_default_str();
    factor->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* census = app.add_subcommand("census", "enumerate all self-dual codes of length 2n");
    census->add_option("--q", q, "odd prime power field size")->required();
    census->add_option("--n", n, "half the code length")->required();
    census->add_option("--method", census_method, "auto|brute|crt")
        ->check(CLI::IsMember({"auto", "brute", "crt"}))
        ->capture_default_str();
    census->add_option("--capacity", capacity, "enumeration work ceiling")->capture_default_str();
    census->add_option("--seed", seed, "seed for the generic factorizer")->capture_default_str();
    census->add_option("--format", format, "jsonl|text")
        ->check(CLI::IsMember({"jsonl", "text"}));

    CLI::App* search =
        app.add_subcommand("search", "census ordered by minimum distance, best first");
    search->add_option("--q", q, "odd prime power field size")->required();
    search->add_option("--n", n, "half the code length")->required();
    search->add_option("--method", census_method, "auto|brute|crt")
        ->check(CLI::IsMember({"auto", "brute", "crt"}))
        ->capture_default_str();
    search->add_option("--capacity", capacity, "enumeration work ceiling")->capture_default_str();
    search->add_option("--distance-capacity", distance_capacity, "distance scan work ceiling")
        ->capture_default_str();
    search->add_option("--seed", seed, "seed for the generic factorizer")->capture_default_str();
    search->add_option("--format", format, "jsonl|text")
        ->check(CLI::IsMember({"jsonl", "text"}));

    CLI::App* check = app.add_subcommand("check", "verify one code given its defining element");
    check->add_option("--q", q, "odd prime power field size")->required();
    check->add_option("--n", n, "half the code length")->required();
    check->add_option("--a", coeff_text, "comma-separated coefficients of a, constant first")
        ->required();
    check->add_flag("--dihedral", dihedral, "also compute the dihedral symmetry witness");
    check->add_option("--distance-capacity", distance_capacity, "distance scan work ceiling")
        ->capture_default_str();
    check->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* bound = app.add_subcommand("bound", "entropy threshold H_q(delta) = 1/4");
    bound->add_option("--q", q, "odd prime power field size")->required();
    bound->add_option("--tol", tol, "bisection tolerance")->capture_default_str();
    bound->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* report = app.add_subcommand("report", "family table over a list of lengths");
    report->add_option("--q", q, "odd prime power field size")->required();
    report->add_option("--n-list", n_list, "comma-separated lengths")
        ->required()
        ->delimiter(',');
    report->add_option("--capacity", capacity, "enumeration work ceiling")->capture_default_str();
    report->add_option("--distance-capacity", distance_capacity, "distance scan work ceiling")
        ->capture_default_str();
    report->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(factor)) {
            return cmd_factor(out, q, n, factor_method, seed,
                              format.empty() ? "json" : format);
        }
        if (app.got_subcommand(census)) {
            return cmd_census(out, err, q, n, census_method, capacity, seed,
                              format.empty() ? "jsonl" : format);
        }
        if (app.got_subcommand(search)) {
            return cmd_search(out, q, n, census_method, capacity, distance_capacity, seed,
                              format.empty() ? "jsonl" : format);
        }
        if (app.got_subcommand(check)) {
            return cmd_check(out, err, q, n, coeff_text, dihedral, distance_capacity,
                             format.empty() ? "json" : format);
        }
        if (app.got_subcommand(bound)) {
            return cmd_bound(out, q, tol, format.empty() ? "json" : format);
        }
        if (app.got_subcommand(report)) {
            return cmd_report(out, q, n_list, capacity, distance_capacity,
                              format.empty() ? "csv" : format);
        }
        err << "error: no subcommand given\n";
        return 1;
    } catch (const HypothesisUnmet& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace negacode::cli
