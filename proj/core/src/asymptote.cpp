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

#include "negacode/asymptote.hpp"

#include <cmath>
#include <cstdio>

#include "negacode/census.hpp"
#include "negacode/dncode.hpp"
#include "negacode/errors.hpp"
#include "negacode/negafactor.hpp"
#include "negacode/poly.hpp"

namespace negacode {

double entropy_q(double x, uint64_t q) {
    if (q < 2) throw DomainError("entropy_q: base must be at least 2");
    const double limit = static_cast<double>(q - 1) / static_cast<double>(q);
    if (!(x >= 0.0) || x > limit) {
        throw DomainError("entropy_q: argument outside [0, (q-1)/q]");
    }
    if (x == 0.0) return 0.0;
    const double lq = std::log(static_cast<double>(q));
    double h = x * std::log(static_cast<double>(q - 1)) / lq - x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

namespace {

double bisect_entropy(uint64_t q, double tol, double lo, double hi) {
    double mid = lo;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double h = entropy_q(mid, q);
        if (std::fabs(h - 0.25) <= tol) return mid;
        if (h < 0.25) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw TheoremViolation("gv_threshold: bisection failed to reach tolerance");
}

}  // namespace

double gv_threshold(uint64_t q, double tol) {
    if (q < 3 || q % 2 == 0) throw DomainError("gv_threshold: q must be odd and at least 3");
    if (!(tol > 0)) throw DomainError("gv_threshold: tolerance must be positive");
    const double limit = static_cast<double>(q - 1) / static_cast<double>(q);
    return bisect_entropy(q, tol, 1e-15, limit * (1.0 - 1e-12));
}

double gv_threshold_bracketed(uint64_t q, double tol, double lo, double hi) {
    if (q < 3 || q % 2 == 0) throw DomainError("gv_threshold: q must be odd and at least 3");
    if (!(tol > 0)) throw DomainError("gv_threshold: tolerance must be positive");
    if (!(lo < hi) || entropy_q(lo, q) >= 0.25 || entropy_q(hi, q) <= 0.25) {
        throw DomainError("gv_threshold: bracket does not straddle the threshold");
    }
    return bisect_entropy(q, tol, lo, hi);
}

BigUint hamming_ball_volume(uint64_t q, uint64_t n, uint64_t radius) {
    if (q < 2) throw DomainError("hamming_ball_volume: base must be at least 2");
    if (n > 4096) throw CapacityError("hamming_ball_volume: length too large");
    if (radius > n) radius = n;
    // Pascal row n, computed exactly.
    std::vector<BigUint> binom{BigUint(1)};
    for (uint64_t row = 1; row <= n; ++row) {
        std::vector<BigUint> next(row + 1, BigUint(0));
        next[0] = BigUint(1);
        next[row] = BigUint(1);
        for (uint64_t i = 1; i < row; ++i) next[i] = binom[i - 1] + binom[i];
        binom = std::move(next);
    }
    BigUint volume(0);
    for (uint64_t i = 0; i <= radius; ++i) {
        volume += binom[i] * BigUint::pow(q - 1, i);
    }
    return volume;
}

namespace {

/* Slack keeps the comparison stable when the two exponents agree to within
 * bisection tolerance, as they do at the threshold itself. */
ExponentComparison compare_exponents(double lhs, double rhs) {
    return {lhs, rhs, lhs < rhs - 1e-6};
}

}  // namespace

CountingCheck gv_counting_check(const Field& f, uint64_t n, double delta) {
    if (n == 0) throw DomainError("gv_counting_check: zero length");
    const uint64_t q = f.size();
    CountingCheck check;
    check.delta = delta;
    check.entropy = entropy_q(delta, q);
    const double nn = static_cast<double>(n);
    check.covering = compare_exponents(nn / 2 + 2 * nn * check.entropy, nn);
    check.self_dual = compare_exponents(2 * nn * check.entropy, nn / 2);
    check.total_codes = BigUint::pow(q, n);
    try {
        check.self_dual_codes = count_self_dual(profile_of(factor_xn_plus_one(f, n), n));
    } catch (const HypothesisUnmet&) {
        // No square root of -1: the census formula does not apply.
    } catch (const NotSeparable&) {
        // x^n + 1 is not squarefree; the census is undefined.
    }
    return check;
}

std::vector<FamilyRow> family_report(const Field& f, const std::vector<uint64_t>& n_list,
                                     double enum_capacity, double distance_capacity) {
    const uint64_t q = f.size();
    std::vector<FamilyRow> rows;
    rows.reserve(n_list.size());
    for (uint64_t n : n_list) {
        FamilyRow row;
        row.q = q;
        row.n = n;
        if (n == 0 || n % f.characteristic() == 0) {
            row.skipped = true;
            row.note = "length shares a factor with the field characteristic";
            rows.push_back(std::move(row));
            continue;
        }
        try {
            row.count_formula = count_self_dual(profile_of(factor_xn_plus_one(f, n), n));
        } catch (const HypothesisUnmet& e) {
            row.note = e.what();
        }

        std::vector<std::vector<uint64_t>> census;
        bool enumerated = false;
        const double brute_work = std::pow(static_cast<double>(q), static_cast<double>(n));
        if (brute_work <= enum_capacity) {
            census = enumerate_self_dual_bruteforce(f, n, enum_capacity);
            enumerated = true;
        } else {
            try {
                census = enumerate_self_dual_crt(f, n, enum_capacity).elements;
                enumerated = true;
            } catch (const HypothesisUnmet&) {
            } catch (const CapacityError&) {
            }
        }
        if (!enumerated) {
            row.skipped = true;
            if (!row.note.empty()) row.note += "; ";
            row.note += "enumeration beyond capacity";
            rows.push_back(std::move(row));
            continue;
        }
        row.count_enumerated = census.size();

        if (!census.empty()) {
            uint64_t best = 0;
            bool distance_ok = true;
            for (const auto& a : census) {
                try {
                    DistanceOptions options;
                    options.capacity = distance_capacity;
                    best = std::max(best, min_distance(DNCode(f, a), options));
                } catch (const CapacityError&) {
                    distance_ok = false;
                    break;
                }
            }
            if (distance_ok) {
                row.best_distance = best;
                const double d = static_cast<double>(best) / (2.0 * static_cast<double>(n));
                row.delta = d;
                if (d <= static_cast<double>(q - 1) / static_cast<double>(q)) {
                    row.entropy = entropy_q(d, q);
                }
            } else {
                row.skipped = true;
                if (!row.note.empty()) row.note += "; ";
                row.note += "distance scan beyond capacity";
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string family_report_csv(const std::vector<FamilyRow>& rows) {
    std::string out = "q,n,count_formula,count_enum,best_d,delta,H_q_delta\n";
    for (const FamilyRow& row : rows) {
        out += std::to_string(row.q) + "," + std::to_string(row.n) + ",";
        if (row.count_formula) out += row.count_formula->str();
        out += ",";
        if (row.count_enumerated) out += std::to_string(*row.count_enumerated);
        out += ",";
        if (row.best_distance) out += std::to_string(*row.best_distance);
        out += ",";
        if (row.delta) out += format_double(*row.delta);
        out += ",";
        if (row.entropy) out += format_double(*row.entropy);
        out += "\n";
    }
    return out;
}

}  // namespace negacode
