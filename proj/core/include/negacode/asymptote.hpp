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

#ifndef NEGACODE_ASYMPTOTE_HPP
#define NEGACODE_ASYMPTOTE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negacode/bigint.hpp"
#include "negacode/field.hpp"

namespace negacode {

/*
 * q-ary entropy H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x),
 * extended continuously to the endpoints: H_q(0) = 0, H_q((q-1)/q) = 1.
 * DomainError outside [0, (q-1)/q].
 */
double entropy_q(double x, uint64_t q);

/* The unique root of H_q(x) = 1/4 in (0, (q-1)/q), by bisection until
 * |H_q(x) - 1/4| <= tol.  Uniqueness comes from strict monotonicity. */
double gv_threshold(uint64_t q, double tol = 1e-9);

/* Same root from a caller-supplied bracket; DomainError unless
 * H_q(lo) < 1/4 < H_q(hi). */
double gv_threshold_bracketed(uint64_t q, double tol, double lo, double hi);

/* Exact number of q-ary words within Hamming distance radius of a fixed
 * word of length n; radius saturates at n. */
BigUint hamming_ball_volume(uint64_t q, uint64_t n, uint64_t radius);

struct ExponentComparison {
    double lhs = 0;
    double rhs = 0;
    bool strict = false;  // lhs < rhs beyond a 1e-6 slack, so that the
                          // threshold case reads as equality
};

struct CountingCheck {
    double delta = 0;
    double entropy = 0;  // H_q(delta)
    /* Codes covering some word of relative weight < delta, against all
     * q^n ring elements: n/2 + 2n H_q(delta) vs n in the exponent. */
    ExponentComparison covering;
    /* The same numerator against the self-dual census alone:
     * 2n H_q(delta) vs n/2. */
    ExponentComparison self_dual;
    BigUint total_codes;                      // q^n, exact
    std::optional<BigUint> self_dual_codes;   // census formula when it applies
};

/*
 * The two exponent comparisons behind the distance bound for the self-dual
 * family, with exact counts attached where the census formula applies.
 * Comparisons are on log_q scale; both become strict exactly when
 * H_q(delta) < 1/4, which is what makes gv_threshold the cutoff.
 */
CountingCheck gv_counting_check(const Field& f, uint64_t n, double delta);

struct FamilyRow {
    uint64_t q = 0;
    uint64_t n = 0;
    std::optional<BigUint> count_formula;
    std::optional<uint64_t> count_enumerated;
    std::optional<uint64_t> best_distance;   // largest minimum distance found
    std::optional<double> delta;             // best_distance / (2n)
    std::optional<double> entropy;           // H_q(delta) when in domain
    bool skipped = false;                    // enumeration or distance scan not run
    std::string note;
};

/*
 * One row per requested length: census size (formula and enumeration), the
 * best minimum distance over the census, and its entropy coordinates.  Rows
 * whose scans exceed the given budgets are marked skipped and the run
 * continues.
 */
std::vector<FamilyRow> family_report(const Field& f, const std::vector<uint64_t>& n_list,
                                     double enum_capacity = 1e7,
                                     double distance_capacity = 1e8);

/* Fixed-column CSV rendering: q,n,count_formula,count_enum,best_d,delta,
 * H_q_delta with empty cells for absent values. */
std::string family_report_csv(const std::vector<FamilyRow>& rows);

}  // namespace negacode

#endif
