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

#ifndef NEGACODE_CENSUS_HPP
#define NEGACODE_CENSUS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "negacode/bigint.hpp"
#include "negacode/field.hpp"
#include "negacode/negafactor.hpp"

namespace negacode {

/*
 * Number of ring elements a with a(x) a(1/x) = -1 in F_q[x]/(x^n + 1),
 * i.e. the number of self-dual double negacirculant codes of length 2n,
 * computed from the factorization profile alone.  Each self-reciprocal
 * factor of degree 2d_j contributes 1 + q^{d_j}, each reciprocal pair with
 * half-degree e_j contributes q^{e_j} - 1, and for odd n the factor x + 1
 * contributes the two square roots of -1, which must exist
 * (HypothesisUnmet otherwise).
 */
BigUint count_self_dual(const FactorizationProfile& profile);

/* All a with C_a self-dual, by exhaustive scan over the q^n ring elements.
 * Returned coefficient tuples are sorted lexicographically. */
std::vector<std::vector<uint64_t>> enumerate_self_dual_bruteforce(
    const Field& f, uint64_t n, double capacity = 1e7);

struct CrtEnumeration {
    std::vector<std::vector<uint64_t>> elements;  // sorted coefficient tuples
    bool fallback_used = false;
    std::string diagnostic;
};

/*
 * Same census via the splitting R = K' x K'' when x^n + 1 factors into a
 * single reciprocal pair (HypothesisUnmet otherwise): a' ranges over K'*,
 * the paired component is forced to (-1/a') transported through x -> 1/x,
 * and the two halves are recombined by the Chinese remainder theorem.
 * Every candidate is re-verified against the matrix criterion; if any
 * candidate fails, the exhaustive scan is used instead and the discrepancy
 * is reported in the diagnostic.
 */
CrtEnumeration enumerate_self_dual_crt(const Field& f, uint64_t n, double capacity = 1e7);

struct CoverCount {
    uint64_t total = 0;      // ring elements a with u in C_a
    uint64_t self_dual = 0;  // those whose C_a is additionally self-dual
};

/*
 * How many codes C_a = {(c, c a)} contain the fixed nonzero word u.
 * Counts by splitting the membership equation d = c a componentwise when
 * x^n + 1 is a single reciprocal pair, falling back to the exhaustive scan
 * otherwise.
 */
CoverCount cover_count(const Field& f, std::span<const uint64_t> u, double capacity = 1e7);

/* Independent exhaustive count over all q^n ring elements. */
CoverCount cover_count_bruteforce(const Field& f, std::span<const uint64_t> u,
                                  double capacity = 1e7);

}  // namespace negacode

#endif
