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

#ifndef NEGACODE_NEGAFACTOR_HPP
#define NEGACODE_NEGAFACTOR_HPP

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "negacode/poly.hpp"

namespace negacode {

/*
 * Closed-form factorization of x^n + 1 for n = 2^nu, driven by the 2-adic
 * shape of q.  Four cases:
 *
 *   q = 3 mod 4 (q = 2^A m - 1, A >= 2):
 *     nu <  A: 2^(nu-1) trinomials x^2 + g x + 1, g root of D_{2^(nu-1)}(x, 1)
 *     nu >= A: 2^(A-1) trinomials x^(2^(nu-A+1)) + d x^(2^(nu-A)) - 1,
 *              d root of D_{2^(A-1)}(x, -1)
 *   q = 1 mod 4 (q = 2^(A+1) m + 1, A >= 1):
 *     nu <= A: 2^nu linear factors x + u, u of multiplicative order 2^(nu+1)
 *     nu >  A: 2^A binomials x^(2^(nu-A)) + u, u of order 2^(A+1)
 *
 * The result is sorted canonically, each factor is monic irreducible, and
 * the product reconstructs x^n + 1 (violations raise TheoremViolation).
 * Lengths that are not powers of two raise UnsupportedLength; the generic
 * factorizer in poly.hpp covers those.
 */
std::vector<Poly> factor_xn_plus_one_closed(const Field& f, uint64_t n);

/*
 * Shape of a complete factorization of x^n + 1: the self-reciprocal
 * irreducible factors g_j (necessarily of even degree 2 d_j, except for
 * x + 1 which appears exactly when n is odd and is tracked by the flag)
 * and the reciprocal pairs (h_j, h_j*) of degree e_j each.
 */
struct FactorizationProfile {
    const Field* field = nullptr;
    uint64_t n = 0;
    bool has_x_plus_one = false;
    std::vector<std::pair<Poly, uint64_t>> self_reciprocal;   // (g_j, d_j)
    std::vector<std::tuple<Poly, Poly, uint64_t>> pairs;      // (h_j, h_j*, e_j)

    /* Number of self-reciprocal factors including x + 1 when present. */
    size_t s() const { return self_reciprocal.size() + (has_x_plus_one ? 1 : 0); }
    size_t t() const { return pairs.size(); }

    /* The factor multiset back as a sorted list. */
    std::vector<Poly> flatten() const;
};

/*
 * Classify a complete monic-irreducible factorization of x^n + 1.  Throws
 * MalformedFactorization when a factor lacks its reciprocal partner, an
 * odd-degree self-reciprocal factor other than x + 1 appears, or the
 * product does not reconstruct x^n + 1.
 */
FactorizationProfile profile_of(const std::vector<Poly>& factors, uint64_t n);

}  // namespace negacode

#endif
