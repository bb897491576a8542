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

#include "negacode/census.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "negacode/dncode.hpp"
#include "negacode/errors.hpp"
#include "negacode/poly.hpp"

namespace negacode {

BigUint count_self_dual(const FactorizationProfile& profile) {
    const Field& f = *profile.field;
    const uint64_t q = f.size();
    if (profile.n > (1ull << 20)) {
        throw CapacityError("count_self_dual: block length too large");
    }
    BigUint count(1);
    if (profile.n % 2 == 1) {
        if (!profile.has_x_plus_one) {
            throw MalformedFactorization("count_self_dual: odd length without the factor x + 1");
        }
        if (!sqrt_minus_one(f)) {
            throw HypothesisUnmet("count_self_dual: -1 is not a square in the field");
        }
        count = BigUint(2);
    }
    for (const auto& [g, d] : profile.self_reciprocal) {
        count *= BigUint(1) + BigUint::pow(q, d);
    }
    for (const auto& [h, hstar, e] : profile.pairs) {
        count *= BigUint::pow(q, e) - BigUint(1);
    }
    return count;
}

namespace {

void require_separable(const Field& f, uint64_t n, const char* who) {
    if (n == 0) throw DomainError(std::string(who) + ": zero length");
    if (n % f.characteristic() == 0) {
        throw NotSeparable(std::string(who) +
                           ": block length shares a factor with the field characteristic");
    }
}

void require_candidates(double candidates, double capacity, const char* who) {
    if (candidates > capacity) {
        throw CapacityError(std::string(who) + ": needs " + std::to_string(candidates) +
                            " candidates, capacity is " + std::to_string(capacity));
    }
}

/* Advances a little-endian base-q digit vector; false once it wraps to 0. */
bool next_tuple(std::vector<uint64_t>& digits, uint64_t q) {
    for (auto& d : digits) {
        if (++d < q) return true;
        d = 0;
    }
    return false;
}

struct PairSplit {
    Poly h, hstar;           // the reciprocal pair, h < hstar
    Poly lift_h, lift_star;  // CRT idempotents: lift_h = 1 mod h, 0 mod hstar
    Poly xinv_h, xinv_star;  // 1/x in each component
    uint64_t half_degree;
};

/* The census splits over R = K' x K'' only when x^n + 1 is exactly one
 * reciprocal pair of irreducibles. */
std::optional<PairSplit> make_pair_split(const Field& f, uint64_t n) {
    const FactorizationProfile profile = profile_of(factor_xn_plus_one(f, n), n);
    if (profile.has_x_plus_one || !profile.self_reciprocal.empty() || profile.pairs.size() != 1) {
        return std::nullopt;
    }
    const Poly& h = std::get<0>(profile.pairs[0]);
    const Poly& hstar = std::get<1>(profile.pairs[0]);
    const Poly whole = xn_plus_one(f, n);
    return PairSplit{h,
                     hstar,
                     (hstar * inv_mod(hstar % h, h)) % whole,
                     (h * inv_mod(h % hstar, hstar)) % whole,
                     inv_mod(Poly::x(f) % h, h),
                     inv_mod(Poly::x(f) % hstar, hstar),
                     std::get<2>(profile.pairs[0])};
}

/* The component paired with a' under the self-duality constraint:
 * a'' = t(1/x) in K'' where t = -1/a' in K'. */
Poly paired_component(const Field& f, const PairSplit& split, const Poly& a_prime) {
    const Poly t = inv_mod(a_prime, split.h).scaled(f.neg(1));
    return compose_mod(t, split.xinv_star, split.hstar);
}

Poly recombine(const PairSplit& split, const Poly& a_prime, const Poly& a_second,
               const Poly& whole) {
    return (a_prime * split.lift_h + a_second * split.lift_star) % whole;
}

std::vector<uint64_t> padded_coeffs(const Poly& p, uint64_t n) {
    std::vector<uint64_t> c = p.coeffs();
    c.resize(n, 0);
    return c;
}

}  // namespace

std::vector<std::vector<uint64_t>> enumerate_self_dual_bruteforce(const Field& f, uint64_t n,
                                                                  double capacity) {
    require_separable(f, n, "enumerate_self_dual_bruteforce");
    const uint64_t q = f.size();
    require_candidates(std::pow(static_cast<double>(q), static_cast<double>(n)), capacity,
                       "enumerate_self_dual_bruteforce");
    std::vector<std::vector<uint64_t>> found;
    std::vector<uint64_t> a(n, 0);
    while (next_tuple(a, q)) {
        if (is_self_dual(DNCode(f, a))) found.push_back(a);
    }
    std::sort(found.begin(), found.end());
    return found;
}

CrtEnumeration enumerate_self_dual_crt(const Field& f, uint64_t n, double capacity) {
    require_separable(f, n, "enumerate_self_dual_crt");
    const uint64_t q = f.size();
    const std::optional<PairSplit> split = make_pair_split(f, n);
    if (!split) {
        throw HypothesisUnmet(
            "enumerate_self_dual_crt: x^n + 1 is not a single reciprocal pair over this field");
    }
    require_candidates(
        std::pow(static_cast<double>(q), static_cast<double>(split->half_degree)), capacity,
        "enumerate_self_dual_crt");

    const Poly whole = xn_plus_one(f, n);
    CrtEnumeration result;
    uint64_t rejected = 0;
    std::vector<uint64_t> digits(split->half_degree, 0);
    while (next_tuple(digits, q)) {
        const Poly a_prime(f, digits);
        const Poly a_second = paired_component(f, *split, a_prime);
        const Poly a = recombine(*split, a_prime, a_second, whole);
        std::vector<uint64_t> coeffs = padded_coeffs(a, n);
        if (is_self_dual(DNCode(f, coeffs))) {
            result.elements.push_back(std::move(coeffs));
        } else {
            ++rejected;
        }
    }
    if (rejected > 0) {
        result.diagnostic = std::to_string(rejected) +
                            " candidate(s) failed matrix verification; using exhaustive scan";
        result.elements = enumerate_self_dual_bruteforce(f, n, capacity);
        result.fallback_used = true;
        return result;
    }
    std::sort(result.elements.begin(), result.elements.end());
    return result;
}

namespace {

void require_word(const Field& f, std::span<const uint64_t> u, const char* who) {
    if (u.empty() || u.size() % 2 != 0) {
        throw DomainError(std::string(who) + ": word length must be even and positive");
    }
    bool nonzero = false;
    for (uint64_t c : u) {
        if (c >= f.size()) throw DomainError(std::string(who) + ": coordinate out of range");
        nonzero |= (c != 0);
    }
    if (!nonzero) throw DomainError(std::string(who) + ": the zero word lies in every code");
}

/* Solutions a of c a = d in one field component: one if c != 0, none if
 * only d is nonzero, all q^deg elements if both vanish. */
uint64_t component_solution_count(const Poly& c, const Poly& d, uint64_t q, uint64_t degree) {
    if (!c.is_zero()) return 1;
    if (!d.is_zero()) return 0;
    uint64_t count = 1;
    for (uint64_t i = 0; i < degree; ++i) count *= q;
    return count;
}

}  // namespace

CoverCount cover_count_bruteforce(const Field& f, std::span<const uint64_t> u, double capacity) {
    require_word(f, u, "cover_count_bruteforce");
    const uint64_t n = u.size() / 2;
    require_separable(f, n, "cover_count_bruteforce");
    const uint64_t q = f.size();
    require_candidates(std::pow(static_cast<double>(q), static_cast<double>(n)), capacity,
                       "cover_count_bruteforce");
    CoverCount counts;
    std::vector<uint64_t> a(n, 0);
    for (;;) {
        const DNCode code(f, a);
        if (contains(code, u)) {
            ++counts.total;
            if (is_self_dual(code)) ++counts.self_dual;
        }
        if (!next_tuple(a, q)) break;
    }
    return counts;
}

CoverCount cover_count(const Field& f, std::span<const uint64_t> u, double capacity) {
    require_word(f, u, "cover_count");
    const uint64_t n = u.size() / 2;
    require_separable(f, n, "cover_count");
    const uint64_t q = f.size();
    const std::optional<PairSplit> split = make_pair_split(f, n);
    if (!split) return cover_count_bruteforce(f, u, capacity);

    const Poly head(f, std::vector<uint64_t>(u.begin(), u.begin() + n));
    const Poly tail(f, std::vector<uint64_t>(u.begin() + n, u.end()));
    const Poly c_h = head % split->h;
    const Poly d_h = tail % split->h;
    const Poly c_s = head % split->hstar;
    const Poly d_s = tail % split->hstar;

    CoverCount counts;
    counts.total = component_solution_count(c_h, d_h, q, split->half_degree) *
                   component_solution_count(c_s, d_s, q, split->half_degree);

    // Membership d = c a splits componentwise; self-duality forces the second
    // component once the first is fixed, so at most one self-dual code covers
    // u unless u vanishes in a whole component.
    if (!c_h.is_zero()) {
        const Poly a_prime = (d_h * inv_mod(c_h, split->h)) % split->h;
        if (!a_prime.is_zero()) {
            const Poly a_second = paired_component(f, *split, a_prime);
            const Poly residue = (c_s * a_second - d_s) % split->hstar;
            if (residue.is_zero()) counts.self_dual = 1;
        }
    } else if (d_h.is_zero()) {
        // No constraint in the first component; the second pins a'' alone.
        if (!c_s.is_zero()) {
            const Poly a_second = (d_s * inv_mod(c_s, split->hstar)) % split->hstar;
            // a'' ranges over all of K''* as a' does over K'*.
            if (!a_second.is_zero()) counts.self_dual = 1;
        }
        // c_s = d_s = 0 cannot happen here: u would be the zero word.
    }
    return counts;
}

}  // namespace negacode
