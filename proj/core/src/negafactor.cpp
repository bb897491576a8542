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

#include "negacode/negafactor.hpp"

#include <algorithm>

namespace negacode {

namespace {

bool is_power_of_two(uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2_exact(uint64_t n) {
    unsigned v = 0;
    while (n > 1) {
        n >>= 1;
        ++v;
    }
    return v;
}

void check_cardinality(size_t got, uint64_t expected, const char* what) {
    if (got != expected)
        throw TheoremViolation(std::string("unexpected number of ") + what);
}

}  // namespace

std::vector<Poly> factor_xn_plus_one_closed(const Field& F, uint64_t n) {
    if (n < 2 || !is_power_of_two(n))
        throw UnsupportedLength("closed form requires n a power of two >= 2");
    const unsigned nu = log2_exact(n);
    const TwoAdicProfile shape = two_adic_profile(F.size());
    std::vector<Poly> factors;

    if (shape.branch == TwoAdicProfile::Branch::three_mod_four) {
        const unsigned A = shape.A;
        if (nu < A) {
            const auto gammas = roots_in_field(dickson(F, uint64_t{1} << (nu - 1), 1));
            check_cardinality(gammas.size(), uint64_t{1} << (nu - 1),
                              "quadratic trinomial coefficients");
            for (uint64_t g : gammas) factors.push_back(Poly(F, {1, g, 1}));
        } else {
            const auto deltas =
                roots_in_field(dickson(F, uint64_t{1} << (A - 1), F.neg(1)));
            check_cardinality(deltas.size(), uint64_t{1} << (A - 1),
                              "trinomial coefficients");
            const uint64_t high = uint64_t{1} << (nu - A + 1);
            const uint64_t mid = uint64_t{1} << (nu - A);
            for (uint64_t d : deltas) {
                std::vector<uint64_t> c(high + 1, 0);
                c[0] = F.neg(1);
                c[mid] = d;
                c[high] = 1;
                factors.push_back(Poly(F, std::move(c)));
            }
        }
    } else {
        const unsigned A = shape.A;
        if (nu <= A) {
            const auto units = primitive_two_power_roots(F, nu + 1);
            check_cardinality(units.size(), uint64_t{1} << nu, "linear factor roots");
            for (const Fe& u : units) factors.push_back(Poly(F, {u.index(), 1}));
        } else {
            const auto units = primitive_two_power_roots(F, A + 1);
            check_cardinality(units.size(), uint64_t{1} << A, "binomial constants");
            const uint64_t high = uint64_t{1} << (nu - A);
            for (const Fe& u : units) {
                std::vector<uint64_t> c(high + 1, 0);
                c[0] = u.index();
                c[high] = 1;
                factors.push_back(Poly(F, std::move(c)));
            }
        }
    }

    std::sort(factors.begin(), factors.end());
    Poly product = Poly::constant(F, 1);
    for (const Poly& g : factors) product = product * g;
    if (product != xn_plus_one(F, n))
        throw TheoremViolation("closed-form product does not reconstruct x^n+1");
    return factors;
}

std::vector<Poly> FactorizationProfile::flatten() const {
    std::vector<Poly> out;
    if (has_x_plus_one) out.push_back(Poly(*field, {1, 1}));
    for (const auto& [g, d] : self_reciprocal) out.push_back(g);
    for (const auto& [h, hstar, e] : pairs) {
        out.push_back(h);
        out.push_back(hstar);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FactorizationProfile profile_of(const std::vector<Poly>& factors, uint64_t n) {
    if (factors.empty()) throw MalformedFactorization("empty factor list");
    const Field& F = factors.front().field();

    FactorizationProfile profile;
    profile.field = &F;
    profile.n = n;

    Poly product = Poly::constant(F, 1);
    for (const Poly& g : factors) {
        if (!g.field().same(F)) throw SpecMismatch("factors from different fields");
        if (!g.is_monic() || g.degree() < 1)
            throw MalformedFactorization("factors must be monic of positive degree");
        product = product * g;
    }
    if (product != xn_plus_one(F, n))
        throw MalformedFactorization("product does not equal x^n+1");

    const Poly x_plus_one(F, {1, 1});
    std::vector<Poly> work(factors);
    std::sort(work.begin(), work.end());
    std::vector<bool> used(work.size(), false);

    for (size_t i = 0; i < work.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const Poly& g = work[i];
        const Poly gstar = reciprocal(g);
        if (gstar == g) {
            if (g == x_plus_one) {
                profile.has_x_plus_one = true;
                continue;
            }
            if (g.degree() % 2 != 0)
                throw MalformedFactorization(
                    "odd-degree self-reciprocal factor other than x+1");
            profile.self_reciprocal.emplace_back(g, static_cast<uint64_t>(g.degree()) / 2);
            continue;
        }
        bool paired = false;
        for (size_t j = i + 1; j < work.size(); ++j) {
            if (!used[j] && work[j] == gstar) {
                used[j] = true;
                paired = true;
                break;
            }
        }
        if (!paired)
            throw MalformedFactorization("factor is missing its reciprocal partner");
        profile.pairs.emplace_back(std::min(g, gstar), std::max(g, gstar),
                                   static_cast<uint64_t>(g.degree()));
    }

    std::sort(profile.self_reciprocal.begin(), profile.self_reciprocal.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::sort(profile.pairs.begin(), profile.pairs.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    return profile;
}

}  // namespace negacode
