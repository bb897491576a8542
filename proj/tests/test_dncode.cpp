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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "negacode/census.hpp"
#include "negacode/dncode.hpp"
#include "negacode/errors.hpp"
#include "oracles.hpp"

using namespace negacode;
using oracles::TestRng;

namespace {

std::vector<uint64_t> random_vector(const Field& f, TestRng& rng, size_t n) {
    std::vector<uint64_t> v(n);
    for (auto& x : v) x = rng.below(f.size());
    return v;
}

Monomial random_monomial(const Field& f, TestRng& rng, size_t n) {
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<uint64_t> signs(n);
    for (auto& s : signs) s = 1 + rng.below(f.size() - 1);
    return Monomial(f, perm, signs);
}

}  // namespace

TEST_SUITE("dncode") {

TEST_CASE("negashift multiplies by x in the ambient ring") {
    const Field f(5);
    const std::vector<uint64_t> v = {1, 2, 3};
    CHECK(negashift(f, v) == std::vector<uint64_t>{2, 1, 2});
    // Against the ring oracle: shifting is multiplication by x.
    CHECK(negashift(f, v) == oracles::ring_mul(f, v, {0, 1, 0}));
    // 2n shifts return to the start; n shifts negate.
    std::vector<uint64_t> w = v;
    for (int i = 0; i < 3; ++i) w = negashift(f, w);
    CHECK(w == std::vector<uint64_t>{4, 3, 2});
    for (int i = 0; i < 3; ++i) w = negashift(f, w);
    CHECK(w == v);
}

TEST_CASE("matrix rows are iterated negashifts and match the index formula") {
    for (uint64_t q : {3ull, 5ull, 9ull}) {
        const Field f = (q == 9) ? Field(3, 2) : Field(q);
        TestRng rng(2000 + q);
        for (uint64_t n : {2ull, 4ull, 5ull, 7ull}) {
            if (n % f.characteristic() == 0) continue;
            const auto a = random_vector(f, rng, n);
            const DNCode code(f, a);
            CHECK(code.block_length() == n);
            std::vector<uint64_t> cur = a;
            for (size_t i = 0; i < n; ++i) {
                for (size_t j = 0; j < n; ++j) {
                    CHECK(code.mat(i, j) == cur[j]);
                    CHECK(code.mat(i, j) == oracles::negacirculant_entry(f, a, i, j));
                }
                cur = negashift(f, cur);
            }
            // Generator rows carry the identity block on the left.
            for (size_t i = 0; i < n; ++i) {
                const auto row = code.generator_row(i);
                REQUIRE(row.size() == 2 * n);
                for (size_t j = 0; j < n; ++j) {
                    CHECK(row[j] == (i == j ? 1 : 0));
                    CHECK(row[n + j] == code.mat(i, j));
                }
            }
        }
    }
}

TEST_CASE("constructor rejects inseparable and empty lengths") {
    const Field f3(3);
    CHECK_THROWS_AS(DNCode(f3, std::vector<uint64_t>(3, 1)), NotSeparable);
    CHECK_THROWS_AS(DNCode(f3, std::vector<uint64_t>(6, 1)), NotSeparable);
    CHECK_THROWS_AS(DNCode(f3, {}), DomainError);
    CHECK_THROWS_AS(DNCode(f3, {0, 3}), DomainError);  // 3 not an element of F_3
}

TEST_CASE("self-duality matches the polynomial criterion on full scans") {
    struct Shape {
        uint64_t q, n;
    };
    for (const Shape s : {Shape{3, 4}, Shape{5, 2}, Shape{7, 2}}) {
        const Field f(s.q);
        std::vector<uint64_t> a(s.n, 0);
        uint64_t matrix_count = 0;
        do {
            const DNCode code(f, a);
            const bool dual = is_self_dual(code);
            CHECK(dual == oracles::ring_self_dual(f, a));
            if (dual) ++matrix_count;
        } while (oracles::next_tuple(a, s.q));
        const auto profile = profile_of(factor_xn_plus_one(f, s.n), s.n);
        CHECK(matrix_count == count_self_dual(profile).to_u64());
    }
}

TEST_CASE("self-duality matches the polynomial criterion on random samples") {
    struct Shape {
        uint64_t q, n;
    };
    for (const Shape s : {Shape{3, 8}, Shape{13, 2}, Shape{9, 2}, Shape{5, 7}}) {
        const Field f = (s.q == 9) ? Field(3, 2) : Field(s.q);
        TestRng rng(31337 + s.q * 100 + s.n);
        for (int trial = 0; trial < 300; ++trial) {
            const auto a = random_vector(f, rng, s.n);
            CHECK(is_self_dual(DNCode(f, a)) == oracles::ring_self_dual(f, a));
        }
        // Also check a known-good element so the sample is not all negatives.
        const auto some = enumerate_self_dual_bruteforce(f, s.n == 8 ? 2 : s.n);
        if (!some.empty()) {
            CHECK(is_self_dual(DNCode(f, some.front())));
        }
    }
}

TEST_CASE("membership is row-space membership") {
    const Field f(3);
    const DNCode code(f, {1, 1});  // self-dual over F_3
    // All 9 codewords from the message space.
    std::vector<uint64_t> msg(2, 0);
    do {
        CHECK(contains(code, oracles::naive_codeword(f, {1, 1}, msg)));
    } while (oracles::next_tuple(msg, 3));
    CHECK_FALSE(contains(code, std::vector<uint64_t>{1, 0, 0, 0}));
    CHECK_FALSE(contains(code, std::vector<uint64_t>{0, 0, 0, 1}));
    CHECK_THROWS_AS(contains(code, std::vector<uint64_t>{1, 0, 0}), DomainError);
}

TEST_CASE("minimum distance and weight enumerator match naive scans") {
    struct Shape {
        uint64_t q, n;
    };
    for (const Shape s : {Shape{3, 2}, Shape{5, 2}, Shape{7, 2}, Shape{9, 2}}) {
        const Field f = (s.q == 9) ? Field(3, 2) : Field(s.q);
        std::vector<uint64_t> a(s.n, 0);
        do {
            if (std::all_of(a.begin(), a.end(), [](uint64_t x) { return x == 0; })) continue;
            const DNCode code(f, a);
            CHECK(min_distance(code) == oracles::naive_min_distance(f, a));
            CHECK(weight_enumerator(code) == oracles::naive_weight_profile(f, a));
        } while (oracles::next_tuple(a, s.q));
    }
    // Larger block, sampled.
    const Field f3(3);
    TestRng rng(555);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_vector(f3, rng, 4);
        if (std::all_of(a.begin(), a.end(), [](uint64_t x) { return x == 0; })) a[0] = 1;
        const DNCode code(f3, a);
        CHECK(min_distance(code) == oracles::naive_min_distance(f3, a));
        CHECK(weight_enumerator(code) == oracles::naive_weight_profile(f3, a));
    }
}

TEST_CASE("the smallest ternary instance is extremal") {
    const Field f(3);
    const DNCode code(f, {1, 1});
    REQUIRE(is_self_dual(code));
    CHECK(min_distance(code) == 3);
    CHECK(weight_enumerator(code) == std::vector<uint64_t>{1, 0, 0, 8, 0});
    // Meets the Singleton bound: d = 2n - n + 1 for [4, 2, 3].
    CHECK(min_distance(code) == code.block_length() + 1);
}

TEST_CASE("weight distribution sums to the codebook size") {
    const Field f(5);
    const DNCode code(f, {1, 2, 3});
    const auto w = weight_enumerator(code);
    REQUIRE(w.size() == 7);
    uint64_t total = 0;
    for (uint64_t c : w) total += c;
    CHECK(total == 125);
    CHECK(w[0] == 1);
    CHECK(w[1] == 0);
}

TEST_CASE("early exit certifies only an upper bound") {
    const Field f(3);
    const DNCode code(f, {1, 1});
    DistanceOptions opt;
    opt.early_exit = 4;
    CHECK(min_distance(code, opt) <= 4);
    opt.early_exit = 3;
    CHECK(min_distance(code, opt) == 3);
}

TEST_CASE("distance scans respect the capacity budget") {
    const Field f(5);
    const DNCode code(f, {1, 2, 3, 0, 0, 0, 1});  // 5^7 messages
    DistanceOptions opt;
    opt.capacity = 1000;
    CHECK_THROWS_AS(min_distance(code, opt), CapacityError);
    CHECK_THROWS_AS(weight_enumerator(code, 1000), CapacityError);
}

TEST_CASE("monomial action, composition, and inverse are consistent") {
    const Field f(5);
    TestRng rng(9001);
    for (int trial = 0; trial < 100; ++trial) {
        const size_t n = 2 + rng.below(5);
        const Monomial a = random_monomial(f, rng, n);
        const Monomial b = random_monomial(f, rng, n);
        const auto v = random_vector(f, rng, n);
        // Composition order: (a compose b) acts as a then b.
        CHECK(a.compose(b).apply(v) == b.apply(a.apply(v)));
        CHECK(a.compose(a.inverse()) == Monomial::identity(f, n));
        CHECK(a.inverse().compose(a) == Monomial::identity(f, n));
        CHECK(a.inverse().apply(a.apply(v)) == v);
        // Dense-matrix oracle: the action equals v * M.
        const auto m = oracles::dense_monomial(f, a.perm(), a.signs());
        std::vector<uint64_t> by_matrix(n, 0);
        for (size_t j = 0; j < n; ++j) {
            for (size_t i = 0; i < n; ++i) {
                by_matrix[j] = f.add(by_matrix[j], f.mul(v[i], m[i * n + j]));
            }
        }
        CHECK(a.apply(v) == by_matrix);
    }
}

TEST_CASE("monomial scaling and scalar ratio") {
    const Field f(5);
    TestRng rng(42);
    const Monomial a = random_monomial(f, rng, 4);
    const Monomial b = a.scaled(3);
    CHECK(a.scalar_ratio(b) == std::optional<uint64_t>{f.inv(3)});
    CHECK(b.scalar_ratio(a) == std::optional<uint64_t>{3});
    CHECK(a.scalar_ratio(a) == std::optional<uint64_t>{1});
    const Monomial c = random_monomial(f, rng, 4);
    if (!(c == a) && c.perm() != a.perm()) {
        CHECK_FALSE(a.scalar_ratio(c).has_value());
    }
    CHECK_THROWS_AS(a.scaled(0), DomainError);
}

TEST_CASE("monomial constructor validates shape") {
    const Field f(3);
    CHECK_THROWS_AS(Monomial(f, {0, 0}, {1, 1}), DomainError);   // not a permutation
    CHECK_THROWS_AS(Monomial(f, {0, 2}, {1, 1}), DomainError);   // out of range
    CHECK_THROWS_AS(Monomial(f, {0, 1}, {1, 0}), DomainError);   // zero sign
    CHECK_THROWS_AS(Monomial(f, {0, 1}, {1}), DomainError);      // length mismatch
}

TEST_CASE("transpose conjugation by the fixed monomial works for all odd n") {
    for (uint64_t q : {3ull, 5ull, 7ull, 13ull}) {
        const Field f(q);
        TestRng rng(7000 + q);
        for (uint64_t n : {1ull, 3ull, 5ull, 9ull}) {
            if (n % q == 0) continue;
            const Monomial p = transpose_conjugator(f, n);
            CHECK(p.compose(p) == Monomial::identity(f, n));
            for (int trial = 0; trial < 20; ++trial) {
                const auto a = random_vector(f, rng, n);
                const auto dense = oracles::dense_negacirculant(f, a);
                const auto pd = oracles::dense_monomial(f, p.perm(), p.signs());
                const auto lhs =
                    oracles::dense_matmul(f, oracles::dense_matmul(f, pd, dense, n), pd, n);
                CHECK(lhs == oracles::dense_transpose(dense, n));
            }
        }
        CHECK_THROWS_AS(transpose_conjugator(f, 4), UnsupportedShape);
        CHECK_THROWS_AS(transpose_conjugator(f, 0), DomainError);
    }
}

TEST_CASE("all-positive signs cannot conjugate to the transpose") {
    // The sign pattern in transpose_conjugator is forced: replacing the -1
    // signs with +1 breaks the identity for a generic negacirculant.
    const Field f(5);
    const uint64_t n = 3;
    const Monomial p = transpose_conjugator(f, n);
    std::vector<uint64_t> plain_signs(n, 1);
    const Monomial naked(f, p.perm(), plain_signs);
    const std::vector<uint64_t> a = {1, 2, 0};
    const auto dense = oracles::dense_negacirculant(f, a);
    const auto pd = oracles::dense_monomial(f, naked.perm(), naked.signs());
    const auto lhs = oracles::dense_matmul(f, oracles::dense_matmul(f, pd, dense, n), pd, n);
    CHECK(lhs != oracles::dense_transpose(dense, n));
}

TEST_CASE("double negashift has order 2n with tau^n = -I") {
    const Field f(5);
    const uint64_t n = 3;
    const Monomial tau = double_negashift(f, n);
    Monomial acc = Monomial::identity(f, 2 * n);
    for (uint64_t i = 0; i < n; ++i) acc = acc.compose(tau);
    CHECK(acc == Monomial::identity(f, 2 * n).scaled(f.neg(1)));
    for (uint64_t i = 0; i < n; ++i) acc = acc.compose(tau);
    CHECK(acc == Monomial::identity(f, 2 * n));
    // Acting on (c | d) negashifts both halves.
    const std::vector<uint64_t> v = {1, 2, 3, 4, 0, 2};
    const auto shifted = tau.apply(v);
    const std::vector<uint64_t> c = {1, 2, 3}, d = {4, 0, 2};
    const auto cs = negashift(f, c), ds = negashift(f, d);
    std::vector<uint64_t> expect = cs;
    expect.insert(expect.end(), ds.begin(), ds.end());
    CHECK(shifted == expect);
}

TEST_CASE("antiswap squares to minus identity") {
    const Field f(7);
    const Monomial s = antiswap(f, 2);
    const std::vector<uint64_t> v = {1, 2, 3, 4};
    CHECK(s.apply(v) == std::vector<uint64_t>{3, 4, 6, 5});  // (x,y) -> (y,-x)
    CHECK(s.compose(s) == Monomial::identity(f, 4).scaled(f.neg(1)));
}

TEST_CASE("every self-dual code in small censuses carries a dihedral witness") {
    struct Shape {
        uint64_t q, n;
        size_t expected;
    };
    for (const Shape s : {Shape{5, 3, 12}, Shape{13, 3, 24}}) {
        const Field f(s.q);
        const auto members = enumerate_self_dual_bruteforce(f, s.n);
        REQUIRE(members.size() == s.expected);
        for (const auto& a : members) {
            const DNCode code(f, a);
            const WitnessResult res = consta_dihedral_witness(code);
            CAPTURE(s.q);
            CAPTURE(a);
            REQUIRE(res.ok());
            const DihedralWitness& w = *res.witness;
            CHECK(w.permutation_group_order == 2 * s.n);
            CHECK((w.relation_scalar == 1 || w.relation_scalar == -1));
            // Invariance, rechecked here: each transformed generator row
            // stays inside the code.
            for (size_t i = 0; i < s.n; ++i) {
                const auto row = code.generator_row(i);
                CHECK(contains(code, w.tau.apply(row)));
                CHECK(contains(code, w.sigma.apply(row)));
            }
        }
    }
}

TEST_CASE("witness preconditions are enforced") {
    const Field f5(5);
    // Not self-dual.
    const DNCode bad(f5, {1, 0, 0});
    CHECK_FALSE(is_self_dual(bad));
    CHECK_THROWS_AS(consta_dihedral_witness(bad), HypothesisUnmet);
    // Even block length.
    const DNCode even(f5, {1, 2});
    CHECK_THROWS_AS(consta_dihedral_witness(even), UnsupportedShape);
    // Block length 1.
    const DNCode tiny(f5, {2});
    CHECK(is_self_dual(tiny));
    CHECK_THROWS_AS(consta_dihedral_witness(tiny), UnsupportedShape);
}

}  // TEST_SUITE
