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

#ifndef NEGACODE_DNCODE_HPP
#define NEGACODE_DNCODE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "negacode/field.hpp"

namespace negacode {

/* (v_0, ..., v_{n-1}) -> (-v_{n-1}, v_0, ..., v_{n-2}), i.e. multiplication
 * by x in F_q[x]/(x^n + 1). */
std::vector<uint64_t> negashift(const Field& f, std::span<const uint64_t> v);

/*
 * Double negacirculant code with generator matrix (I | A), where A is the
 * negacirculant matrix of the ring element a: row i of A holds the
 * coefficients of x^i a in F_q[x]/(x^n + 1).  The code is [2n, n] with rate
 * exactly 1/2.  Requires gcd(n, q) = 1 so that x^n + 1 is squarefree.
 */
class DNCode {
  public:
    DNCode(const Field& f, std::vector<uint64_t> a);

    const Field& field() const { return *field_; }
    uint64_t block_length() const { return n_; }  // half the code length
    const std::vector<uint64_t>& ring_element() const { return a_; }
    uint64_t mat(size_t row, size_t col) const { return matrix_[row * n_ + col]; }
    std::span<const uint64_t> row(size_t r) const {
        return {matrix_.data() + r * n_, n_};
    }
    /* Row i of the full generator matrix (I | A), length 2n. */
    std::vector<uint64_t> generator_row(size_t i) const;

  private:
    const Field* field_;
    uint64_t n_;
    std::vector<uint64_t> a_;
    std::vector<uint64_t> matrix_;  // row-major n x n
};

/* Ground truth for self-duality: A A^T = -I as a matrix identity. */
bool is_self_dual(const DNCode& code);

/* Membership of a length-2n word: u = (c, d) lies in the code iff d = c A. */
bool contains(const DNCode& code, std::span<const uint64_t> u);

struct DistanceOptions {
    /* Budget in codeword-symbol operations; the scan costs about n q^n. */
    double capacity = 1e8;
    /* Stop once a nonzero codeword of weight <= early_exit is found; the
     * returned value is then only certified as an upper bound. */
    std::optional<uint64_t> early_exit;
};

/*
 * Exact minimum Hamming weight by exhaustive message enumeration.  Messages
 * are visited in reflected mixed-radix Gray order so each step changes one
 * message symbol and updates the codeword in O(n).
 */
uint64_t min_distance(const DNCode& code, const DistanceOptions& options = {});

/* Full weight distribution W[0..2n], W[w] = number of codewords of weight w. */
std::vector<uint64_t> weight_enumerator(const DNCode& code, double capacity = 1e8);

/*
 * Monomial matrix: exactly one nonzero entry per row and column.  Acts on
 * row vectors from the right: (v M)_{perm[i]} = v_i sign_i.
 */
class Monomial {
  public:
    Monomial(const Field& f, std::vector<size_t> perm, std::vector<uint64_t> signs);

    static Monomial identity(const Field& f, size_t size);

    const Field& field() const { return *field_; }
    size_t size() const { return perm_.size(); }
    const std::vector<size_t>& perm() const { return perm_; }
    const std::vector<uint64_t>& signs() const { return sign_; }

    std::vector<uint64_t> apply(std::span<const uint64_t> v) const;
    /* Matrix product; applying the result equals applying *this, then rhs. */
    Monomial compose(const Monomial& rhs) const;
    Monomial inverse() const;
    Monomial scaled(uint64_t c) const;
    bool operator==(const Monomial& rhs) const;
    /* c with *this = c * other, if such a scalar exists. */
    std::optional<uint64_t> scalar_ratio(const Monomial& other) const;

  private:
    const Field* field_;
    std::vector<size_t> perm_;
    std::vector<uint64_t> sign_;
};

/*
 * Monomial P with P A P = A^T for every n x n negacirculant A (n odd):
 * coordinate 0 is fixed with sign +1, coordinate i maps to n - i with sign
 * -1.  The sign is forced: +1 fails already for generic A.  The identity is
 * re-verified on a deterministic sample of negacirculants before returning.
 * Even n raises UnsupportedShape; n = 1 gives the trivial identity.
 */
Monomial transpose_conjugator(const Field& f, uint64_t n);

/* Simultaneous negashift of both halves of a length-2n vector. */
Monomial double_negashift(const Field& f, uint64_t n);

/* s(x, y) = (y, -x) on half-blocks; note s^2 = -I, not I. */
Monomial antiswap(const Field& f, uint64_t n);

struct DihedralWitness {
    Monomial tau;    // double negashift, order 2n (tau^n = -I)
    Monomial sigma;  // antiswap followed by the per-half conjugator
    int relation_scalar;  // sigma tau sigma^(-1) = relation_scalar * tau^(-1)
    uint64_t permutation_group_order;  // of <perm(tau), perm(sigma)>, equals 2n
};

struct WitnessResult {
    std::optional<DihedralWitness> witness;
    std::string failure;  // first failed check when witness is absent
    bool ok() const { return witness.has_value(); }
};

/*
 * Exhibits the code as invariant under a group whose permutation part is
 * dihedral of order 2n, acting monomially.  Requires odd n >= 3
 * (UnsupportedShape) and a self-dual code (HypothesisUnmet).  All claimed
 * properties are checked computationally; the first failure, if any, is
 * reported instead of a witness.
 */
WitnessResult consta_dihedral_witness(const DNCode& code);

}  // namespace negacode

#endif
