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

#ifndef NEGACODE_FIELD_HPP
#define NEGACODE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "negacode/errors.hpp"

namespace negacode {

class Fe;

/*
 * Finite field F_q of odd characteristic, q = p^k.
 *
 * For k > 1 the field is realized as F_p[y]/(m) where m is the canonical
 * modulus: the monic irreducible of degree k over F_p whose coefficient
 * tuple (c_0, ..., c_{k-1}), read as the base-p integer c_0 + c_1 p + ...,
 * is smallest.  Every element is addressed by its index, the base-p value
 * of its coefficient tuple; indices therefore run over [0, q) and the
 * induced order is the canonical element order used for all deterministic
 * scans in this library.
 *
 * All arithmetic is exact.  Elements do not own a reference to their field;
 * the raw uint64_t entry points below are the hot path, the Fe wrapper adds
 * checked operator syntax on top.
 */
class Field {
  public:
    /* Throws DomainError unless p is an odd prime and p^k is representable. */
    explicit Field(uint64_t p, unsigned k = 1);

    uint64_t characteristic() const { return p_; }
    unsigned extension_degree() const { return k_; }
    uint64_t size() const { return q_; }

    /* Modulus coefficients over F_p, little-endian, length k+1, monic.
     * For k = 1 this is {0, 1}, i.e. the polynomial y. */
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    /* Two Field objects with equal (p, k) are interchangeable. */
    bool same(const Field& other) const { return p_ == other.p_ && k_ == other.k_; }

    /* Arithmetic on element indices.  Arguments must lie in [0, q). */
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t inv(uint64_t a) const;  // DivisionByZero on 0
    uint64_t pow(uint64_t a, uint64_t e) const;

    /* Conversion between indices and little-endian coefficient tuples. */
    std::vector<uint64_t> coeffs(uint64_t a) const;
    uint64_t from_coeffs(std::span<const uint64_t> c) const;

    Fe element(uint64_t index) const;
    Fe zero() const;
    Fe one() const;

  private:
    uint64_t mul_generic(uint64_t a, uint64_t b) const;

    uint64_t p_;
    unsigned k_;
    uint64_t q_;
    std::vector<uint64_t> modulus_;
    /* x^(k+i) mod modulus for i in [0, k-1), used by mul_generic. */
    std::vector<std::vector<uint64_t>> reduction_;
    /* Dense tables for small extension fields, empty otherwise. */
    std::vector<uint32_t> mul_table_;
    std::vector<uint32_t> add_table_;
    std::vector<uint32_t> inv_table_;
};

/*
 * Checked element wrapper.  Mixing elements of different fields throws
 * SpecMismatch.  An Fe must not outlive the Field it was created from.
 */
class Fe {
  public:
    Fe(const Field& f, uint64_t index);

    const Field& field() const { return *field_; }
    uint64_t index() const { return index_; }
    std::vector<uint64_t> coeffs() const { return field_->coeffs(index_); }
    bool is_zero() const { return index_ == 0; }

    friend Fe operator+(const Fe& a, const Fe& b);
    friend Fe operator-(const Fe& a, const Fe& b);
    friend Fe operator*(const Fe& a, const Fe& b);
    friend Fe operator/(const Fe& a, const Fe& b);
    Fe operator-() const;
    friend bool operator==(const Fe& a, const Fe& b);
    friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }
    friend bool operator<(const Fe& a, const Fe& b);

  private:
    const Field* field_;
    uint64_t index_;
};

Fe fe_pow(const Fe& a, uint64_t e);

/* Smallest square root of -1 in canonical element order, if one exists.
 * Exists exactly when q = 1 mod 4. */
std::optional<Fe> sqrt_minus_one(const Field& f);

/* All elements of multiplicative order exactly 2^k, sorted by index.
 * The result has 2^(k-1) entries when 2^k divides q-1 and is empty
 * otherwise (k >= 1). */
std::vector<Fe> primitive_two_power_roots(const Field& f, unsigned k);

/*
 * 2-adic shape of an odd integer q >= 3:
 *   q = 1 mod 4:  q = 2^(A+1) m + 1 with m odd (so A = v_2(q-1) - 1 >= 1),
 *   q = 3 mod 4:  q = 2^A m - 1 with m odd and A >= 2 (A = v_2(q+1)).
 * The branch decides which closed-form factorization of x^(2^nu)+1 applies.
 */
struct TwoAdicProfile {
    enum class Branch { one_mod_four, three_mod_four };
    uint64_t q;
    Branch branch;
    unsigned A;
    uint64_t m;
};

TwoAdicProfile two_adic_profile(uint64_t q);

/* Multiplicative order of odd q modulo a power of two >= 2. */
uint64_t order_mod_power_of_two(uint64_t q, uint64_t modulus);

}  // namespace negacode

#endif
