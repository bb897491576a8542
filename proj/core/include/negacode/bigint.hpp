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

#ifndef NEGACODE_BIGINT_HPP
#define NEGACODE_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace negacode {

/*
 * Minimal arbitrary-precision unsigned integer.
 *
 * Code-counting formulas multiply terms like 1+q^d and q^e-1 whose product
 * overflows 64-bit (and even 128-bit) integers already at moderate n, so
 * exact counts are carried in this type.  Only the handful of operations
 * the counting paths need are provided.
 */
class BigUint {
  public:
    BigUint() : digits_{0} {}
    BigUint(uint64_t v);  // NOLINT: implicit by design, mirrors integer use

    static BigUint pow(uint64_t base, uint64_t exponent);

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
    BigUint& operator*=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
    friend BigUint operator-(BigUint lhs, const BigUint& rhs) { return lhs -= rhs; }
    friend BigUint operator*(BigUint lhs, const BigUint& rhs) { return lhs *= rhs; }

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const = default;

    bool is_zero() const { return digits_.size() == 1 && digits_[0] == 0; }
    bool fits_u64() const;
    uint64_t to_u64() const;  // DomainError if !fits_u64()
    double to_double() const;
    std::string str() const;

  private:
    void trim();

    /* Little-endian base 2^32 digits, at least one, no leading zero digit. */
    std::vector<uint32_t> digits_;
};

}  // namespace negacode

#endif
