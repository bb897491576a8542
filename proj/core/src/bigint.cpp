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

#include "negacode/bigint.hpp"

#include <algorithm>

#include "negacode/errors.hpp"

namespace negacode {

namespace {
constexpr uint64_t kBase = uint64_t{1} << 32;
}

BigUint::BigUint(uint64_t v) {
    digits_.push_back(static_cast<uint32_t>(v % kBase));
    if (v >= kBase) digits_.push_back(static_cast<uint32_t>(v / kBase));
}

BigUint BigUint::pow(uint64_t base, uint64_t exponent) {
    BigUint result{1};
    BigUint b{base};
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

void BigUint::trim() {
    while (digits_.size() > 1 && digits_.back() == 0) digits_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    const size_t n = std::max(digits_.size(), rhs.digits_.size());
    digits_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t sum = carry + digits_[i];
        if (i < rhs.digits_.size()) sum += rhs.digits_[i];
        digits_[i] = static_cast<uint32_t>(sum % kBase);
        carry = sum / kBase;
    }
    if (carry) digits_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) throw DomainError("BigUint subtraction would go negative");
    int64_t borrow = 0;
    for (size_t i = 0; i < digits_.size(); ++i) {
        int64_t diff = static_cast<int64_t>(digits_[i]) - borrow;
        if (i < rhs.digits_.size()) diff -= static_cast<int64_t>(rhs.digits_[i]);
        borrow = 0;
        if (diff < 0) {
            diff += static_cast<int64_t>(kBase);
            borrow = 1;
        }
        digits_[i] = static_cast<uint32_t>(diff);
    }
    trim();
    return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    std::vector<uint32_t> out(digits_.size() + rhs.digits_.size(), 0);
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] == 0) continue;
        uint64_t carry = 0;
        for (size_t j = 0; j < rhs.digits_.size(); ++j) {
            uint64_t cur = out[i + j] +
                           static_cast<uint64_t>(digits_[i]) * rhs.digits_[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        size_t k = i + rhs.digits_.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    digits_ = std::move(out);
    trim();
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (digits_.size() != rhs.digits_.size())
        return digits_.size() <=> rhs.digits_.size();
    for (size_t i = digits_.size(); i-- > 0;) {
        if (digits_[i] != rhs.digits_[i]) return digits_[i] <=> rhs.digits_[i];
    }
    return std::strong_ordering::equal;
}

bool BigUint::fits_u64() const { return digits_.size() <= 2; }

uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw DomainError("BigUint does not fit in 64 bits");
    uint64_t v = digits_[0];
    if (digits_.size() == 2) v |= static_cast<uint64_t>(digits_[1]) << 32;
    return v;
}

double BigUint::to_double() const {
    double v = 0.0;
    for (size_t i = digits_.size(); i-- > 0;) {
        v = v * static_cast<double>(kBase) + static_cast<double>(digits_[i]);
    }
    return v;
}

std::string BigUint::str() const {
    std::vector<uint32_t> work(digits_);
    std::string out;
    while (work.size() > 1 || work[0] != 0) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 10);
            rem = cur % 10;
        }
        out.push_back(static_cast<char>('0' + rem));
        while (work.size() > 1 && work.back() == 0) work.pop_back();
    }
    if (out.empty()) out = "0";
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace negacode
