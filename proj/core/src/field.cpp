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

#include "negacode/field.hpp"

#include <algorithm>
#include <string>

namespace negacode {

namespace {

constexpr uint64_t kMaxCharacteristic = (uint64_t{1} << 31) - 1;
constexpr uint64_t kMaxFieldSize = uint64_t{1} << 62;
constexpr uint64_t kScanCapacity = 1000000;
constexpr uint64_t kTableLimit = 512;

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/*
 * Dense polynomial helpers over the prime field F_p, used only to find the
 * canonical modulus during construction.  Representation: little-endian
 * coefficient vector without trailing zeros (zero polynomial is empty).
 */
using Pp = std::vector<uint64_t>;

void pp_trim(Pp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Pp pp_mul(const Pp& a, const Pp& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Pp out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    pp_trim(out);
    return out;
}

/* Remainder of a modulo monic f. */
Pp pp_mod(Pp a, const Pp& f, uint64_t p) {
    pp_trim(a);
    const size_t d = f.size() - 1;
    while (a.size() > d) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - d;
        if (lead != 0) {
            for (size_t i = 0; i < d; ++i) {
                uint64_t s = (lead * f[i]) % p;
                a[shift + i] = (a[shift + i] + p - s) % p;
            }
        }
        a.pop_back();
        pp_trim(a);
    }
    return a;
}

Pp pp_powmod(Pp base, uint64_t e, const Pp& f, uint64_t p) {
    Pp result{1};
    base = pp_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = pp_mod(pp_mul(result, base, p), f, p);
        base = pp_mod(pp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

Pp pp_gcd(Pp a, Pp b, uint64_t p) {
    while (!b.empty()) {
        Pp r = pp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        /* Make monic: multiply by lead^(p-2). */
        uint64_t inv = 1, base = a.back(), e = p - 2;
        while (e > 0) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

/* Rabin test: f monic of degree k is irreducible over F_p iff
 * y^(p^k) = y (mod f) and gcd(y^(p^(k/r)) - y, f) = 1 for prime r | k. */
bool pp_irreducible(const Pp& f, uint64_t p) {
    const size_t k = f.size() - 1;
    if (k == 0) return false;
    std::vector<size_t> prime_divisors;
    size_t rest = k;
    for (size_t r = 2; r * r <= rest; ++r) {
        if (rest % r == 0) {
            prime_divisors.push_back(r);
            while (rest % r == 0) rest /= r;
        }
    }
    if (rest > 1) prime_divisors.push_back(rest);

    /* frob[i] = y^(p^i) mod f, built by repeated p-th powers. */
    std::vector<Pp> frob(k + 1);
    frob[0] = Pp{0, 1};
    for (size_t i = 1; i <= k; ++i) frob[i] = pp_powmod(frob[i - 1], p, f, p);

    Pp xminus = frob[k];
    if (xminus.size() < 2) xminus.resize(2, 0);
    xminus[1] = (xminus[1] + p - 1) % p;
    pp_trim(xminus);
    if (!xminus.empty()) return false;

    for (size_t r : prime_divisors) {
        Pp g = frob[k / r];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        pp_trim(g);
        Pp common = pp_gcd(g, f, p);
        if (common.size() != 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(uint64_t p, unsigned k) : p_(p), k_(k) {
    if (p % 2 == 0) throw DomainError("field characteristic must be odd");
    if (p > kMaxCharacteristic || !is_prime(p))
        throw DomainError("field characteristic must be an odd prime");
    if (k == 0) throw DomainError("extension degree must be at least 1");

    q_ = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q_ > kMaxFieldSize / p) throw CapacityError("field size exceeds 2^62");
        q_ *= p;
    }

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        /* Canonical modulus: smallest coefficient tuple, base-p order. */
        bool found = false;
        for (uint64_t v = 0; v < q_; ++v) {
            Pp cand(k_ + 1, 0);
            uint64_t rest = v;
            for (unsigned i = 0; i < k_; ++i) {
                cand[i] = rest % p_;
                rest /= p_;
            }
            cand[k_] = 1;
            if (pp_irreducible(cand, p_)) {
                modulus_ = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found) throw TheoremViolation("no irreducible modulus found");

        /* reduction_[i] = y^(k+i) mod modulus, little-endian length k. */
        std::vector<uint64_t> cur(k_, 0);
        for (unsigned i = 0; i < k_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
        reduction_.push_back(cur);
        for (unsigned i = 1; i + 1 < k_; ++i) {
            std::vector<uint64_t> next(k_, 0);
            uint64_t overflow = cur[k_ - 1];
            for (unsigned j = k_ - 1; j > 0; --j) next[j] = cur[j - 1];
            next[0] = 0;
            if (overflow != 0) {
                for (unsigned j = 0; j < k_; ++j) {
                    next[j] = (next[j] + overflow * reduction_[0][j]) % p_;
                }
            }
            reduction_.push_back(next);
            cur = std::move(next);
        }

        if (q_ <= kTableLimit) {
            mul_table_.resize(q_ * q_);
            add_table_.resize(q_ * q_);
            for (uint64_t a = 0; a < q_; ++a) {
                auto da = coeffs(a);
                for (uint64_t b = 0; b < q_; ++b) {
                    mul_table_[a * q_ + b] = static_cast<uint32_t>(mul_generic(a, b));
                    auto db = coeffs(b);
                    uint64_t s = 0, scale = 1;
                    for (unsigned i = 0; i < k_; ++i) {
                        s += ((da[i] + db[i]) % p_) * scale;
                        scale *= p_;
                    }
                    add_table_[a * q_ + b] = static_cast<uint32_t>(s);
                }
            }
            inv_table_.assign(q_, 0);
            for (uint64_t a = 1; a < q_; ++a) {
                if (inv_table_[a] != 0) continue;
                for (uint64_t b = 1; b < q_; ++b) {
                    if (mul_table_[a * q_ + b] == 1) {
                        inv_table_[a] = static_cast<uint32_t>(b);
                        inv_table_[b] = static_cast<uint32_t>(a);
                        break;
                    }
                }
            }
        }
    }
}

std::vector<uint64_t> Field::coeffs(uint64_t a) const {
    std::vector<uint64_t> out(k_);
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

uint64_t Field::from_coeffs(std::span<const uint64_t> c) const {
    if (c.size() != k_) throw DomainError("coefficient tuple has wrong length");
    uint64_t v = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        if (c[i] >= p_) throw DomainError("coefficient out of range");
        v += c[i] * scale;
        scale *= p_;
    }
    return v;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
    if (k_ == 1) {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    uint64_t v = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        uint64_t s = (a % p_ + b % p_) % p_;
        v += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return v;
}

uint64_t Field::neg(uint64_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    uint64_t v = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        uint64_t d = a % p_;
        v += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return v;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const {
    if (k_ == 1) return a >= b ? a - b : a + p_ - b;
    return add(a, neg(b));
}

uint64_t Field::mul_generic(uint64_t a, uint64_t b) const {
    auto da = coeffs(a);
    auto db = coeffs(b);
    std::vector<uint64_t> conv(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) {
            conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
        }
    }
    for (unsigned t = 0; t + 1 < k_; ++t) {
        uint64_t c = conv[k_ + t];
        if (c == 0) continue;
        for (unsigned j = 0; j < k_; ++j) {
            conv[j] = (conv[j] + c * reduction_[t][j]) % p_;
        }
    }
    uint64_t v = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        v += conv[i] * scale;
        scale *= p_;
    }
    return v;
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    if (k_ == 1) return (a * b) % p_;
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_generic(a, b);
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
    uint64_t result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

Fe Field::element(uint64_t index) const { return Fe(*this, index); }
Fe Field::zero() const { return Fe(*this, 0); }
Fe Field::one() const { return Fe(*this, 1); }

Fe::Fe(const Field& f, uint64_t index) : field_(&f), index_(index) {
    if (index >= f.size()) throw DomainError("element index out of range");
}

namespace {
void require_same(const Fe& a, const Fe& b) {
    if (!a.field().same(b.field()))
        throw SpecMismatch("elements belong to different fields");
}
}  // namespace

Fe operator+(const Fe& a, const Fe& b) {
    require_same(a, b);
    return Fe(a.field(), a.field().add(a.index(), b.index()));
}

Fe operator-(const Fe& a, const Fe& b) {
    require_same(a, b);
    return Fe(a.field(), a.field().sub(a.index(), b.index()));
}

Fe operator*(const Fe& a, const Fe& b) {
    require_same(a, b);
    return Fe(a.field(), a.field().mul(a.index(), b.index()));
}

Fe operator/(const Fe& a, const Fe& b) {
    require_same(a, b);
    return Fe(a.field(), a.field().mul(a.index(), a.field().inv(b.index())));
}

Fe Fe::operator-() const { return Fe(*field_, field_->neg(index_)); }

bool operator==(const Fe& a, const Fe& b) {
    require_same(a, b);
    return a.index() == b.index();
}

bool operator<(const Fe& a, const Fe& b) {
    require_same(a, b);
    return a.index() < b.index();
}

Fe fe_pow(const Fe& a, uint64_t e) {
    return Fe(a.field(), a.field().pow(a.index(), e));
}

std::optional<Fe> sqrt_minus_one(const Field& f) {
    if (f.size() > kScanCapacity)
        throw CapacityError("field too large for element scan");
    const uint64_t minus_one = f.neg(1);
    for (uint64_t x = 0; x < f.size(); ++x) {
        if (f.mul(x, x) == minus_one) return f.element(x);
    }
    return std::nullopt;
}

std::vector<Fe> primitive_two_power_roots(const Field& f, unsigned k) {
    if (f.size() > kScanCapacity)
        throw CapacityError("field too large for element scan");
    if (k == 0) return {f.one()};
    if (k >= 63) return {};
    const uint64_t full = uint64_t{1} << k;
    const uint64_t half = full >> 1;
    if ((f.size() - 1) % full != 0) return {};
    std::vector<Fe> out;
    for (uint64_t x = 1; x < f.size(); ++x) {
        if (f.pow(x, full) == 1 && f.pow(x, half) != 1) out.push_back(f.element(x));
    }
    return out;
}

TwoAdicProfile two_adic_profile(uint64_t q) {
    if (q < 3 || q % 2 == 0) throw DomainError("profile requires odd q >= 3");
    TwoAdicProfile out;
    out.q = q;
    if (q % 4 == 1) {
        uint64_t t = q - 1;
        unsigned v = 0;
        while (t % 2 == 0) {
            t /= 2;
            ++v;
        }
        out.branch = TwoAdicProfile::Branch::one_mod_four;
        out.A = v - 1;
        out.m = t;
    } else {
        uint64_t t = q + 1;
        unsigned v = 0;
        while (t % 2 == 0) {
            t /= 2;
            ++v;
        }
        out.branch = TwoAdicProfile::Branch::three_mod_four;
        out.A = v;
        out.m = t;
    }
    return out;
}

uint64_t order_mod_power_of_two(uint64_t q, uint64_t modulus) {
    if (modulus < 2 || (modulus & (modulus - 1)) != 0)
        throw DomainError("modulus must be a power of two >= 2");
    if (q % 2 == 0) throw DomainError("q must be odd");
    const uint64_t base = q % modulus;
    uint64_t t = base;
    uint64_t order = 1;
    while (t != 1) {
        t = static_cast<uint64_t>((static_cast<__uint128_t>(t) * base) % modulus);
        ++order;
        if (order > modulus) throw TheoremViolation("order search did not terminate");
    }
    return order;
}

}  // namespace negacode
