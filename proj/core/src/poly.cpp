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

#include "negacode/poly.hpp"

#include <algorithm>
#include <random>

namespace negacode {

namespace {

constexpr uint64_t kRootScanCapacity = 1000000;
constexpr int64_t kIrreducibilityDegreeCap = 512;
constexpr uint64_t kDicksonIndexCap = uint64_t{1} << 16;

void require_same_field(const Poly& a, const Poly& b) {
    if (!a.field().same(b.field()))
        throw SpecMismatch("polynomials belong to different fields");
}

}  // namespace

Poly::Poly(const Field& f, std::vector<uint64_t> coefficients)
    : field_(&f), c_(std::move(coefficients)) {
    for (uint64_t c : c_) {
        if (c >= f.size()) throw DomainError("coefficient index out of range");
    }
    trim();
}

Poly Poly::monomial(const Field& f, uint64_t degree, uint64_t c) {
    std::vector<uint64_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(f, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint64_t Poly::eval(uint64_t x) const {
    uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = field_->add(field_->mul(acc, x), c_[i]);
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("zero polynomial has no monic form");
    if (is_monic()) return *this;
    return scaled(field_->inv(c_.back()));
}

Poly Poly::scaled(uint64_t c) const {
    Poly out(*field_);
    out.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_->mul(c_[i], c);
    out.trim();
    return out;
}

Poly Poly::shifted(uint64_t k) const {
    if (is_zero()) return *this;
    Poly out(*field_);
    out.c_.assign(k, 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    Poly out(a.field());
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = a.field().add(a.coeff(i), b.coeff(i));
    }
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    Poly out(a.field());
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = a.field().sub(a.coeff(i), b.coeff(i));
    }
    out.trim();
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    const Field& F = a.field();
    Poly out(F);
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            out.c_[i + j] = F.add(out.c_[i + j], F.mul(a.c_[i], b.c_[j]));
        }
    }
    out.trim();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& F = f.field();
    if (f.degree() < g.degree()) return {Poly(F), f};
    const uint64_t lead_inv = F.inv(g.leading());
    std::vector<uint64_t> rem = f.c_;
    std::vector<uint64_t> quot(f.c_.size() - g.c_.size() + 1, 0);
    for (size_t i = rem.size(); i-- >= g.c_.size();) {
        uint64_t factor = F.mul(rem[i], lead_inv);
        if (factor != 0) {
            quot[i - (g.c_.size() - 1)] = factor;
            for (size_t j = 0; j < g.c_.size(); ++j) {
                size_t at = i - (g.c_.size() - 1) + j;
                rem[at] = F.sub(rem[at], F.mul(factor, g.c_[j]));
            }
        }
        if (i == g.c_.size() - 1) break;
    }
    rem.resize(g.c_.size() - 1);
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

bool operator==(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    return a.c_ == b.c_;
}

bool operator<(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return a.c_ < b.c_;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]);
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

Poly gcd_monic(Poly a, Poly b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly pow_mod(const Poly& base, uint64_t e, const Poly& mod) {
    require_same_field(base, mod);
    if (mod.degree() < 1) throw DomainError("modulus must have positive degree");
    Poly result = Poly::constant(base.field(), 1);
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) result = (result * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return result;
}

Poly compose_mod(const Poly& f, const Poly& g, const Poly& mod) {
    require_same_field(f, g);
    require_same_field(f, mod);
    Poly acc(f.field());
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        acc = (acc * g + Poly::constant(f.field(), f.coeff(i))) % mod;
    }
    return acc;
}

Poly inv_mod(const Poly& a, const Poly& mod) {
    require_same_field(a, mod);
    if (mod.degree() < 1) throw DomainError("modulus must have positive degree");
    /* Extended Euclid: maintain r = s * a (mod `mod`). */
    Poly r0 = mod, r1 = a % mod;
    Poly s0(a.field()), s1 = Poly::constant(a.field(), 1);
    if (r1.is_zero()) throw DivisionByZero("element not invertible");
    while (!r1.is_zero()) {
        auto [q, r2] = Poly::divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw DivisionByZero("element not invertible");
    return (s0 % mod).scaled(a.field().inv(r0.coeff(0)));
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0)
        throw DomainError("reciprocal requires a nonzero constant term");
    std::vector<uint64_t> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(rev)).scaled(f.field().inv(f.coeff(0)));
}

Poly xn_plus_one(const Field& f, uint64_t n) {
    std::vector<uint64_t> c(n + 1, 0);
    c[0] = 1;
    c[n] = 1;
    return Poly(f, std::move(c));
}

namespace {

/* h -> h^q mod f, the Frobenius step for the ambient field size q. */
Poly frobenius_step(const Poly& h, const Poly& f) {
    return pow_mod(h, h.field().size(), f);
}

}  // namespace

bool is_irreducible(const Poly& f) {
    const int64_t d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    if (d > kIrreducibilityDegreeCap)
        throw CapacityError("irreducibility test degree cap exceeded");
    const Field& F = f.field();

    std::vector<int64_t> prime_divisors;
    int64_t rest = d;
    for (int64_t r = 2; r * r <= rest; ++r) {
        if (rest % r == 0) {
            prime_divisors.push_back(r);
            while (rest % r == 0) rest /= r;
        }
    }
    if (rest > 1) prime_divisors.push_back(rest);

    /* frob[i] = x^(q^i) mod f. */
    std::vector<Poly> frob;
    frob.reserve(d + 1);
    frob.push_back(Poly::x(F) % f);
    for (int64_t i = 1; i <= d; ++i) frob.push_back(frobenius_step(frob.back(), f));

    if (frob[d] != Poly::x(F) % f) return false;
    for (int64_t r : prime_divisors) {
        Poly g = frob[d / r] - Poly::x(F);
        if (g.is_zero()) return false;
        if (gcd_monic(g, f).degree() != 0) return false;
    }
    return true;
}

std::vector<uint64_t> roots_in_field(const Poly& f) {
    if (f.is_zero()) throw DomainError("zero polynomial vanishes everywhere");
    const Field& F = f.field();
    if (F.size() > kRootScanCapacity)
        throw CapacityError("field too large for root scan");
    std::vector<uint64_t> out;
    for (uint64_t x = 0; x < F.size(); ++x) {
        if (f.eval(x) == 0) out.push_back(x);
    }
    return out;
}

namespace {

/* C(a, b) mod p by Lucas' theorem; per-digit binomials multiplicatively. */
uint64_t binom_mod_p(uint64_t a, uint64_t b, const Field& F) {
    const uint64_t p = F.characteristic();
    uint64_t result = 1;
    while (b > 0 || a > 0) {
        uint64_t ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        uint64_t digit = 1;
        for (uint64_t i = 1; i <= bd; ++i) {
            digit = F.mul(digit, (ad - bd + i) % p);
            digit = F.mul(digit, F.inv(i % p));
        }
        result = F.mul(result, digit);
        a /= p;
        b /= p;
    }
    return result;
}

}  // namespace

Poly dickson(const Field& F, uint64_t n, uint64_t alpha) {
    if (alpha >= F.size()) throw DomainError("alpha out of range");
    if (n > kDicksonIndexCap) throw CapacityError("Dickson index cap exceeded");
    if (n == 0) return Poly::constant(F, F.add(1, 1));
    std::vector<uint64_t> c(n + 1, 0);
    const uint64_t minus_alpha = F.neg(alpha);
    uint64_t sign_pow = 1;
    for (uint64_t j = 0; 2 * j <= n; ++j) {
        uint64_t coeff = binom_mod_p(n - j, j, F);
        if (j >= 1) coeff = F.add(coeff, binom_mod_p(n - j - 1, j - 1, F));
        c[n - 2 * j] = F.mul(coeff, sign_pow);
        sign_pow = F.mul(sign_pow, minus_alpha);
    }
    return Poly(F, std::move(c));
}

namespace {

Poly random_nonconstant(std::mt19937_64& rng, const Field& F, int64_t below_degree) {
    while (true) {
        std::vector<uint64_t> c(below_degree);
        for (auto& v : c) v = rng() % F.size();
        Poly u(F, std::move(c));
        if (u.degree() >= 1) return u;
    }
}

/*
 * Equal-degree splitting, odd characteristic.  g is a monic squarefree
 * product of irreducibles of common degree d.  Uses
 *   u^((q^d - 1)/2) = (u^(1 + q + ... + q^(d-1)))^((q-1)/2)
 * so only machine-size exponents appear.
 */
void split_equal_degree(const Poly& g, uint64_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    if (static_cast<uint64_t>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const Field& F = g.field();
    const Poly one = Poly::constant(F, 1);
    while (true) {
        Poly u = random_nonconstant(rng, F, g.degree());
        Poly shared = gcd_monic(u, g);
        if (shared.degree() != 0 &&
            static_cast<uint64_t>(shared.degree()) < static_cast<uint64_t>(g.degree())) {
            split_equal_degree(shared, d, rng, out);
            split_equal_degree((g / shared).monic(), d, rng, out);
            return;
        }
        Poly norm = u % g;
        Poly power = norm;
        for (uint64_t i = 1; i < d; ++i) {
            power = frobenius_step(power, g);
            norm = (norm * power) % g;
        }
        Poly v = pow_mod(norm, (F.size() - 1) / 2, g);
        Poly w = gcd_monic(v - one, g);
        if (w.degree() != 0 &&
            static_cast<uint64_t>(w.degree()) < static_cast<uint64_t>(g.degree())) {
            split_equal_degree(w, d, rng, out);
            split_equal_degree((g / w).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly> factor_xn_plus_one(const Field& F, uint64_t n, uint64_t seed) {
    if (n == 0) throw DomainError("n must be positive");
    if (n % F.characteristic() == 0)
        throw NotSeparable("x^n+1 is not squarefree: characteristic divides n");

    const Poly target = xn_plus_one(F, n);
    std::mt19937_64 rng(seed);
    std::vector<Poly> factors;

    /* Distinct-degree stage: peel off products of equal-degree factors. */
    Poly f = target;
    Poly h = Poly::x(F) % f;
    const Poly x = Poly::x(F);
    for (uint64_t d = 1; 2 * d <= static_cast<uint64_t>(f.degree()); ++d) {
        h = frobenius_step(h, f);
        Poly diff = h - (x % f);
        if (diff.is_zero()) {
            /* Every remaining factor has degree dividing d; f itself is a
             * product of degree-d irreducibles at this point. */
            split_equal_degree(f, d, rng, factors);
            f = Poly::constant(F, 1);
            break;
        }
        Poly g = gcd_monic(diff, f);
        if (g.degree() > 0) {
            split_equal_degree(g, d, rng, factors);
            f = (f / g).monic();
            h = h % f;
        }
    }
    if (f.degree() > 0) factors.push_back(f);

    std::sort(factors.begin(), factors.end());

    Poly product = Poly::constant(F, 1);
    for (const Poly& g : factors) product = product * g;
    if (product != target)
        throw TheoremViolation("factor product does not reconstruct x^n+1");
    return factors;
}

}  // namespace negacode
