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

#ifndef NEGACODE_POLY_HPP
#define NEGACODE_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "negacode/field.hpp"

namespace negacode {

/*
 * Dense univariate polynomial over a Field.  Coefficients are element
 * indices, little-endian, kept canonical (no trailing zeros; the zero
 * polynomial has an empty coefficient vector).
 */
class Poly {
  public:
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<uint64_t> coefficients);

    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    static Poly constant(const Field& f, uint64_t c) { return Poly(f, {c}); }
    static Poly monomial(const Field& f, uint64_t degree, uint64_t c = 1);

    const Field& field() const { return *field_; }
    /* Degree of the zero polynomial is -1. */
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    uint64_t coeff(uint64_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    uint64_t eval(uint64_t x) const;
    Poly monic() const;  // DomainError on zero

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(uint64_t c) const;
    Poly shifted(uint64_t k) const;  // multiply by x^k

    /* Quotient and remainder; g must be nonzero. */
    static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
    friend Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
    friend Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /* Total order: by degree, then by coefficient tuple (constant first). */
    friend bool operator<(const Poly& a, const Poly& b);

    /* Human form with descending powers, e.g. "x^4+2x^2+2"; zero is "0".
     * Coefficients print as element indices. */
    std::string str() const;

  private:
    void trim();

    const Field* field_;
    std::vector<uint64_t> c_;
};

/* gcd with monic normalization; gcd(f, 0) = monic(f).  Both zero is an error. */
Poly gcd_monic(Poly a, Poly b);

Poly pow_mod(const Poly& base, uint64_t e, const Poly& mod);

/* f(g) reduced modulo mod (Horner). */
Poly compose_mod(const Poly& f, const Poly& g, const Poly& mod);

/* Inverse of a modulo mod, provided gcd(a, mod) = 1. */
Poly inv_mod(const Poly& a, const Poly& mod);

/* Monic reciprocal f*(x) = f(0)^(-1) x^deg(f) f(1/x); requires f(0) != 0. */
Poly reciprocal(const Poly& f);

/* x^n + 1 over f. */
Poly xn_plus_one(const Field& f, uint64_t n);

/* Rabin irreducibility test.  Constants and the zero polynomial are not
 * irreducible; degree is capped at 512 to bound the Frobenius chain. */
bool is_irreducible(const Poly& f);

/* All roots in the base field, sorted by element index.  Scans the field,
 * so the field size is capped at 10^6 elements. */
std::vector<uint64_t> roots_in_field(const Poly& f);

/*
 * Dickson polynomial of the first kind D_n(x, alpha):
 *   D_0 = 2,  D_n(x, alpha) = sum_j n/(n-j) C(n-j, j) (-alpha)^j x^(n-2j),
 * with the integer coefficient reduced into the field via
 * n/(n-j) C(n-j,j) = C(n-j, j) + C(n-j-1, j-1) and Lucas' theorem.
 * Satisfies D_n(u + alpha/u, alpha) = u^n + (alpha/u)^n.
 */
Poly dickson(const Field& f, uint64_t n, uint64_t alpha);

/*
 * Complete factorization of x^n + 1 into monic irreducibles, sorted
 * canonically.  Distinct-degree split followed by Cantor-Zassenhaus
 * equal-degree splitting; the seed only steers the internal randomness,
 * never the (sorted) result.  Throws NotSeparable when the characteristic
 * divides n.
 *
 * This routine is the generic oracle used to cross-check the closed-form
 * factorizations and deliberately shares no logic with them.
 */
std::vector<Poly> factor_xn_plus_one(const Field& f, uint64_t n, uint64_t seed = 0);

}  // namespace negacode

#endif
