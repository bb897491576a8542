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

#include "negacode/dncode.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <utility>

#include "negacode/errors.hpp"

namespace negacode {

std::vector<uint64_t> negashift(const Field& f, std::span<const uint64_t> v) {
    if (v.empty()) throw DomainError("negashift: empty vector");
    std::vector<uint64_t> out(v.size());
    out[0] = f.neg(v[v.size() - 1]);
    for (size_t i = 0; i + 1 < v.size(); ++i) out[i + 1] = v[i];
    return out;
}

DNCode::DNCode(const Field& f, std::vector<uint64_t> a)
    : field_(&f), n_(a.size()), a_(std::move(a)) {
    if (n_ == 0) throw DomainError("DNCode: empty ring element");
    for (uint64_t c : a_) {
        if (c >= f.size()) throw DomainError("DNCode: coefficient out of range");
    }
    if (n_ % f.characteristic() == 0) {
        throw NotSeparable("DNCode: block length shares a factor with the field characteristic");
    }
    matrix_.resize(n_ * n_);
    std::vector<uint64_t> row = a_;
    for (uint64_t i = 0; i < n_; ++i) {
        std::copy(row.begin(), row.end(), matrix_.begin() + i * n_);
        if (i + 1 < n_) row = negashift(f, row);
    }
}

std::vector<uint64_t> DNCode::generator_row(size_t i) const {
    std::vector<uint64_t> g(2 * n_, 0);
    g[i] = 1;
    for (size_t t = 0; t < n_; ++t) g[n_ + t] = mat(i, t);
    return g;
}

bool is_self_dual(const DNCode& code) {
    const Field& f = code.field();
    const uint64_t n = code.block_length();
    const uint64_t minus_one = f.neg(1);
    for (uint64_t i = 0; i < n; ++i) {
        for (uint64_t j = i; j < n; ++j) {
            uint64_t dot = 0;
            for (uint64_t k = 0; k < n; ++k) {
                dot = f.add(dot, f.mul(code.mat(i, k), code.mat(j, k)));
            }
            if (dot != (i == j ? minus_one : 0)) return false;
        }
    }
    return true;
}

bool contains(const DNCode& code, std::span<const uint64_t> u) {
    const Field& f = code.field();
    const uint64_t n = code.block_length();
    if (u.size() != 2 * n) throw DomainError("contains: word length must be twice the block length");
    for (uint64_t c : u) {
        if (c >= f.size()) throw DomainError("contains: coordinate out of range");
    }
    for (uint64_t t = 0; t < n; ++t) {
        uint64_t acc = 0;
        for (uint64_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(u[i], code.mat(i, t)));
        if (acc != u[n + t]) return false;
    }
    return true;
}

namespace {

/*
 * Visits every nonzero message in reflected mixed-radix Gray order (Knuth
 * 7.2.1.1 Algorithm H).  Each step changes a single message symbol; visit is
 * called with the changed position and the symbol's old and new values, and
 * may return false to stop the scan early.
 */
template <typename Visit>
void gray_scan(uint64_t n, uint64_t q, Visit&& visit) {
    std::vector<uint64_t> digit(n, 0);
    std::vector<uint64_t> focus(n + 1);
    std::vector<int> dir(n, 1);
    for (uint64_t j = 0; j <= n; ++j) focus[j] = j;
    for (;;) {
        uint64_t j = focus[0];
        focus[0] = 0;
        if (j == n) return;
        uint64_t old_val = digit[j];
        uint64_t new_val = dir[j] > 0 ? old_val + 1 : old_val - 1;
        digit[j] = new_val;
        if (new_val == 0 || new_val == q - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        if (!visit(j, old_val, new_val)) return;
    }
}

void check_scan_capacity(const DNCode& code, double capacity) {
    const double q = static_cast<double>(code.field().size());
    const double n = static_cast<double>(code.block_length());
    const double work = n * std::pow(q, n);
    if (work > capacity) {
        throw CapacityError("codeword scan needs about " + std::to_string(work) +
                            " symbol operations, capacity is " + std::to_string(capacity));
    }
}

}  // namespace

uint64_t min_distance(const DNCode& code, const DistanceOptions& options) {
    check_scan_capacity(code, options.capacity);
    const Field& f = code.field();
    const uint64_t n = code.block_length();
    std::vector<uint64_t> tail(n, 0);  // codeword's second half, msg * A
    uint64_t wt_msg = 0;
    uint64_t wt_tail = 0;
    uint64_t best = 2 * n + 1;
    gray_scan(n, f.size(), [&](uint64_t j, uint64_t old_val, uint64_t new_val) {
        wt_msg += (old_val == 0) ? 1 : (new_val == 0 ? static_cast<uint64_t>(-1) : 0);
        const uint64_t delta = f.sub(new_val, old_val);
        for (uint64_t t = 0; t < n; ++t) {
            const uint64_t next = f.add(tail[t], f.mul(delta, code.mat(j, t)));
            wt_tail += (next != 0);
            wt_tail -= (tail[t] != 0);
            tail[t] = next;
        }
        const uint64_t w = wt_msg + wt_tail;
        if (w < best) best = w;
        return !(options.early_exit && best <= *options.early_exit);
    });
    return best;
}

std::vector<uint64_t> weight_enumerator(const DNCode& code, double capacity) {
    check_scan_capacity(code, capacity);
    const Field& f = code.field();
    const uint64_t n = code.block_length();
    std::vector<uint64_t> counts(2 * n + 1, 0);
    counts[0] = 1;  // the zero codeword
    std::vector<uint64_t> tail(n, 0);
    uint64_t wt_msg = 0;
    uint64_t wt_tail = 0;
    gray_scan(n, f.size(), [&](uint64_t j, uint64_t old_val, uint64_t new_val) {
        wt_msg += (old_val == 0) ? 1 : (new_val == 0 ? static_cast<uint64_t>(-1) : 0);
        const uint64_t delta = f.sub(new_val, old_val);
        for (uint64_t t = 0; t < n; ++t) {
            const uint64_t next = f.add(tail[t], f.mul(delta, code.mat(j, t)));
            wt_tail += (next != 0);
            wt_tail -= (tail[t] != 0);
            tail[t] = next;
        }
        ++counts[wt_msg + wt_tail];
        return true;
    });
    return counts;
}

Monomial::Monomial(const Field& f, std::vector<size_t> perm, std::vector<uint64_t> signs)
    : field_(&f), perm_(std::move(perm)), sign_(std::move(signs)) {
    if (perm_.size() != sign_.size()) throw DomainError("Monomial: size mismatch");
    std::vector<char> seen(perm_.size(), 0);
    for (size_t target : perm_) {
        if (target >= perm_.size() || seen[target]) {
            throw DomainError("Monomial: not a permutation");
        }
        seen[target] = 1;
    }
    for (uint64_t s : sign_) {
        if (s == 0 || s >= f.size()) throw DomainError("Monomial: invalid nonzero entry");
    }
}

Monomial Monomial::identity(const Field& f, size_t size) {
    std::vector<size_t> perm(size);
    for (size_t i = 0; i < size; ++i) perm[i] = i;
    return Monomial(f, std::move(perm), std::vector<uint64_t>(size, 1));
}

std::vector<uint64_t> Monomial::apply(std::span<const uint64_t> v) const {
    if (v.size() != perm_.size()) throw DomainError("Monomial::apply: size mismatch");
    std::vector<uint64_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[perm_[i]] = field_->mul(v[i], sign_[i]);
    return out;
}

Monomial Monomial::compose(const Monomial& rhs) const {
    if (field_ != rhs.field_ || size() != rhs.size()) {
        throw DomainError("Monomial::compose: incompatible operands");
    }
    std::vector<size_t> perm(size());
    std::vector<uint64_t> sign(size());
    for (size_t i = 0; i < size(); ++i) {
        perm[i] = rhs.perm_[perm_[i]];
        sign[i] = field_->mul(sign_[i], rhs.sign_[perm_[i]]);
    }
    return Monomial(*field_, std::move(perm), std::move(sign));
}

Monomial Monomial::inverse() const {
    std::vector<size_t> perm(size());
    std::vector<uint64_t> sign(size());
    for (size_t i = 0; i < size(); ++i) {
        perm[perm_[i]] = i;
        sign[perm_[i]] = field_->inv(sign_[i]);
    }
    return Monomial(*field_, std::move(perm), std::move(sign));
}

Monomial Monomial::scaled(uint64_t c) const {
    std::vector<uint64_t> sign(size());
    for (size_t i = 0; i < size(); ++i) sign[i] = field_->mul(sign_[i], c);
    return Monomial(*field_, perm_, std::move(sign));
}

bool Monomial::operator==(const Monomial& rhs) const {
    return field_ == rhs.field_ && perm_ == rhs.perm_ && sign_ == rhs.sign_;
}

std::optional<uint64_t> Monomial::scalar_ratio(const Monomial& other) const {
    if (field_ != other.field_ || perm_ != other.perm_) return std::nullopt;
    if (size() == 0) return 1;
    const uint64_t c = field_->mul(sign_[0], field_->inv(other.sign_[0]));
    for (size_t i = 1; i < size(); ++i) {
        if (sign_[i] != field_->mul(c, other.sign_[i])) return std::nullopt;
    }
    return c;
}

namespace {

std::vector<uint64_t> negacirculant_matrix(const Field& f, const std::vector<uint64_t>& a) {
    const size_t n = a.size();
    std::vector<uint64_t> m(n * n);
    std::vector<uint64_t> row = a;
    for (size_t i = 0; i < n; ++i) {
        std::copy(row.begin(), row.end(), m.begin() + i * n);
        if (i + 1 < n) row = negashift(f, row);
    }
    return m;
}

/* (P M P)[i][j] = s_i s_{perm(j)} M[perm(i)][perm(j)] for self-inverse P. */
bool conjugation_transposes(const Field& f, const Monomial& p, const std::vector<uint64_t>& m) {
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const uint64_t lhs = f.mul(f.mul(p.signs()[i], p.signs()[p.perm()[j]]),
                                       m[p.perm()[i] * n + p.perm()[j]]);
            if (lhs != m[j * n + i]) return false;
        }
    }
    return true;
}

}  // namespace

Monomial transpose_conjugator(const Field& f, uint64_t n) {
    if (n == 0) throw DomainError("transpose_conjugator: zero size");
    if (n % 2 == 0) {
        throw UnsupportedShape("transpose_conjugator: requires odd size");
    }
    std::vector<size_t> perm(n);
    std::vector<uint64_t> sign(n, f.neg(1));
    perm[0] = 0;
    sign[0] = 1;
    for (uint64_t i = 1; i < n; ++i) perm[i] = n - i;
    Monomial p(f, std::move(perm), std::move(sign));

    // Deterministic spot check on a handful of negacirculants.
    uint64_t state = 0x9e3779b97f4a7c15ull ^ (f.size() * 1315423911ull + n);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<uint64_t> a(n, 0);
        if (trial == 0) {
            a[n / 2] = 1;
        } else {
            for (uint64_t i = 0; i < n; ++i) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                a[i] = (state >> 17) % f.size();
            }
        }
        if (!conjugation_transposes(f, p, negacirculant_matrix(f, a))) {
            throw TheoremViolation("transpose_conjugator: conjugation identity failed on sample");
        }
    }
    return p;
}

Monomial double_negashift(const Field& f, uint64_t n) {
    if (n == 0) throw DomainError("double_negashift: zero size");
    std::vector<size_t> perm(2 * n);
    std::vector<uint64_t> sign(2 * n, 1);
    for (uint64_t h = 0; h < 2; ++h) {
        const uint64_t base = h * n;
        for (uint64_t i = 0; i + 1 < n; ++i) perm[base + i] = base + i + 1;
        perm[base + n - 1] = base;
        sign[base + n - 1] = f.neg(1);
    }
    return Monomial(f, std::move(perm), std::move(sign));
}

Monomial antiswap(const Field& f, uint64_t n) {
    if (n == 0) throw DomainError("antiswap: zero size");
    std::vector<size_t> perm(2 * n);
    std::vector<uint64_t> sign(2 * n, 1);
    for (uint64_t j = 0; j < n; ++j) {
        perm[j] = n + j;
        sign[j] = f.neg(1);
        perm[n + j] = j;
    }
    return Monomial(f, std::move(perm), std::move(sign));
}

namespace {

std::vector<size_t> compose_perm(const std::vector<size_t>& a, const std::vector<size_t>& b) {
    std::vector<size_t> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

/* Size of the group generated by the given permutations, capped to detect
 * runaway closures. */
uint64_t permutation_group_order(const std::vector<std::vector<size_t>>& gens, uint64_t cap) {
    std::vector<size_t> id(gens.empty() ? 0 : gens[0].size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = i;
    std::set<std::vector<size_t>> seen{id};
    std::queue<std::vector<size_t>> frontier;
    frontier.push(id);
    while (!frontier.empty()) {
        std::vector<size_t> cur = std::move(frontier.front());
        frontier.pop();
        for (const auto& g : gens) {
            std::vector<size_t> next = compose_perm(cur, g);
            if (seen.insert(next).second) {
                if (seen.size() > cap) return cap + 1;
                frontier.push(std::move(next));
            }
        }
    }
    return seen.size();
}

}  // namespace

WitnessResult consta_dihedral_witness(const DNCode& code) {
    const Field& f = code.field();
    const uint64_t n = code.block_length();
    if (n % 2 == 0 || n < 3) {
        throw UnsupportedShape("consta_dihedral_witness: requires odd block length >= 3");
    }
    if (!is_self_dual(code)) {
        throw HypothesisUnmet("consta_dihedral_witness: code is not self-dual");
    }

    const Monomial tau = double_negashift(f, n);
    const Monomial swap = antiswap(f, n);
    const Monomial p = transpose_conjugator(f, n);

    // diag(P, P) acting on both halves.
    std::vector<size_t> dperm(2 * n);
    std::vector<uint64_t> dsign(2 * n);
    for (uint64_t h = 0; h < 2; ++h) {
        for (uint64_t i = 0; i < n; ++i) {
            dperm[h * n + i] = h * n + p.perm()[i];
            dsign[h * n + i] = p.signs()[i];
        }
    }
    const Monomial block_p(f, std::move(dperm), std::move(dsign));
    const Monomial sigma = swap.compose(block_p);

    WitnessResult result;
    const Monomial identity = Monomial::identity(f, 2 * n);
    if (!(swap.compose(swap) == identity.scaled(f.neg(1)))) {
        result.failure = "antiswap squared is not -I";
        return result;
    }
    for (uint64_t i = 0; i < n; ++i) {
        const std::vector<uint64_t> g = code.generator_row(i);
        if (!contains(code, tau.apply(g))) {
            result.failure = "code is not invariant under the double negashift";
            return result;
        }
        if (!contains(code, sigma.apply(g))) {
            result.failure = "code is not invariant under the twisted swap";
            return result;
        }
    }
    const Monomial conjugated = sigma.compose(tau).compose(sigma.inverse());
    const std::optional<uint64_t> ratio = conjugated.scalar_ratio(tau.inverse());
    int relation_scalar = 0;
    if (ratio == 1) relation_scalar = 1;
    if (ratio == f.neg(1)) relation_scalar = -1;
    if (relation_scalar == 0) {
        result.failure = "twisted swap does not invert the double negashift";
        return result;
    }
    const uint64_t order = permutation_group_order({tau.perm(), sigma.perm()}, 16 * n);
    if (order != 2 * n) {
        result.failure = "permutation parts do not generate a dihedral group of order 2n";
        return result;
    }
    result.witness = DihedralWitness{tau, sigma, relation_scalar, order};
    return result;
}

}  // namespace negacode
