/*
   Copyright 2026 The curvezeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CURVEZETA_FIELD_HPP
#define CURVEZETA_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace curvezeta {

using bigint = boost::multiprecision::cpp_int;

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// F_{p^m} represented as F_p[t]/(modulus), modulus monic of degree m.
/// The prime field is the m = 1 instance with modulus t.
/// Elements are coefficient vectors of length m with entries in [0, p).
class Fq {
public:
    using Elt = std::vector<uint64_t>;

    explicit Fq(uint64_t p) : p_(p), m_(1), mod_{0, 1} {
        if (!is_prime_u64(p)) throw std::invalid_argument("Fq: p is not prime");
    }

    // modulus given as coefficients c[0..m], c[m] must be 1
    Fq(uint64_t p, std::vector<uint64_t> modulus) : p_(p), mod_(std::move(modulus)) {
        if (!is_prime_u64(p)) throw std::invalid_argument("Fq: p is not prime");
        if (mod_.size() < 2 || mod_.back() != 1)
            throw std::invalid_argument("Fq: modulus must be monic of degree >= 1");
        m_ = static_cast<unsigned>(mod_.size() - 1);
        for (auto& c : mod_) c %= p_;
        mod_.back() = 1;
    }

    uint64_t p() const { return p_; }
    unsigned degree() const { return m_; }
    const std::vector<uint64_t>& modulus() const { return mod_; }
    bigint cardinality() const {
        bigint q = 1;
        for (unsigned i = 0; i < m_; ++i) q *= p_;
        return q;
    }

    bool same_field(const Fq& o) const { return p_ == o.p_ && mod_ == o.mod_; }

    Elt zero() const { return Elt(m_, 0); }
    Elt one() const { return from_int(1); }
    Elt from_int(uint64_t v) const {
        Elt e(m_, 0);
        e[0] = v % p_;
        return e;
    }
    // the class of t (generator of the polynomial basis)
    Elt gen() const {
        Elt e(m_, 0);
        if (m_ == 1)
            e[0] = (p_ - mod_[0] % p_) % p_;  // root of t + c is -c
        else
            e[1] = 1;
        return e;
    }

    bool is_zero(const Elt& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }

    Elt add(const Elt& a, const Elt& b) const {
        Elt r(m_);
        for (unsigned i = 0; i < m_; ++i) r[i] = pmod(a[i] + b[i]);
        return r;
    }
    Elt sub(const Elt& a, const Elt& b) const {
        Elt r(m_);
        for (unsigned i = 0; i < m_; ++i) r[i] = pmod(a[i] + p_ - b[i]);
        return r;
    }
    Elt neg(const Elt& a) const {
        Elt r(m_);
        for (unsigned i = 0; i < m_; ++i) r[i] = pmod(p_ - a[i]);
        return r;
    }

    Elt mul(const Elt& a, const Elt& b) const {
        if (m_ == 1) return Elt{mulp(a[0], b[0])};
        std::vector<uint64_t> prod(2 * m_ - 1, 0);
        for (unsigned i = 0; i < m_; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < m_; ++j)
                prod[i + j] = pmod(prod[i + j] + mulp(a[i], b[j]));
        }
        reduce(prod);
        prod.resize(m_);
        return prod;
    }

    Elt scalar_mul(uint64_t c, const Elt& a) const {
        c %= p_;
        Elt r(m_);
        for (unsigned i = 0; i < m_; ++i) r[i] = mulp(c, a[i]);
        return r;
    }

    Elt pow(Elt a, bigint e) const {
        if (e < 0) throw std::invalid_argument("Fq::pow: negative exponent");
        Elt r = one();
        while (e > 0) {
            if (boost::multiprecision::bit_test(e, 0)) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elt inv(const Elt& a) const {
        if (is_zero(a)) throw std::domain_error("Fq::inv: zero element");
        if (m_ == 1) return Elt{inv_mod_p(a[0])};
        // extended Euclid in F_p[t] on (a, modulus)
        std::vector<uint64_t> r0 = mod_, r1 = trimmed(a);
        std::vector<uint64_t> s0{}, s1{1};
        while (!r1.empty()) {
            // divide r0 by r1
            std::vector<uint64_t> q;
            std::vector<uint64_t> rem = r0;
            if (rem.size() >= r1.size()) {
                q.assign(rem.size() - r1.size() + 1, 0);
                uint64_t lcinv = inv_mod_p(r1.back());
                for (size_t k = rem.size(); k-- >= r1.size();) {
                    uint64_t coef = mulp(rem[k], lcinv);
                    q[k - (r1.size() - 1)] = coef;
                    if (coef)
                        for (size_t j = 0; j < r1.size(); ++j)
                            rem[k - (r1.size() - 1) + j] =
                                pmod(rem[k - (r1.size() - 1) + j] + p_ - mulp(coef, r1[j]));
                    if (k == 0) break;
                }
                while (!rem.empty() && rem.back() == 0) rem.pop_back();
            }
            // s0 - q*s1
            std::vector<uint64_t> t(std::max(s0.size(), q.size() + s1.size()), 0);
            for (size_t i = 0; i < s0.size(); ++i) t[i] = s0[i];
            for (size_t i = 0; i < q.size(); ++i)
                if (q[i])
                    for (size_t j = 0; j < s1.size(); ++j)
                        t[i + j] = pmod(t[i + j] + p_ - mulp(q[i], s1[j]));
            while (!t.empty() && t.back() == 0) t.pop_back();
            s0 = std::move(s1);
            s1 = std::move(t);
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        if (r0.size() != 1) throw std::domain_error("Fq::inv: element not invertible (bad modulus?)");
        uint64_t c = inv_mod_p(r0[0]);
        Elt out(m_, 0);
        for (size_t i = 0; i < s0.size() && i < m_; ++i) out[i] = mulp(c, s0[i]);
        return out;
    }

    Elt frobenius(const Elt& a) const { return pow(a, bigint(p_)); }

    uint64_t pmod(uint64_t v) const { return v % p_; }
    uint64_t mulp(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p_);
    }
    uint64_t inv_mod_p(uint64_t a) const {
        a %= p_;
        if (!a) throw std::domain_error("inverse of 0 mod p");
        // Fermat
        uint64_t r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = mulp(r, b);
            b = mulp(b, b);
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const Elt& a) const {
        std::string s = "[";
        for (unsigned i = 0; i < m_; ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + "]";
    }

private:
    void reduce(std::vector<uint64_t>& v) const {
        for (size_t k = v.size(); k-- > m_;) {
            uint64_t c = v[k];
            if (!c) continue;
            v[k] = 0;
            for (unsigned j = 0; j < m_; ++j)
                v[k - m_ + j] = pmod(v[k - m_ + j] + p_ - mulp(c, mod_[j]));
        }
    }
    std::vector<uint64_t> trimmed(const Elt& a) const {
        std::vector<uint64_t> v = a;
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }

    uint64_t p_;
    unsigned m_;
    std::vector<uint64_t> mod_;
};

}  // namespace curvezeta

#endif
