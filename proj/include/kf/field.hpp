/*
   Copyright 2025 The kf authors

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

#ifndef KF_FIELD_HPP
#define KF_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kf {

/// GF(p^h) with elements encoded as indices 0..q-1.  The index is the base-p
/// digit expansion of the coefficient vector of the element in the polynomial
/// basis (1, w, ..., w^{h-1}), low degree in the low digit.  Index 0 is the
/// zero element and index 1 the one element.
///
/// Fields are immutable after construction and cheap to copy (shared state).
/// Multiplication runs off exp/log tables; addition is digit arithmetic
/// (a plain XOR of indices in characteristic 2).
class FiniteField {
  public:
    /// p prime, h >= 1, p^h <= 2^16.  When `modulus` is empty the monic
    /// irreducible of degree h with the least index encoding is used, which
    /// makes element encodings reproducible across runs.
    /// `modulus` lists h+1 coefficients, low degree first, top one == 1.
    static FiniteField make(uint32_t p, uint32_t h, const std::vector<uint32_t>& modulus = {});

    uint32_t p() const;
    uint32_t h() const;
    uint32_t q() const;
    const std::vector<uint32_t>& modulus() const;

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frobenius(uint32_t a) const { return pow(a, p()); }

    /// A fixed multiplicative generator (the least index that generates).
    uint32_t generator() const;

    /// Coefficients of the element in the polynomial basis, length h.
    std::vector<uint32_t> coords(uint32_t a) const;
    uint32_t from_coords(const std::vector<uint32_t>& c) const;

    /// Scalar embedding of 0..p-1.
    uint32_t from_subfield_scalar(uint32_t c) const { return c; }

    bool same_field(const FiniteField& other) const { return impl_ == other.impl_; }
    friend bool operator==(const FiniteField& a, const FiniteField& b);

    std::string describe() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Univariate polynomial over a FiniteField; coefficients low degree first,
/// trailing zeros trimmed (zero polynomial has empty coefficient vector).
class Poly {
  public:
    Poly() = default;
    Poly(FiniteField f, std::vector<uint32_t> coeffs);

    const FiniteField& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    uint32_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    static Poly x(const FiniteField& f) { return Poly(f, {0, 1}); }
    static Poly constant(const FiniteField& f, uint32_t v) { return Poly(f, {v}); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// (quotient, remainder); divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(Poly a, Poly b);  // monic gcd
    static Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);
    static Poly powmod(const Poly& base, const mpz_srcptr, const Poly& mod) = delete;  // not needed
    static Poly powmod_ui(Poly base, uint64_t e, const Poly& mod);

    uint32_t eval(uint32_t x) const;
    Poly monic() const;

    bool is_irreducible() const;

    /// Serialization: decimal coefficient indices, low degree first, comma
    /// separated ("1,1,0,1" is 1 + x + x^3).
    std::string str() const;
    static Poly parse(const FiniteField& f, const std::string& s);

  private:
    void trim();
    FiniteField f_;
    std::vector<uint32_t> c_;
};

/// All monic irreducible polynomials of degree s over the field, ordered by
/// index encoding.  Guarded by q^s <= 2^20.
std::vector<Poly> irreducible_monics(const FiniteField& f, uint32_t s);

}  // namespace kf

#endif
