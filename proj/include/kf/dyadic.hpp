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

#ifndef KF_DYADIC_HPP
#define KF_DYADIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kf {

/// Exact rational of the form num / 2^exp.  Canonical form: num odd, or
/// num == 0 with exp == 0.  All arithmetic is exact; there is no rounding
/// anywhere in this class.
class Dyadic {
  public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long n) : num_(n), exp_(0) {}
    Dyadic(const mpz_class& n) : num_(n), exp_(0) {}
    Dyadic(mpz_class n, unsigned e) : num_(std::move(n)), exp_(e) { canonicalize(); }

    const mpz_class& num() const { return num_; }
    unsigned exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        mpz_class n = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
        return Dyadic(std::move(n), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    /// Multiply by 2^k (k may be negative).
    Dyadic times_pow2(long k) const {
        if (is_zero()) return Dyadic();
        if (k >= 0) {
            long e = static_cast<long>(exp_) - k;
            if (e >= 0) return Dyadic(num_, static_cast<unsigned>(e));
            return Dyadic(num_ << static_cast<unsigned>(-e), 0);
        }
        return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
    }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    mpq_class to_mpq() const {
        mpq_class q(num_, mpz_class(1) << exp_);
        q.canonicalize();
        return q;
    }

    /// Exact conversion from a rational whose denominator is a power of two.
    static Dyadic from_mpq(const mpq_class& q) {
        mpz_class den = q.get_den();
        unsigned e = 0;
        while (den > 1) {
            if (mpz_odd_p(den.get_mpz_t())) throw std::invalid_argument("dyadic: denominator is not a power of 2");
            den >>= 1;
            ++e;
        }
        return Dyadic(q.get_num(), e);
    }

    /// "n" for integers, "n/2^e" otherwise.
    std::string str() const {
        if (exp_ == 0) return num_.get_str();
        return num_.get_str() + "/2^" + std::to_string(exp_);
    }

    double to_double() const { return to_mpq().get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

  private:
    void canonicalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && mpz_even_p(num_.get_mpz_t())) {
            num_ >>= 1;
            --exp_;
        }
    }

    mpz_class num_;
    unsigned exp_;
};

}  // namespace kf

#endif
