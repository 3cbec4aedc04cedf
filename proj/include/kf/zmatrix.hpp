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

#ifndef KF_ZMATRIX_HPP
#define KF_ZMATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace kf {

/// Dense matrix over Z (GMP integers).  Row-major, value semantics.
/// Sizes here are small (dimensions <= a few dozen); all algorithms are
/// exact, none are asymptotically clever.
class ZMat {
  public:
    ZMat() : r_(0), c_(0) {}
    ZMat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}

    static ZMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }

    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    ZMat transpose() const;
    friend ZMat operator*(const ZMat& a, const ZMat& b);
    friend bool operator==(const ZMat& a, const ZMat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

    ZMat scaled(const mpz_class& s) const;
    bool is_symmetric() const;

    void swap_rows(int i, int j);
    /// row_i -= q * row_j
    void submul_row(int i, int j, const mpz_class& q);
    void negate_row(int i);

    std::vector<mpz_class> row(int i) const;

  private:
    int r_, c_;
    std::vector<mpz_class> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class bareiss_det(const ZMat& m);

/// Row-style Hermite normal form of the row span.  Returns the nonzero rows
/// (a canonical basis of the integer row span of `gens`).
ZMat hnf_row_basis(const ZMat& gens);

/// Dense matrix over Q, used for exact solves and inverses.
class QMat {
  public:
    QMat() : r_(0), c_(0) {}
    QMat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}
    static QMat from_z(const ZMat& m);

    int rows() const { return r_; }
    int cols() const { return c_; }
    mpq_class& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const mpq_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  private:
    int r_, c_;
    std::vector<mpq_class> a_;
};

/// Inverse of a nonsingular square integer matrix, over Q.
/// Throws std::invalid_argument when singular.
QMat qinverse(const ZMat& m);

/// x * B = v over Q for square nonsingular B; returns x.
std::vector<mpq_class> solve_left(const ZMat& B, const std::vector<mpq_class>& v);

/// Same, but demands an integral solution; nullopt when v is not in the
/// integer row span of B.
std::optional<std::vector<mpz_class>> solve_left_integral(const ZMat& B, const std::vector<mpz_class>& v);

std::vector<mpq_class> qmat_vec(const QMat& m, const std::vector<mpq_class>& v);  // v * m

/// Incremental GF(2) row space: tracks the rank of a growing set of rows.
class Gf2Span {
  public:
    explicit Gf2Span(int ncols) : ncols_(ncols) {}
    /// Inserts the parity pattern of `row`; returns true when the rank grew.
    bool add(const std::vector<mpz_class>& row);
    int rank() const { return static_cast<int>(basis_.size()); }

  private:
    int ncols_;
    std::vector<std::vector<uint8_t>> basis_;  // reduced rows, leading-one order
};

}  // namespace kf

#endif
