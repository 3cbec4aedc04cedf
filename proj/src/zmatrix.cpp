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

#include "kf/zmatrix.hpp"

#include <stdexcept>

namespace kf {

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::transpose() const {
    ZMat t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMat operator*(const ZMat& a, const ZMat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("ZMat: size mismatch in product");
    ZMat p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.c_; ++j) {
                mpz_addmul(p.at(i, j).get_mpz_t(), aik.get_mpz_t(), b.at(k, j).get_mpz_t());
            }
        }
    return p;
}

ZMat ZMat::scaled(const mpz_class& s) const {
    ZMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

bool ZMat::is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void ZMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

void ZMat::submul_row(int i, int j, const mpz_class& q) {
    if (q == 0) return;
    for (int k = 0; k < c_; ++k) mpz_submul(at(i, k).get_mpz_t(), q.get_mpz_t(), at(j, k).get_mpz_t());
}

void ZMat::negate_row(int i) {
    for (int k = 0; k < c_; ++k) at(i, k) = -at(i, k);
}

std::vector<mpz_class> ZMat::row(int i) const {
    std::vector<mpz_class> v(c_);
    for (int j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

mpz_class bareiss_det(const ZMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    if (n == 0) return 1;
    ZMat a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

ZMat hnf_row_basis(const ZMat& gens) {
    ZMat h = gens;
    int rows = h.rows(), cols = h.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // eliminate below position (r, col) by repeated division
        while (true) {
            int piv = -1;
            for (int i = r; i < rows; ++i) {
                if (h.at(i, col) != 0 &&
                    (piv < 0 || mpz_cmpabs(h.at(i, col).get_mpz_t(), h.at(piv, col).get_mpz_t()) < 0))
                    piv = i;
            }
            if (piv < 0) break;
            h.swap_rows(r, piv);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h.at(i, col) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
                h.submul_row(i, r, q);
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) h.negate_row(r);
        for (int i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
            h.submul_row(i, r, q);
        }
        ++r;
    }
    ZMat out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

QMat QMat::from_z(const ZMat& m) {
    QMat q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q.at(i, j) = m.at(i, j);
    return q;
}

QMat qinverse(const ZMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("qinverse: not square");
    int n = m.rows();
    QMat a = QMat::from_z(m);
    QMat inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::invalid_argument("qinverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        mpq_class d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            mpq_class f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<mpq_class> qmat_vec(const QMat& m, const std::vector<mpq_class>& v) {
    if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("qmat_vec: size mismatch");
    std::vector<mpq_class> out(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

std::vector<mpq_class> solve_left(const ZMat& B, const std::vector<mpq_class>& v) {
    return qmat_vec(qinverse(B), v);
}

std::optional<std::vector<mpz_class>> solve_left_integral(const ZMat& B, const std::vector<mpz_class>& v) {
    std::vector<mpq_class> vq(v.size());
    for (size_t i = 0; i < v.size(); ++i) vq[i] = mpq_class(v[i]);
    std::vector<mpq_class> x = solve_left(B, vq);
    std::vector<mpz_class> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].get_den() != 1) return std::nullopt;
        out[i] = x[i].get_num();
    }
    return out;
}

bool Gf2Span::add(const std::vector<mpz_class>& row) {
    std::vector<uint8_t> r(ncols_);
    for (int j = 0; j < ncols_; ++j) r[j] = static_cast<uint8_t>(mpz_odd_p(row[j].get_mpz_t()) ? 1 : 0);
    for (const auto& b : basis_) {
        int lead = -1;
        for (int j = 0; j < ncols_; ++j)
            if (b[j]) {
                lead = j;
                break;
            }
        if (lead >= 0 && r[lead])
            for (int j = 0; j < ncols_; ++j) r[j] ^= b[j];
    }
    for (int j = 0; j < ncols_; ++j)
        if (r[j]) {
            basis_.push_back(r);
            return true;
        }
    return false;
}

}  // namespace kf
