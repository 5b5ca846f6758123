#include "permfp/fpmatrix.hpp"

#include <cassert>
#include <stdexcept>

namespace permfp {

int fp_inverse(int a, int p) {
    // extended Euclid; p prime and a nonzero mod p
    int t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int q = r / newr;
        int tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::logic_error("fp_inverse: not invertible");
    return t < 0 ? t + p : t;
}

FpMatrix FpMatrix::identity(int n, int p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    assert(cols_ == rhs.rows_ && p_ == rhs.p_);
    FpMatrix out(rows_, rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = mod(out.at(i, j) + static_cast<long long>(v) * rhs.at(k, j), p_);
        }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_ && p_ == rhs.p_);
    FpMatrix out(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = mod(a_[i] + rhs.a_[i], p_);
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_ && p_ == rhs.p_);
    FpMatrix out(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = mod(a_[i] - rhs.a_[i], p_);
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

FpMatrix FpMatrix::scaled(long long c) const {
    FpMatrix out(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = mod(a_[i] * c, p_);
    return out;
}

bool FpMatrix::is_zero() const {
    for (int v : a_)
        if (v != 0) return false;
    return true;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& rhs) const {
    assert(p_ == rhs.p_);
    FpMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            int v = at(i, j);
            if (v == 0) continue;
            for (int k = 0; k < rhs.rows_; ++k)
                for (int l = 0; l < rhs.cols_; ++l)
                    out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) =
                        mod(static_cast<long long>(v) * rhs.at(k, l), p_);
        }
    return out;
}

FpMatrix FpMatrix::direct_sum(const FpMatrix& rhs) const {
    assert(p_ == rhs.p_);
    FpMatrix out(rows_ + rhs.rows_, cols_ + rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < rhs.rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j) out.at(rows_ + i, cols_ + j) = rhs.at(i, j);
    return out;
}

std::vector<int> fp_rref(FpMatrix& m) {
    const int p = m.p();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        int inv = fp_inverse(m.at(row, col), p);
        for (int j = 0; j < m.cols(); ++j)
            m.at(row, j) = FpMatrix::mod(static_cast<long long>(m.at(row, j)) * inv, p);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            int f = m.at(i, col);
            if (f == 0) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = FpMatrix::mod(m.at(i, j) - static_cast<long long>(f) * m.at(row, j), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int FpMatrix::rank() const {
    FpMatrix c = *this;
    return static_cast<int>(fp_rref(c).size());
}

FpMatrix FpMatrix::kernel() const {
    FpMatrix c = *this;
    std::vector<int> pivots = fp_rref(c);
    std::vector<bool> is_pivot(cols_, false);
    for (int col : pivots) is_pivot[col] = true;
    int free_count = cols_ - static_cast<int>(pivots.size());
    FpMatrix out(cols_, free_count, p_);
    int k = 0;
    for (int col = 0; col < cols_; ++col) {
        if (is_pivot[col]) continue;
        out.at(col, k) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // row r has leading 1 in column pivots[r]
            int v = c.at(static_cast<int>(r), col);
            if (v != 0) out.at(pivots[r], k) = mod(-v, p_);
        }
        ++k;
    }
    return out;
}

FpMatrix FpMatrix::image_basis() const {
    FpMatrix c = *this;
    std::vector<int> pivots = fp_rref(c);
    FpMatrix out(rows_, static_cast<int>(pivots.size()), p_);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < rows_; ++i) out.at(i, static_cast<int>(k)) = at(i, pivots[k]);
    return out;
}

bool FpMatrix::solve(const std::vector<int>& b, std::vector<int>& x) const {
    assert(static_cast<int>(b.size()) == rows_);
    FpMatrix aug(rows_, cols_ + 1, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = mod(b[i], p_);
    }
    std::vector<int> pivots = fp_rref(aug);
    x.assign(cols_, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_) return false;  // pivot in the augmented column
        x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    }
    return true;
}

std::vector<int> FpMatrix::apply(const std::vector<int>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<int> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        long long acc = 0;
        for (int j = 0; j < cols_; ++j) acc += static_cast<long long>(at(i, j)) * v[j];
        out[i] = mod(acc, p_);
    }
    return out;
}

}  // namespace permfp
