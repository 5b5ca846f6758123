#pragma once

#include <cstdint>
#include <vector>

namespace permfp {

// Dense matrix over the prime field GF(p).  Entries are stored as canonical
// residues in [0, p).  p is carried per-matrix; mixing moduli is a logic error
// and is asserted against in debug builds.
class FpMatrix {
public:
    FpMatrix() : rows_(0), cols_(0), p_(2) {}
    FpMatrix(int rows, int cols, int p)
        : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {}

    static FpMatrix identity(int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    // Reduce an arbitrary integer into [0, p).
    static int mod(long long v, int p) {
        long long r = v % p;
        return static_cast<int>(r < 0 ? r + p : r);
    }

    void set(int r, int c, long long v) { at(r, c) = mod(v, p_); }
    void add_at(int r, int c, long long v) { at(r, c) = mod(at(r, c) + v, p_); }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    bool operator==(const FpMatrix& rhs) const = default;

    FpMatrix transpose() const;
    FpMatrix scaled(long long c) const;
    bool is_zero() const;

    // Kronecker product in lexicographic block order: entry at
    // (r1*rhs.rows+r2, c1*rhs.cols+c2) equals at(r1,c1)*rhs.at(r2,c2).
    FpMatrix kronecker(const FpMatrix& rhs) const;

    // Block-diagonal juxtaposition: this in the top-left, rhs bottom-right.
    FpMatrix direct_sum(const FpMatrix& rhs) const;

    int rank() const;

    // Basis of the right kernel {v : A v = 0}, as columns of the result.
    FpMatrix kernel() const;

    // Column span helpers.  image_basis() returns a matrix whose columns are a
    // basis of the column space.
    FpMatrix image_basis() const;

    // Solve A x = b for one column vector; returns false if inconsistent.
    bool solve(const std::vector<int>& b, std::vector<int>& x) const;

    std::vector<int> apply(const std::vector<int>& v) const;

private:
    int rows_, cols_, p_;
    std::vector<int> a_;
};

int fp_inverse(int a, int p);

// Row-reduce `m` in place to reduced row echelon form; returns the pivot
// column of each nonzero row, in order.
std::vector<int> fp_rref(FpMatrix& m);

}  // namespace permfp
