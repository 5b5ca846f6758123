#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace permfp {

// Exact integer linear algebra used for lattice computations.  All arithmetic
// is arbitrary precision so that Smith-form pivots can grow without wrapping.
using Int = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<Int>>;  // row-major, rectangular

IntMat int_identity(int n);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntMat int_transpose(const IntMat& a);

struct SmithForm {
    IntMat s;  // diagonal form, s = u * a * v
    IntMat u;  // unimodular row transform
    IntMat v;  // unimodular column transform
    int rank = 0;
};

SmithForm smith_normal_form(const IntMat& a);

// Basis of the integer kernel {x : a x = 0}, returned as columns.
IntMat int_kernel(const IntMat& a);

// Solve a x = b over the integers; nullopt if no integral solution exists.
std::optional<std::vector<Int>> int_solve(const IntMat& a, const std::vector<Int>& b);

int int_rank(const IntMat& a);

// |det| of a square matrix (0 if singular), via the Smith diagonal.
Int int_abs_det(const IntMat& a);

}  // namespace permfp
