#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace swk {

using Int = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Int>>;  // row-major

// Smith normal form D = U * M * V with U, V unimodular and the diagonal of
// D a divisibility chain of non-negative integers.
struct SnfResult {
    Matrix d, u, v;
    std::vector<Int> diagonal() const;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix identity_matrix(size_t n);
Int det(Matrix m);  // by fraction-free elimination

SnfResult smith_normal_form(const Matrix& m);

// Certificate check: D == U*M*V, U and V unimodular, diagonal shape with a
// divisibility chain.
bool snf_certified(const Matrix& m, const SnfResult& r);

}  // namespace swk
