#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace alex3 {

// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

// Exact determinant via fraction-free (Bareiss) elimination.
mpz_class determinant(const IntegerMatrix& a);

bool is_unimodular(const IntegerMatrix& a);

struct SNFResult {
    IntegerMatrix u; // unimodular, rows x rows
    IntegerMatrix s; // diagonal, nonzero entries first, d1 | d2 | ...
    IntegerMatrix v; // unimodular, cols x cols
};

// Diagonalization u * a * v = s by unimodular row and column operations.
// Pivot selection: minimal nonzero absolute value in the live submatrix.
SNFResult smith_normal_form(const IntegerMatrix& a);

std::size_t snf_rank(const SNFResult& r);

// Diagonal entries >= 2 of the Smith form, in divisibility order.
std::vector<mpz_class> torsion_factors(const SNFResult& r);

} // namespace alex3
