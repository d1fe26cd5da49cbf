#pragma once

#include "rla/field.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace rla {

// Dense row-major matrix over a Field.
struct Matrix
{
    std::size_t rows = 0, cols = 0;
    std::vector<Elt> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    Elt& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Elt operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool is_zero() const;
};

Matrix mat_mul(const Field& k, const Matrix& x, const Matrix& y);
Matrix identity(std::size_t n);
bool mat_equal(const Matrix& x, const Matrix& y);

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(const Field& k, Matrix& m, bool reduced = true);
std::size_t rank(const Field& k, Matrix m);
// Basis of {v : m v = 0}, as rows of the result.
Matrix kernel(const Field& k, const Matrix& m);
// Rows of m stacked under each other.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

// Incremental rank of sparse rows (column -> value), pivoting on the smallest column.
class SparseEchelon
{
public:
    explicit SparseEchelon(const Field& k) : k_(k) {}
    // Returns true when the row is independent of the rows added so far.
    bool add(std::map<std::size_t, Elt> row);
    std::size_t rank() const { return piv_.size(); }

private:
    const Field& k_;
    std::map<std::size_t, std::map<std::size_t, Elt>> piv_;
};

}  // namespace rla
