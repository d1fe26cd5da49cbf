#include "rla/linalg.hpp"

#include <stdexcept>

namespace rla {

bool Matrix::is_zero() const
{
    for (Elt x : a)
        if (x)
            return false;
    return true;
}

Matrix mat_mul(const Field& k, const Matrix& x, const Matrix& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t l = 0; l < x.cols; ++l) {
            Elt c = x(i, l);
            if (!c)
                continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                if (y(l, j))
                    z(i, j) = k.add(z(i, j), k.mul(c, y(l, j)));
        }
    return z;
}

Matrix identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool mat_equal(const Matrix& x, const Matrix& y)
{
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

std::vector<std::size_t> row_reduce(const Field& k, Matrix& m, bool reduced)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pr = r;
        while (pr < m.rows && m(pr, c) == 0)
            ++pr;
        if (pr == m.rows)
            continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m(pr, j), m(r, j));
        Elt inv = k.inv(m(r, c));
        for (std::size_t j = c; j < m.cols; ++j)
            m(r, j) = k.mul(m(r, j), inv);
        for (std::size_t i = reduced ? 0 : r + 1; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Elt f = k.neg(m(i, c));
            for (std::size_t j = c; j < m.cols; ++j)
                if (m(r, j))
                    m(i, j) = k.add(m(i, j), k.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Field& k, Matrix m)
{
    return row_reduce(k, m, false).size();
}

Matrix kernel(const Field& k, const Matrix& m)
{
    Matrix r = m;
    std::vector<std::size_t> piv = row_reduce(k, r, true);
    std::vector<bool> is_piv(m.cols, false);
    for (std::size_t c : piv)
        is_piv[c] = true;
    Matrix ker(m.cols - piv.size(), m.cols);
    std::size_t row = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f])
            continue;
        ker(row, f) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            ker(row, piv[i]) = k.neg(r(i, f));
        ++row;
    }
    return ker;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols)
{
    std::size_t rows = 0;
    for (const Matrix& b : blocks) {
        if (b.rows && b.cols != cols)
            throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows;
    }
    Matrix m(rows, cols);
    std::size_t r = 0;
    for (const Matrix& b : blocks)
        for (std::size_t i = 0; i < b.rows; ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j)
                m(r, j) = b(i, j);
    return m;
}

bool SparseEchelon::add(std::map<std::size_t, Elt> row)
{
    while (!row.empty()) {
        auto lead = row.begin();
        auto it = piv_.find(lead->first);
        if (it == piv_.end()) {
            Elt inv = k_.inv(lead->second);
            for (auto& [c, v] : row)
                v = k_.mul(v, inv);
            std::size_t col = lead->first;
            piv_.emplace(col, std::move(row));
            return true;
        }
        Elt f = k_.neg(lead->second);
        for (const auto& [c, v] : it->second) {
            Elt nv = k_.add(row[c], k_.mul(f, v));
            if (nv)
                row[c] = nv;
            else
                row.erase(c);
        }
    }
    return false;
}

}  // namespace rla
