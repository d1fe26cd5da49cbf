#pragma once

#include "rla/field.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rla {

// Column-major sparse matrix; columns hold (row, value) pairs sorted by row.
struct SparseMatrix
{
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, Elt>>> col;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), col(c) {}
    void set(std::size_t r, std::size_t c, Elt v);
    Elt get(std::size_t r, std::size_t c) const;
    bool operator==(const SparseMatrix& o) const { return rows == o.rows && cols == o.cols && col == o.col; }
};

SparseMatrix sp_identity(std::size_t n);
SparseMatrix sp_mul(const Field& k, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sp_add(const Field& k, const SparseMatrix& a, const SparseMatrix& b, Elt scale_b = 1);
std::size_t sp_rank(const Field& k, const SparseMatrix& a);

// Bounded simplicial vector space: degrees 0..top with faces d_i: V_q -> V_{q-1} and
// degeneracies s_i: V_q -> V_{q+1} (the latter only for q < top). Matrices act on columns.
struct SimplicialVectorSpace
{
    FieldPtr k;
    int top = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<SparseMatrix>> face;   // face[q][i], q >= 1
    std::vector<std::vector<SparseMatrix>> degen;  // degen[q][i], q < top

    // All simplicial identities as matrix equations; the first failure is described in *why.
    bool check_identities(std::string* why = nullptr) const;
    // Every face and degeneracy sends basis vectors to basis vectors or zero.
    bool basis_type() const;
};

SimplicialVectorSpace zero_simplicial(FieldPtr k, int top);

// Gamma of a chain complex with zero differential, given as degree -> dimension.
SimplicialVectorSpace dold_kan(FieldPtr k, const std::map<int, int>& chain_dims, int top);

// Homotopy via the Moore complex sum (-1)^i d_i, for q < top.
std::vector<long long> simplicial_homotopy(const SimplicialVectorSpace& v);

}  // namespace rla
