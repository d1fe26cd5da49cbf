#include "rla/simplicial.hpp"
#include "rla/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rla {

void SparseMatrix::set(std::size_t r, std::size_t c, Elt v)
{
    auto& cv = col[c];
    auto it = std::lower_bound(cv.begin(), cv.end(), std::make_pair(r, Elt(0)),
                               [](const auto& x, const auto& y) { return x.first < y.first; });
    if (it != cv.end() && it->first == r) {
        if (v)
            it->second = v;
        else
            cv.erase(it);
    } else if (v) {
        cv.insert(it, {r, v});
    }
}

Elt SparseMatrix::get(std::size_t r, std::size_t c) const
{
    for (const auto& [i, v] : col[c])
        if (i == r)
            return v;
    return 0;
}

SparseMatrix sp_identity(std::size_t n)
{
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.col[i].push_back({i, 1});
    return m;
}

SparseMatrix sp_mul(const Field& k, const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols != b.rows)
        throw std::invalid_argument("sparse: shape mismatch in product");
    SparseMatrix c(a.rows, b.cols);
    for (std::size_t j = 0; j < b.cols; ++j) {
        std::map<std::size_t, Elt> acc;
        for (const auto& [l, bv] : b.col[j])
            for (const auto& [i, av] : a.col[l])
                acc[i] = k.add(acc[i], k.mul(av, bv));
        for (const auto& [i, v] : acc)
            if (v)
                c.col[j].push_back({i, v});
    }
    return c;
}

SparseMatrix sp_add(const Field& k, const SparseMatrix& a, const SparseMatrix& b, Elt scale_b)
{
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("sparse: shape mismatch in sum");
    SparseMatrix c(a.rows, a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) {
        std::map<std::size_t, Elt> acc;
        for (const auto& [i, v] : a.col[j])
            acc[i] = k.add(acc[i], v);
        for (const auto& [i, v] : b.col[j])
            acc[i] = k.add(acc[i], k.mul(scale_b, v));
        for (const auto& [i, v] : acc)
            if (v)
                c.col[j].push_back({i, v});
    }
    return c;
}

std::size_t sp_rank(const Field& k, const SparseMatrix& a)
{
    SparseEchelon e(k);
    for (const auto& c : a.col) {
        std::map<std::size_t, Elt> row(c.begin(), c.end());
        e.add(std::move(row));
    }
    return e.rank();
}

bool SimplicialVectorSpace::check_identities(std::string* why) const
{
    const Field& f = *k;
    auto fail = [&](const std::string& s) {
        if (why)
            *why = s;
        return false;
    };
    auto tag = [](const char* rel, int q, int i, int j) {
        return std::string(rel) + " at q=" + std::to_string(q) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
    };
    // d_i d_j = d_{j-1} d_i, i < j
    for (int q = 2; q <= top; ++q)
        for (int j = 1; j <= q; ++j)
            for (int i = 0; i < j; ++i)
                if (!(sp_mul(f, face[q - 1][i], face[q][j]) == sp_mul(f, face[q - 1][j - 1], face[q][i])))
                    return fail(tag("d_i d_j = d_{j-1} d_i", q, i, j));
    // s_i s_j = s_{j+1} s_i, i <= j
    for (int q = 0; q + 2 <= top; ++q)
        for (int j = 0; j <= q; ++j)
            for (int i = 0; i <= j; ++i)
                if (!(sp_mul(f, degen[q + 1][i], degen[q][j]) == sp_mul(f, degen[q + 1][j + 1], degen[q][i])))
                    return fail(tag("s_i s_j = s_{j+1} s_i", q, i, j));
    for (int q = 0; q < top; ++q)
        for (int j = 0; j <= q; ++j)
            for (int i = 0; i <= q + 1; ++i) {
                SparseMatrix lhs = sp_mul(f, face[q + 1][i], degen[q][j]);
                if (i < j) {
                    if (!(lhs == sp_mul(f, degen[q - 1][j - 1], face[q][i])))
                        return fail(tag("d_i s_j = s_{j-1} d_i", q, i, j));
                } else if (i == j || i == j + 1) {
                    if (!(lhs == sp_identity(dims[q])))
                        return fail(tag("d_j s_j = d_{j+1} s_j = id", q, i, j));
                } else {
                    if (!(lhs == sp_mul(f, degen[q - 1][j], face[q][i - 1])))
                        return fail(tag("d_i s_j = s_j d_{i-1}", q, i, j));
                }
            }
    return true;
}

bool SimplicialVectorSpace::basis_type() const
{
    auto ok = [](const SparseMatrix& m) {
        for (const auto& c : m.col)
            if (c.size() > 1 || (c.size() == 1 && c[0].second != 1))
                return false;
        return true;
    };
    for (const auto& fs : face)
        for (const auto& m : fs)
            if (!ok(m))
                return false;
    for (const auto& ds : degen)
        for (const auto& m : ds)
            if (!ok(m))
                return false;
    return true;
}

SimplicialVectorSpace zero_simplicial(FieldPtr k, int top)
{
    return dold_kan(std::move(k), {}, top);
}

namespace {

// Monotone surjections [q] -> [m], as value sequences of length q + 1.
std::vector<std::vector<int>> surjections(int q, int m)
{
    std::vector<std::vector<int>> out;
    if (m > q)
        return out;
    std::vector<int> cur{0};
    std::function<void(int)> rec = [&](int pos) {
        if (pos > q) {
            if (cur.back() == m)
                out.push_back(cur);
            return;
        }
        int last = cur.back();
        for (int v : {last, last + 1}) {
            if (v > m || m - v > q - pos)
                continue;
            cur.push_back(v);
            rec(pos + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace

SimplicialVectorSpace dold_kan(FieldPtr k, const std::map<int, int>& chain_dims, int top)
{
    SimplicialVectorSpace v;
    v.k = k;
    v.top = top;
    // basis of V_q: (surjection, chain degree, index)
    struct B
    {
        std::vector<int> s;
        int m, c;
    };
    std::vector<std::vector<B>> basis(std::size_t(top) + 1);
    std::vector<std::map<std::pair<std::vector<int>, int>, std::size_t>> index(std::size_t(top) + 1);
    for (int q = 0; q <= top; ++q)
        for (const auto& [m, n] : chain_dims) {
            if (m < 0)
                throw std::invalid_argument("dold_kan: negative chain degree");
            for (auto& s : surjections(q, m))
                for (int c = 0; c < n; ++c) {
                    index[q][{s, c}] = basis[q].size();
                    basis[q].push_back({s, m, c});
                }
        }
    for (int q = 0; q <= top; ++q)
        v.dims.push_back(basis[q].size());
    v.face.resize(std::size_t(top) + 1);
    v.degen.resize(std::size_t(top) + 1);
    for (int q = 1; q <= top; ++q)
        for (int i = 0; i <= q; ++i) {
            SparseMatrix m(v.dims[q - 1], v.dims[q]);
            for (std::size_t b = 0; b < basis[q].size(); ++b) {
                std::vector<int> s = basis[q][b].s;
                s.erase(s.begin() + i);
                if (s.front() != 0 || s.back() != basis[q][b].m)
                    continue;
                bool onto = true;
                for (size_t x = 1; x < s.size(); ++x)
                    if (s[x] - s[x - 1] > 1)
                        onto = false;
                if (onto)
                    m.col[b].push_back({index[q - 1].at({s, basis[q][b].c}), 1});
            }
            v.face[q].push_back(std::move(m));
        }
    for (int q = 0; q < top; ++q)
        for (int i = 0; i <= q; ++i) {
            SparseMatrix m(v.dims[q + 1], v.dims[q]);
            for (std::size_t b = 0; b < basis[q].size(); ++b) {
                std::vector<int> s = basis[q][b].s;
                s.insert(s.begin() + i, s[i]);
                m.col[b].push_back({index[q + 1].at({s, basis[q][b].c}), 1});
            }
            v.degen[q].push_back(std::move(m));
        }
    return v;
}

std::vector<long long> simplicial_homotopy(const SimplicialVectorSpace& v)
{
    const Field& k = *v.k;
    std::vector<std::size_t> rk(std::size_t(v.top) + 2, 0);
    for (int q = 1; q <= v.top; ++q) {
        SparseMatrix d(v.dims[q - 1], v.dims[q]);
        for (int i = 0; i <= q; ++i)
            d = sp_add(k, d, v.face[q][i], i % 2 ? k.neg(1) : Elt(1));
        rk[q] = sp_rank(k, d);
    }
    std::vector<long long> out;
    for (int q = 0; q < v.top; ++q)
        out.push_back((long long)v.dims[q] - (long long)rk[q] - (long long)rk[q + 1]);
    return out;
}

}  // namespace rla
