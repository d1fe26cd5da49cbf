#include "rla/twisted.hpp"
#include "rla/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rla {

TwistedPoly::TwistedPoly(FieldPtr field, std::vector<Elt> coeffs) : k(std::move(field)), c(std::move(coeffs))
{
    trim();
}

TwistedPoly TwistedPoly::monomial(FieldPtr field, Elt a, int i)
{
    std::vector<Elt> c(i + 1, 0);
    c[i] = a;
    return TwistedPoly(std::move(field), std::move(c));
}

int TwistedPoly::valuation() const
{
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i])
            return int(i);
    return -1;
}

void TwistedPoly::trim()
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

std::string TwistedPoly::str() const
{
    if (c.empty())
        return "0";
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i])
            continue;
        if (!s.empty())
            s += " + ";
        std::string a = k->str(c[i]);
        if (k->degree() > 1 && a.find('+') != std::string::npos)
            a = "(" + a + ")";
        if (i == 0)
            s += a;
        else
            s += (a == "1" ? "" : a) + "x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

namespace {

const Field& field_of(const TwistedPoly& f, const TwistedPoly& g)
{
    if (!f.k || !g.k)
        throw std::invalid_argument("twisted: polynomial without field");
    if (f.k != g.k && !(*f.k == *g.k))
        throw std::invalid_argument("twisted: field mismatch");
    return *f.k;
}

}  // namespace

TwistedPoly tp_add(const TwistedPoly& f, const TwistedPoly& g)
{
    const Field& k = field_of(f, g);
    std::vector<Elt> c(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = k.add(f.coeff(int(i)), g.coeff(int(i)));
    return TwistedPoly(f.k, std::move(c));
}

TwistedPoly tp_sub(const TwistedPoly& f, const TwistedPoly& g)
{
    const Field& k = field_of(f, g);
    std::vector<Elt> c(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = k.sub(f.coeff(int(i)), g.coeff(int(i)));
    return TwistedPoly(f.k, std::move(c));
}

TwistedPoly tp_mul(const TwistedPoly& f, const TwistedPoly& g)
{
    const Field& k = field_of(f, g);
    if (f.is_zero() || g.is_zero())
        return TwistedPoly(f.k);
    std::vector<Elt> c(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i])
            continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            c[i + j] = k.add(c[i + j], k.mul(f.c[i], k.frobenius(g.c[j], int(i))));
    }
    return TwistedPoly(f.k, std::move(c));
}

std::pair<TwistedPoly, TwistedPoly> tp_divmod(const TwistedPoly& f, const TwistedPoly& g, Side side)
{
    const Field& k = field_of(f, g);
    if (g.is_zero())
        throw std::domain_error("twisted: division by the zero polynomial");
    TwistedPoly q(f.k), r = f;
    int n = g.deg();
    Elt lead = g.c.back();
    while (!r.is_zero() && r.deg() >= n) {
        int m = r.deg();
        Elt a = r.c.back();
        Elt c = side == Side::left ? k.div(a, k.frobenius(lead, m - n)) : k.frobenius(k.div(a, lead), -n);
        TwistedPoly t = TwistedPoly::monomial(f.k, c, m - n);
        q = tp_add(q, t);
        r = tp_sub(r, side == Side::left ? tp_mul(t, g) : tp_mul(g, t));
    }
    return {q, r};
}

FPModule FPModule::cyclic(const TwistedPoly& d)
{
    FPModule m;
    m.k = d.k;
    m.gens = 1;
    m.rels.push_back({d});
    return m;
}

FPModule FPModule::free(FieldPtr k, std::size_t rank)
{
    FPModule m;
    m.k = std::move(k);
    m.gens = rank;
    return m;
}

FPModule FPModule::diagonal(FieldPtr k, const std::vector<TwistedPoly>& d, std::size_t free_rank)
{
    FPModule m;
    m.k = k;
    m.gens = d.size() + free_rank;
    for (size_t i = 0; i < d.size(); ++i) {
        std::vector<TwistedPoly> row(m.gens, TwistedPoly(k));
        row[i] = d[i];
        m.rels.push_back(row);
    }
    return m;
}

NormalForm module_normal_form(const FPModule& m)
{
    std::vector<std::vector<TwistedPoly>> a = m.rels;
    for (auto& row : a) {
        if (row.size() != m.gens)
            throw std::invalid_argument("twisted: relation length differs from generator count");
        for (auto& e : row)
            if (!e.k)
                e.k = m.k;
    }
    size_t rows = a.size(), cols = m.gens;
    size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // nonzero entry of least degree in the lower-right block
        int best = -1;
        size_t bi = 0, bj = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (!a[i][j].is_zero() && (best < 0 || a[i][j].deg() < best)) {
                    best = a[i][j].deg();
                    bi = i;
                    bj = j;
                }
        if (best < 0)
            break;
        std::swap(a[t], a[bi]);
        for (auto& row : a)
            std::swap(row[t], row[bj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows && clean; ++i) {
                if (a[i][t].is_zero())
                    continue;
                auto [q, r] = tp_divmod(a[i][t], a[t][t], Side::left);
                for (size_t j = t; j < cols; ++j)
                    a[i][j] = tp_sub(a[i][j], tp_mul(q, a[t][j]));
                if (!r.is_zero()) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols && clean; ++j) {
                if (a[t][j].is_zero())
                    continue;
                auto [q, r] = tp_divmod(a[t][j], a[t][t], Side::right);
                for (size_t i = t; i < rows; ++i)
                    a[i][j] = tp_sub(a[i][j], tp_mul(a[i][t], q));
                if (!r.is_zero()) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
        }
    }
    NormalForm nf;
    for (size_t i = 0; i < t; ++i)
        nf.diag.push_back(a[i][i]);
    nf.free_rank = cols - t;
    return nf;
}

TorsionQuotient torsion_and_quotient(const NormalForm& nf, int r)
{
    if (r < 1)
        throw std::invalid_argument("twisted: r must be positive");
    TorsionQuotient out;
    for (const auto& d : nf.diag) {
        std::size_t a = std::size_t(std::min(d.valuation(), r));
        out.kernel_dim += a;
        out.quotient_dim += a;
    }
    out.quotient_dim += nf.free_rank * std::size_t(r);
    return out;
}

TorsionQuotient torsion_and_quotient(const FPModule& m, int r)
{
    return torsion_and_quotient(module_normal_form(m), r);
}

std::size_t truncated_quotient_dim(const FPModule& m, int n)
{
    const Field& k = *m.k;
    std::size_t dim = m.gens * std::size_t(n);
    if (dim == 0)
        return 0;
    Matrix a(m.rels.size() * std::size_t(n), dim);
    std::size_t row = 0;
    for (const auto& rel : m.rels)
        for (int s = 0; s < n; ++s, ++row)
            for (std::size_t j = 0; j < m.gens; ++j)
                for (int i = 0; i + s < n && i <= rel[j].deg(); ++i)
                    a(row, j * n + std::size_t(i + s)) = k.frobenius(rel[j].coeff(i), s);
    return dim - rank(k, a);
}

namespace {

Matrix transpose(const Matrix& m)
{
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            t(j, i) = m(i, j);
    return t;
}

// Right multiplication by diag(d) on (k{xi}/xi^n)^r -> (k{xi}/xi^n)^g, images as rows.
Matrix truncated_relation_map(const Field& k, const NormalForm& nf, std::size_t gens, int n)
{
    std::size_t r = nf.diag.size();
    Matrix a(r * std::size_t(n), gens * std::size_t(n));
    for (std::size_t j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i)
            for (int s = 0; s + i < n && s <= nf.diag[j].deg(); ++s)
                a(j * n + std::size_t(i), j * n + std::size_t(i + s)) = k.frobenius(nf.diag[j].coeff(s), i);
    return a;
}

}  // namespace

CompletionResult derived_completion(const FPModule& m, int N)
{
    if (N < 3)
        throw std::invalid_argument("twisted: truncation level must be at least 3");
    const Field& k = *m.k;
    NormalForm nf = module_normal_form(m);
    std::size_t r = nf.diag.size(), g = m.gens;
    CompletionResult out;
    Matrix kerN;
    for (int n = 1; n <= N; ++n) {
        Matrix a = truncated_relation_map(k, nf, g, n);
        std::size_t rk = rank(k, a);
        out.quotient_dims.push_back(g * std::size_t(n) - rk);
        out.kernel_dims.push_back(r * std::size_t(n) - rk);
        if (n == N)
            kerN = kernel(k, transpose(a));
    }
    for (int n = 1; n <= N; ++n) {
        Matrix img(kerN.rows, r * std::size_t(n));
        for (std::size_t v = 0; v < kerN.rows; ++v)
            for (std::size_t j = 0; j < r; ++j)
                for (int i = 0; i < n; ++i)
                    img(v, j * n + std::size_t(i)) = kerN(v, j * N + std::size_t(i));
        out.kernel_image_dims.push_back(rank(k, img));
    }
    auto c = [&](int n) { return n == 0 ? std::size_t(0) : out.quotient_dims[n - 1]; };
    std::size_t f = c(N) - c(N - 1);
    int stable = N - 1;
    while (stable > 0 && c(stable) - c(stable - 1) == f)
        --stable;
    if (stable > N - 2)
        throw CompletionError("derived completion did not stabilize by level " + std::to_string(N) + "; increase N");
    out.stable_level = stable;
    out.free_rank = f;
    for (int e = 1; e <= stable; ++e) {
        std::size_t at_least = c(e) - c(e - 1) - f;
        std::size_t above = e < stable ? c(e + 1) - c(e) - f : 0;
        for (std::size_t i = above; i < at_least; ++i)
            out.torsion.push_back(e);
    }
    // Mittag-Leffler: the inverse limit of kernels is the stable image, read at level N - N*.
    out.l1_dim = out.kernel_image_dims[std::size_t(std::max(1, N - stable)) - 1];
    if (out.l1_dim != 0)
        throw CompletionError("derived completion: kernel tower not yet stable at level " + std::to_string(N) + "; increase N");
    return out;
}

bool is_derived_complete(const FPModule& m)
{
    NormalForm nf = module_normal_form(m);
    if (nf.free_rank)
        return false;
    for (const auto& d : nf.diag)
        if (d.valuation() != d.deg())
            return false;
    return true;
}

FPModule completion_truncation(const CompletionResult& r, FieldPtr k, int N)
{
    std::vector<TwistedPoly> d;
    for (std::size_t i = 0; i < r.free_rank; ++i)
        d.push_back(TwistedPoly::monomial(k, 1, N));
    for (int e : r.torsion)
        d.push_back(TwistedPoly::monomial(k, 1, e));
    return FPModule::diagonal(k, d, 0);
}

}  // namespace rla
