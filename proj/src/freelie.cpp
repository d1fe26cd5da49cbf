#include "rla/freelie.hpp"

#include "rla/koszul.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rla {

namespace {

Comb comb_mul(const Comb& x, const Comb& y, int p)
{
    Comb out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            comb_add(out, w, static_cast<long long>(a) * b, p);
        }
    return out;
}

Comb comb_bracket(const Comb& x, const Comb& y, int p)
{
    Comb out = comb_mul(x, y, p);
    comb_axpy(out, comb_mul(y, x, p), -1, p);
    return out;
}

Comb comb_power(const Comb& x, long long e, int p)
{
    Comb out{{Word{}, 1}};
    for (long long i = 0; i < e; ++i)
        out = comb_mul(out, x, p);
    return out;
}

bool is_lyndon(const Word& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i), w.end()))
            return false;
    return !w.empty();
}

long long factorial(int n)
{
    long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

int mobius(int n)
{
    int result = 1;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            n /= d;
            if (n % d == 0)
                return 0;
            result = -result;
        }
    return n > 1 ? -result : result;
}

unsigned __int128 multinomial(const std::vector<int>& mult)
{
    unsigned __int128 r = 1;
    int total = 0;
    for (int m : mult)
        for (int i = 1; i <= m; ++i) {
            ++total;
            r = r * static_cast<unsigned>(total) / static_cast<unsigned>(i);
        }
    return r;
}

Perm transposition(int n, int k)
{
    Perm t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k) + 1]);
    return t;
}

// Subsets of positions {k : block boundary does not fall between k and k+1}.
std::vector<int> adjacent_within_blocks(const std::vector<int>& comp)
{
    std::vector<int> ks;
    int pos = 0;
    for (int m : comp) {
        for (int i = 0; i + 1 < m; ++i)
            ks.push_back(pos + i);
        pos += m;
    }
    return ks;
}

std::vector<std::vector<int>> compositions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int m = 1; m <= left; ++m) {
            cur.push_back(m);
            self(self, left - m);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

long long choose(long long d, long long r)
{
    if (r < 0 || r > d)
        return 0;
    long long out = 1;
    for (long long i = 1; i <= r; ++i)
        out = out * (d - r + i) / i;
    return out;
}

struct InvariantSpace
{
    Matrix basis;  // rows in reduced echelon form
    std::vector<std::size_t> pivots;
};

// Coordinates of the relabeled element sum_b v_b basis_b in the Lie_n basis.
std::vector<Elt> relabel_vector(const Field& k, const LieOperad& lie, const std::vector<Comb>& expansions,
                                const std::vector<Elt>& v, const Perm& tau)
{
    std::vector<Elt> out(lie.dim(), 0);
    for (std::size_t b = 0; b < v.size(); ++b) {
        if (v[b] == 0)
            continue;
        for (const auto& [w, c] : expansions[b]) {
            if (tau[static_cast<std::size_t>(w[0])] != 0)
                continue;
            Word r(w.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                r[i] = tau[static_cast<std::size_t>(w[i])];
            std::size_t row = lie.index.at(r);
            out[row] = k.add(out[row], k.mul(v[b], k.from_int(c)));
        }
    }
    return out;
}

std::vector<Comb> basis_expansions(const LieOperad& lie, int p)
{
    std::vector<Comb> out;
    out.reserve(lie.dim());
    for (const auto& w : lie.basis)
        out.push_back(left_normed_expansion(w, p));
    return out;
}

// rho(s) - I for each listed adjacent transposition, stacked as rows of a matrix whose
// kernel is the fixed subspace. Columns of rho are the relabeled basis vectors.
Matrix stacked_moves(const Field& k, const LieOperad& lie, const std::vector<int>& ks)
{
    std::size_t m = lie.dim();
    Matrix out(ks.size() * m, m);
    for (std::size_t t = 0; t < ks.size(); ++t) {
        Matrix rho = lie.action(k, transposition(lie.n, ks[t]));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                out(t * m + i, j) = k.sub(rho(i, j), i == j ? 1 : 0);
    }
    return out;
}

InvariantSpace fixed_space(const Field& k, const LieOperad& lie, const std::vector<int>& ks)
{
    InvariantSpace inv;
    if (ks.empty()) {
        inv.basis = identity(lie.dim());
    } else {
        inv.basis = kernel(k, stacked_moves(k, lie, ks));
    }
    inv.pivots = row_reduce(k, inv.basis, true);
    return inv;
}

std::vector<Perm> young_subgroup(const std::vector<int>& comp)
{
    int n = std::accumulate(comp.begin(), comp.end(), 0);
    std::vector<Perm> out;
    Perm id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    out.push_back(id);
    int pos = 0;
    for (int m : comp) {
        std::vector<Perm> next;
        std::vector<int> block(static_cast<std::size_t>(m));
        std::iota(block.begin(), block.end(), pos);
        for (const auto& g : out) {
            std::vector<int> b = block;
            do {
                Perm h = g;
                for (int i = 0; i < m; ++i)
                    h[static_cast<std::size_t>(pos + i)] = b[static_cast<std::size_t>(i)];
                next.push_back(h);
            } while (std::next_permutation(b.begin(), b.end()));
        }
        out = std::move(next);
        pos += m;
    }
    return out;
}

// Sorted tuples of length n over 0..d-1 (orbit representatives).
std::vector<Word> sorted_tuples(std::size_t d, int n)
{
    std::vector<Word> out;
    if (d == 0)
        return out;
    Word cur(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == static_cast<int>(d) - 1)
            --i;
        if (i < 0)
            break;
        int v = cur[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j)
            cur[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

std::vector<int> tuple_pattern(const Word& x)
{
    std::vector<int> ks;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] == x[i + 1])
            ks.push_back(static_cast<int>(i));
    return ks;
}

// tau with y[tau[j]] = x[j], choosing positions in increasing order within each value.
Perm arrangement_perm(const Word& x, const Word& y)
{
    Perm tau(x.size());
    std::vector<bool> used(y.size(), false);
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = 0; i < y.size(); ++i)
            if (!used[i] && y[i] == x[j]) {
                used[i] = true;
                tau[j] = static_cast<int>(i);
                break;
            }
    return tau;
}

}  // namespace

Comb left_normed_expansion(const Word& letters, int p)
{
    Comb acc{{Word{letters.at(0)}, 1}};
    for (std::size_t i = 1; i < letters.size(); ++i)
        acc = comb_bracket(acc, Comb{{Word{letters[i]}, 1}}, p);
    return acc;
}

LieOperad lie_operad_basis(int n)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("lie_operad_basis: n must be in 1..7");
    LieOperad lie;
    lie.n = n;
    Word rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    do {
        Word w{0};
        w.insert(w.end(), rest.begin(), rest.end());
        lie.index[w] = lie.basis.size();
        lie.basis.push_back(w);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return lie;
}

Matrix LieOperad::action(const Field& k, const Perm& tau) const
{
    if (static_cast<int>(tau.size()) != n)
        throw std::invalid_argument("LieOperad::action: permutation size mismatch");
    std::vector<Comb> exps = basis_expansions(*this, k.p());
    Matrix out(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        std::vector<Elt> e(dim(), 0);
        e[b] = 1;
        std::vector<Elt> col = relabel_vector(k, *this, exps, e, tau);
        for (std::size_t i = 0; i < dim(); ++i)
            out(i, b) = col[i];
    }
    return out;
}

std::vector<Word> lyndon_words(const std::vector<int>& mult)
{
    Word w;
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (int j = 0; j < mult[i]; ++j)
            w.push_back(static_cast<int>(i));
    std::vector<Word> out;
    if (w.empty())
        return out;
    do {
        if (is_lyndon(w))
            out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Comb lyndon_bracket(const Word& w, int p)
{
    if (w.size() == 1)
        return Comb{{w, 1}};
    // Standard factorization: v is the longest proper Lyndon suffix.
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v(w.begin() + static_cast<long>(i), w.end());
        if (is_lyndon(v)) {
            Word u(w.begin(), w.begin() + static_cast<long>(i));
            return comb_bracket(lyndon_bracket(u, p), lyndon_bracket(v, p), p);
        }
    }
    throw std::logic_error("lyndon_bracket: not a Lyndon word");
}

long long lyndon_count(const std::vector<int>& mult)
{
    int total = std::accumulate(mult.begin(), mult.end(), 0);
    if (total == 0)
        return 0;
    int g = 0;
    for (int m : mult)
        g = std::gcd(g, m);
    __int128 sum = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d != 0 || mobius(d) == 0)
            continue;
        std::vector<int> q;
        for (int m : mult)
            q.push_back(m / d);
        sum += static_cast<__int128>(mobius(d)) * static_cast<__int128>(multinomial(q));
    }
    // sum over d of mu(d) (N/d)!/prod(m_i/d)! equals N times the Lyndon count.
    return static_cast<long long>(sum / total);
}

long long primitive_count(const std::vector<int>& mult, int p, bool restricted)
{
    long long out = lyndon_count(mult);
    if (!restricted)
        return out;
    std::vector<int> q = mult;
    while (true) {
        bool divisible = std::any_of(q.begin(), q.end(), [](int m) { return m > 0; });
        for (int m : q)
            if (m % p != 0)
                divisible = false;
        if (!divisible)
            break;
        for (int& m : q)
            m /= p;
        out += lyndon_count(q);
    }
    return out;
}

double lie_budget_cost(const std::vector<std::size_t>& dims, int n, int qmax)
{
    double cost = 0;
    for (int q = 0; q <= qmax && q < static_cast<int>(dims.size()); ++q)
        cost += std::pow(static_cast<double>(dims[static_cast<std::size_t>(q)]), n) * static_cast<double>(factorial(n - 1));
    return cost;
}

LiePowerDims lie_power_dims(const std::vector<std::size_t>& dims, int n, int p)
{
    LieOperad lie = lie_operad_basis(n);
    FieldPtr k = make_field(p);
    long long m = static_cast<long long>(lie.dim());
    std::vector<std::vector<int>> comps = compositions(n);
    std::vector<long long> inv(comps.size()), coinv(comps.size()), norm(comps.size());
    std::vector<Comb> exps = basis_expansions(lie, p);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::vector<int> ks = adjacent_within_blocks(comps[c]);
        if (ks.empty()) {
            inv[c] = coinv[c] = norm[c] = m;
            continue;
        }
        std::size_t r = rank(*k, stacked_moves(*k, lie, ks));
        inv[c] = m - static_cast<long long>(r);
        coinv[c] = m - static_cast<long long>(r);
        Matrix sum(lie.dim(), lie.dim());
        for (const auto& h : young_subgroup(comps[c]))
            for (std::size_t b = 0; b < lie.dim(); ++b) {
                std::vector<Elt> e(lie.dim(), 0);
                e[b] = 1;
                std::vector<Elt> col = relabel_vector(*k, lie, exps, e, h);
                for (std::size_t i = 0; i < lie.dim(); ++i)
                    sum(i, b) = k->add(sum(i, b), col[i]);
            }
        norm[c] = static_cast<long long>(rank(*k, sum));
    }
    LiePowerDims out;
    for (std::size_t d : dims) {
        long long a = 0, b = 0, c2 = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            long long ways = choose(static_cast<long long>(d), static_cast<long long>(comps[c].size()));
            a += ways * inv[c];
            b += ways * coinv[c];
            c2 += ways * norm[c];
        }
        out.invariants.push_back(a);
        out.coinvariants.push_back(b);
        out.norm_image.push_back(c2);
    }
    return out;
}

SimplicialVectorSpace restricted_lie_power(const SimplicialVectorSpace& v, int n, double budget)
{
    LieOperad lie = lie_operad_basis(n);
    if (lie_budget_cost(v.dims, n, v.top) > budget)
        throw SizeError("restricted_lie_power: size budget exceeded");
    const Field& k = *v.k;
    int p = k.p();
    std::vector<Comb> exps = basis_expansions(lie, p);

    struct Level
    {
        std::vector<Word> reps;
        std::map<Word, std::size_t> rep_index;
        std::vector<const InvariantSpace*> space;
        std::vector<std::size_t> offset;
        std::size_t dim = 0;
    };
    std::map<std::vector<int>, InvariantSpace> cache;
    std::vector<Level> levels(static_cast<std::size_t>(v.top) + 1);
    for (int q = 0; q <= v.top; ++q) {
        Level& lv = levels[static_cast<std::size_t>(q)];
        lv.reps = sorted_tuples(v.dims[static_cast<std::size_t>(q)], n);
        for (const auto& x : lv.reps) {
            std::vector<int> ks = tuple_pattern(x);
            auto it = cache.find(ks);
            if (it == cache.end())
                it = cache.emplace(ks, fixed_space(k, lie, ks)).first;
            lv.rep_index[x] = lv.space.size();
            lv.space.push_back(&it->second);
            lv.offset.push_back(lv.dim);
            lv.dim += it->second.pivots.size();
        }
    }

    // Matrix of the map induced by op: V_src -> V_dst.
    auto induced = [&](const SparseMatrix& op, const Level& src, const Level& dst) {
        SparseMatrix out(dst.dim, src.dim);
        for (std::size_t o = 0; o < src.reps.size(); ++o) {
            const Word& x = src.reps[o];
            const InvariantSpace& sp = *src.space[o];
            for (std::size_t j = 0; j < sp.pivots.size(); ++j) {
                std::vector<Elt> vj(lie.dim());
                for (std::size_t b = 0; b < lie.dim(); ++b)
                    vj[b] = sp.basis(j, b);
                std::map<Word, std::vector<Elt>> image;
                Word y = x;
                do {
                    std::vector<Elt> u = relabel_vector(k, lie, exps, vj, arrangement_perm(x, y));
                    // Expand op^{(x)n} applied to y, keeping sorted target tuples.
                    std::vector<std::pair<Word, Elt>> partial{{Word{}, 1}};
                    for (int letter : y) {
                        std::vector<std::pair<Word, Elt>> next;
                        for (const auto& [z, c] : partial)
                            for (const auto& [row, val] : op.col[static_cast<std::size_t>(letter)]) {
                                int r = static_cast<int>(row);
                                if (!z.empty() && r < z.back())
                                    continue;
                                Word z2 = z;
                                z2.push_back(r);
                                next.emplace_back(std::move(z2), k.mul(c, val));
                            }
                        partial = std::move(next);
                    }
                    for (const auto& [z, c] : partial) {
                        auto& acc = image[z];
                        acc.resize(lie.dim(), 0);
                        for (std::size_t b = 0; b < lie.dim(); ++b)
                            acc[b] = k.add(acc[b], k.mul(c, u[b]));
                    }
                } while (std::next_permutation(y.begin(), y.end()));
                std::size_t col = src.offset[o] + j;
                for (const auto& [z, vec] : image) {
                    std::size_t to = dst.rep_index.at(z);
                    const InvariantSpace& tsp = *dst.space[to];
                    for (std::size_t i = 0; i < tsp.pivots.size(); ++i) {
                        Elt c = vec[tsp.pivots[i]];
                        if (c != 0)
                            out.set(dst.offset[to] + i, col, c);
                    }
                }
            }
        }
        return out;
    };

    SimplicialVectorSpace out;
    out.k = v.k;
    out.top = v.top;
    for (const auto& lv : levels)
        out.dims.push_back(lv.dim);
    out.face.resize(static_cast<std::size_t>(v.top) + 1);
    out.degen.resize(static_cast<std::size_t>(v.top) + 1);
    for (int q = 0; q <= v.top; ++q) {
        auto uq = static_cast<std::size_t>(q);
        if (q >= 1)
            for (int i = 0; i <= q; ++i)
                out.face[uq].push_back(induced(v.face[uq][static_cast<std::size_t>(i)], levels[uq], levels[uq - 1]));
        if (q < v.top)
            for (int i = 0; i <= q; ++i)
                out.degen[uq].push_back(induced(v.degen[uq][static_cast<std::size_t>(i)], levels[uq], levels[uq + 1]));
    }
    return out;
}

namespace {

struct OracleLevel
{
    std::size_t d = 0;
    std::vector<std::vector<int>> face;          // face[i][x] = target letter or -1
    std::vector<std::vector<bool>> degen_image;  // degen_image[i][x]: x lies in the image of s_i
    std::vector<std::vector<std::pair<Word, int>>> chains;
};

std::vector<int> letter_map(const SparseMatrix& m)
{
    std::vector<int> f(m.cols, -1);
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!m.col[c].empty())
            f[c] = static_cast<int>(m.col[c][0].first);
    return f;
}

bool degenerate_content(const OracleLevel& lv, const Word& letters)
{
    for (const auto& img : lv.degen_image) {
        bool all = true;
        for (int x : letters)
            if (!img[static_cast<std::size_t>(x)]) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

std::vector<OracleLevel> oracle_levels(const SimplicialVectorSpace& v, int n, int max_q, const OracleOptions& opt)
{
    if (n < 1)
        throw std::invalid_argument("homotopy_oracle: n must be positive");
    if (v.top < max_q + 1)
        throw std::invalid_argument("homotopy_oracle: simplicial degree max_q + 1 is not available");
    if (lie_budget_cost(v.dims, n, max_q + 1) > opt.budget)
        throw SizeError("homotopy_oracle: size budget exceeded");
    int p = v.k->p();
    std::vector<OracleLevel> levels(static_cast<std::size_t>(max_q) + 2);
    for (int q = 0; q <= max_q + 1; ++q) {
        auto uq = static_cast<std::size_t>(q);
        OracleLevel& lv = levels[uq];
        lv.d = v.dims[uq];
        if (std::pow(static_cast<long double>(lv.d) + 1, n) > 9e18L)
            throw SizeError("homotopy_oracle: word keys overflow");
        if (q >= 1) {
            for (const auto& m : v.face[uq])
                lv.face.push_back(letter_map(m));
            for (const auto& m : v.degen[uq - 1]) {
                std::vector<bool> img(lv.d, false);
                for (const auto& c : m.col)
                    for (const auto& [row, val] : c)
                        img[row] = true;
                lv.degen_image.push_back(img);
            }
        }
        for (const Word& content : sorted_tuples(lv.d, n)) {
            Word letters = content;
            letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
            if (degenerate_content(lv, letters))
                continue;
            std::vector<int> mult(letters.size(), 0);
            for (int x : content)
                ++mult[static_cast<std::size_t>(std::lower_bound(letters.begin(), letters.end(), x) - letters.begin())];
            long long power = 1;
            std::vector<int> base = mult;
            while (true) {
                for (const Word& w : lyndon_words(base)) {
                    Comb c = comb_power(lyndon_bracket(w, p), power, p);
                    std::vector<std::pair<Word, int>> vec;
                    for (const auto& [word, coef] : c) {
                        Word global(word.size());
                        for (std::size_t i = 0; i < word.size(); ++i)
                            global[i] = letters[static_cast<std::size_t>(word[i])];
                        vec.emplace_back(std::move(global), coef);
                    }
                    lv.chains.push_back(std::move(vec));
                }
                if (!opt.restricted)
                    break;
                bool divisible = true;
                for (int m : base)
                    if (m % p != 0)
                        divisible = false;
                if (!divisible)
                    break;
                for (int& m : base)
                    m /= p;
                power *= p;
            }
        }
    }
    return levels;
}

std::size_t word_key(const Word& w, std::size_t base)
{
    std::size_t key = 0;
    for (int x : w)
        key = key * base + static_cast<std::size_t>(x);
    return key;
}

}  // namespace

std::vector<long long> oracle_chain_dims(const SimplicialVectorSpace& v, int n, int max_q, const OracleOptions& opt)
{
    if (!v.basis_type())
        throw std::invalid_argument("oracle_chain_dims: requires basis-type faces and degeneracies");
    std::vector<long long> out;
    for (const auto& lv : oracle_levels(v, n, max_q, opt))
        out.push_back(static_cast<long long>(lv.chains.size()));
    return out;
}

std::vector<long long> homotopy_oracle(const SimplicialVectorSpace& v, int n, int max_q, const OracleOptions& opt)
{
    if (!v.basis_type()) {
        if (!opt.restricted)
            throw std::invalid_argument("homotopy_oracle: free Lie powers need basis-type input");
        if (v.top < max_q + 1)
            throw std::invalid_argument("homotopy_oracle: simplicial degree max_q + 1 is not available");
        SimplicialVectorSpace trunc = v;
        trunc.top = max_q + 1;
        trunc.dims.resize(static_cast<std::size_t>(max_q) + 2);
        trunc.face.resize(static_cast<std::size_t>(max_q) + 2);
        trunc.degen.resize(static_cast<std::size_t>(max_q) + 2);
        trunc.degen[static_cast<std::size_t>(max_q) + 1].clear();
        if (lie_budget_cost(trunc.dims, n, max_q + 1) > opt.budget)
            throw SizeError("homotopy_oracle: size budget exceeded");
        std::vector<long long> pi = simplicial_homotopy(restricted_lie_power(trunc, n, opt.budget));
        pi.resize(static_cast<std::size_t>(max_q) + 1, 0);
        return pi;
    }
    std::vector<OracleLevel> levels = oracle_levels(v, n, max_q, opt);
    FieldPtr k = make_field(v.k->p());
    // ranks[q] = rank of the normalized boundary C_q -> C_{q-1}.
    std::vector<long long> ranks(levels.size() + 1, 0);
    for (std::size_t q = 1; q < levels.size(); ++q) {
        const OracleLevel& src = levels[q];
        const OracleLevel& dst = levels[q - 1];
        std::size_t base = std::max<std::size_t>(dst.d, 1);
        SparseEchelon ech(*k);
        for (const auto& vec : src.chains) {
            std::map<std::size_t, Elt> row;
            for (std::size_t i = 0; i < src.face.size(); ++i) {
                const std::vector<int>& f = src.face[i];
                Word image_letters;
                bool zero = false;
                for (int x : vec.front().first) {
                    int y = f[static_cast<std::size_t>(x)];
                    if (y < 0) {
                        zero = true;
                        break;
                    }
                    image_letters.push_back(y);
                }
                if (zero)
                    continue;
                std::sort(image_letters.begin(), image_letters.end());
                image_letters.erase(std::unique(image_letters.begin(), image_letters.end()), image_letters.end());
                if (degenerate_content(dst, image_letters))
                    continue;
                Elt sign = (i % 2 == 0) ? 1 : k->neg(1);
                for (const auto& [w, c] : vec) {
                    Word t(w.size());
                    for (std::size_t j = 0; j < w.size(); ++j)
                        t[j] = f[static_cast<std::size_t>(w[j])];
                    Elt& slot = row[word_key(t, base)];
                    slot = k->add(slot, k->mul(sign, k->from_int(c)));
                }
            }
            for (auto it = row.begin(); it != row.end();)
                it = it->second == 0 ? row.erase(it) : std::next(it);
            if (!row.empty())
                ech.add(std::move(row));
        }
        ranks[q] = static_cast<long long>(ech.rank());
    }
    std::vector<long long> pi;
    for (int q = 0; q <= max_q; ++q) {
        auto uq = static_cast<std::size_t>(q);
        pi.push_back(static_cast<long long>(levels[uq].chains.size()) - ranks[uq] - ranks[uq + 1]);
    }
    return pi;
}

long long closed_form_dim(int p, int l, int stem, long long n)
{
    if (l < 1)
        throw std::invalid_argument("closed_form_dim: l must be positive");
    if (n < 1 || stem < 0)
        return 0;
    int s = -1;
    for (long long m = 1, e = 0; m <= n; m *= p, ++e)
        if (m == n)
            s = static_cast<int>(e);
    bool split = (p != 2 && l % 2 == 1);
    long long dim = 0;
    if (s >= 0) {
        if (!split)
            dim += ext_dims_closed(p, {{l + 1, 1}}, Flavor::module, s, stem + s + 1).dim;
        else
            dim += ext_dims_closed(p, {{l, 1}}, Flavor::strong, s, stem + s).dim;
    }
    if (split && n % 2 == 0) {
        int h = -1;
        for (long long m = 1, e = 0; 2 * m <= n; m *= p, ++e)
            if (2 * m == n)
                h = static_cast<int>(e);
        if (h >= 0)
            dim += ext_dims_closed(p, {{2 * l + 1, 1}}, Flavor::strong, h, stem + h + 1).dim;
    }
    return dim;
}

HomotopyChart homotopy_closed_form(int p, int l, int s_max, int stem_max)
{
    if (l < 1)
        throw std::invalid_argument("homotopy_closed_form: l must be positive");
    HomotopyChart chart{p, l, {}};
    std::vector<long long> ns;
    for (long long m = 1, s = 0; s <= s_max; m *= p, ++s) {
        ns.push_back(m);
        if (p != 2 && l % 2 == 1)
            ns.push_back(2 * m);
    }
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (long long n : ns)
        for (int stem = 0; stem <= stem_max; ++stem) {
            long long d = closed_form_dim(p, l, stem, n);
            if (d != 0)
                chart.dims[{stem, n}] = d;
        }
    return chart;
}

CurtisReport curtis_split_check(const SimplicialVectorSpace& v, int n, int max_q)
{
    if (v.top < max_q + 1)
        throw std::invalid_argument("curtis_split_check: simplicial degree max_q + 1 is not available");
    CurtisReport r;
    r.p = v.k->p();
    r.n = n;
    r.max_q = max_q;
    std::vector<std::size_t> dims(v.dims.begin(), v.dims.begin() + max_q + 1);
    LiePowerDims big = lie_power_dims(dims, r.p * n, r.p);
    LiePowerDims small = lie_power_dims(dims, n, r.p);
    r.lr_pn = big.invariants;
    r.l_pn = big.norm_image;
    r.coinv_pn = big.coinvariants;
    r.lr_n = small.invariants;
    for (int q = 0; q <= max_q; ++q) {
        auto uq = static_cast<std::size_t>(q);
        if (r.lr_pn[uq] != r.lr_n[uq] + r.l_pn[uq])
            r.identity_holds = false;
    }
    std::vector<long long> piv = homotopy_oracle(v, 1, max_q);
    r.connectivity = max_q;
    for (int q = 0; q <= max_q; ++q)
        if (piv[static_cast<std::size_t>(q)] != 0) {
            r.connectivity = q - 1;
            break;
        }
    for (int m : {n, r.p * n}) {
        int lg = 0;
        while ((1 << lg) < m)
            ++lg;
        r.bound[m] = r.connectivity + lg;
        OracleOptions opt;
        opt.restricted = false;
        std::vector<long long> pi = homotopy_oracle(v, m, max_q, opt);
        r.lie_homotopy[m] = pi;
        for (int q = 0; q <= std::min(r.bound[m], max_q); ++q)
            if (pi[static_cast<std::size_t>(q)] != 0)
                r.connectivity_holds = false;
    }
    return r;
}

namespace {

using Bigraded = std::map<std::pair<int, int>, long long>;  // (degree, weight) -> dim

std::string bracket_name(const Word& w)
{
    if (w.size() == 1)
        return "x" + std::to_string(w[0] + 1);
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v(w.begin() + static_cast<long>(i), w.end());
        if (is_lyndon(v))
            return "[" + bracket_name(Word(w.begin(), w.begin() + static_cast<long>(i))) + "," + bracket_name(v) + "]";
    }
    return "?";
}

// Bigraded dims of the free restricted Lie algebra on letters of the given degrees, where
// every letter carries letter weight `unit`.
Bigraded free_dims(int p, const std::vector<int>& letter_degrees, int unit, int weight_bound, int degree_bound)
{
    Bigraded out;
    std::vector<int> mult(letter_degrees.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int count, int degree) -> void {
        if (i == letter_degrees.size()) {
            if (count == 0)
                return;
            long long d = primitive_count(mult, p, true);
            if (d != 0)
                out[{degree, count * unit}] += d;
            return;
        }
        for (int m = 0;; ++m) {
            int c = count + m;
            int deg = degree + m * letter_degrees[i];
            if (c * unit > weight_bound || deg > degree_bound)
                break;
            mult[i] = m;
            self(self, i + 1, c, deg);
        }
        mult[i] = 0;
    };
    rec(rec, 0, 0, 0);
    return out;
}

std::vector<int> letters_of(const std::map<int, int>& dims)
{
    std::vector<int> out;
    for (const auto& [deg, d] : dims)
        for (int i = 0; i < d; ++i)
            out.push_back(deg);
    return out;
}

}  // namespace

HMReport hilton_milnor_dims(int p, const std::map<int, int>& v1, const std::map<int, int>& v2, int weight_bound,
                            int degree_bound)
{
    if (weight_bound < 1)
        throw std::invalid_argument("hilton_milnor_dims: weight bound must be positive");
    for (const auto& dims : {v1, v2})
        for (const auto& [deg, d] : dims)
            if (deg < 0 || d < 0)
                throw std::invalid_argument("hilton_milnor_dims: degrees and dimensions must be nonnegative");
    HMReport r;
    std::vector<int> l1 = letters_of(v1), l2 = letters_of(v2);
    std::vector<int> both = l1;
    both.insert(both.end(), l2.begin(), l2.end());
    Bigraded rhs = free_dims(p, both, 1, weight_bound, degree_bound);
    Bigraded lhs;
    for (int len = 1; len <= weight_bound; ++len)
        for (int a = len; a >= 0; --a)
            for (const Word& w : lyndon_words({a, len - a})) {
                r.hall_words.push_back(bracket_name(w));
                // Graded dims of w(V1, V2) = V_{w_1} (x) ... (x) V_{w_len}.
                std::map<int, long long> tensor{{0, 1}};
                for (int letter : w) {
                    std::map<int, long long> next;
                    for (const auto& [d0, c0] : tensor)
                        for (const auto& [d1, c1] : (letter == 0 ? v1 : v2))
                            next[d0 + d1] += c0 * c1;
                    tensor = std::move(next);
                }
                std::vector<int> letters;
                for (const auto& [deg, c] : tensor)
                    for (long long i = 0; i < c; ++i)
                        letters.push_back(deg);
                for (const auto& [cell, d] : free_dims(p, letters, len, weight_bound, degree_bound))
                    lhs[cell] += d;
            }
    for (int deg = 0; deg <= degree_bound; ++deg)
        for (int wt = 1; wt <= weight_bound; ++wt) {
            long long a = lhs.count({deg, wt}) ? lhs.at({deg, wt}) : 0;
            long long b = rhs.count({deg, wt}) ? rhs.at({deg, wt}) : 0;
            if (a == 0 && b == 0)
                continue;
            r.cells.push_back({deg, wt, a, b});
            if (a != b)
                r.pass = false;
        }
    return r;
}

}  // namespace rla
