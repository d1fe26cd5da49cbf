#include "rla/hopf.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace rla {

namespace {

struct DegLex
{
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

Vec vec_add(const Field& k, Vec a, const Vec& b, Elt scale = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = k.add(a[i], k.mul(scale, b[i]));
    return a;
}

Vec mat_vec(const Field& k, const Matrix& m, const Vec& v)
{
    Vec out(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out[i] = k.add(out[i], k.mul(m(i, j), v[j]));
    return out;
}

bool vec_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](Elt e) { return e == 0; });
}

std::string word_str(const Word& w, const std::vector<std::string>& labels)
{
    std::string s;
    for (int x : w)
        s += (s.empty() ? "" : " ") + labels[static_cast<std::size_t>(x)];
    return s.empty() ? "1" : s;
}

void add_term(std::map<Word, Elt>& into, const Field& k, const Word& w, Elt c)
{
    if (c == 0)
        return;
    Elt& slot = into[w];
    slot = k.add(slot, c);
    if (slot == 0)
        into.erase(w);
}

RestrictedLie empty_lie(FieldPtr k, std::size_t n)
{
    RestrictedLie l;
    l.k = std::move(k);
    l.labels.resize(n);
    l.bracket.assign(n, std::vector<Vec>(n, Vec(n, 0)));
    l.xi.assign(n, Vec(n, 0));
    return l;
}

}  // namespace

Vec RestrictedLie::basis_vector(std::size_t i) const
{
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
}

Vec RestrictedLie::br(const Vec& x, const Vec& y) const
{
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (y[j] != 0)
                out = vec_add(*k, out, bracket[i][j], k->mul(x[i], y[j]));
    }
    return out;
}

Matrix RestrictedLie::ad(const Vec& x) const
{
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        Vec c = br(x, basis_vector(j));
        for (std::size_t i = 0; i < dim(); ++i)
            m(i, j) = c[i];
    }
    return m;
}

std::vector<Vec> jacobson_terms(const RestrictedLie& l, const Vec& x, const Vec& y)
{
    const Field& k = *l.k;
    int p = k.p();
    std::vector<Vec> poly{x};  // coefficients of t^j
    for (int step = 0; step < p - 1; ++step) {
        std::vector<Vec> next(poly.size() + 1, Vec(l.dim(), 0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = vec_add(k, next[j + 1], l.br(x, poly[j]));
            next[j] = vec_add(k, next[j], l.br(y, poly[j]));
        }
        poly = std::move(next);
    }
    poly.resize(static_cast<std::size_t>(p - 1));
    return poly;
}

Vec RestrictedLie::xi_of(const Vec& x) const
{
    const Field& kk = *k;
    int p = kk.p();
    Vec acc(dim(), 0), xacc(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        Vec term(dim(), 0);
        term[i] = x[i];
        Vec xterm = vec_add(kk, Vec(dim(), 0), xi[i], kk.pow(x[i], static_cast<long long>(p)));
        Vec next = vec_add(kk, xacc, xterm);
        std::vector<Vec> s = jacobson_terms(*this, acc, term);
        for (int j = 1; j < p; ++j)
            next = vec_add(kk, next, s[static_cast<std::size_t>(j - 1)], kk.inv(kk.from_int(j)));
        xacc = std::move(next);
        acc[i] = x[i];
    }
    return xacc;
}

std::string RestrictedLie::vec_str(const Vec& x) const
{
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (x[i] != 1)
            s += k->str(x[i]) + "*";
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

RestrictedLie abelian_lie(FieldPtr k, const std::vector<int>& weights)
{
    RestrictedLie l = empty_lie(std::move(k), weights.size());
    l.weights = weights;
    for (std::size_t i = 0; i < weights.size(); ++i)
        l.labels[i] = "a" + std::to_string(i);
    return l;
}

RestrictedLie heisenberg_lie(FieldPtr k)
{
    RestrictedLie l = empty_lie(std::move(k), 3);
    l.labels = {"x", "y", "z"};
    l.weights = {1, 1, 2};
    l.bracket[0][1][2] = 1;
    l.bracket[1][0][2] = l.k->neg(1);
    return l;
}

RestrictedLie module_lie(FieldPtr k, const FPModule& m, int weight_bound)
{
    NormalForm nf = module_normal_form(m);
    int p = k->p();
    std::vector<int> lengths;  // -1 for free summands
    for (const auto& d : nf.diag) {
        if (d.deg() != d.valuation())
            throw std::invalid_argument("module_lie: summand " + d.str() + " is not graded");
        if (d.deg() > 0)
            lengths.push_back(d.deg());
    }
    for (std::size_t i = 0; i < nf.free_rank; ++i)
        lengths.push_back(-1);
    std::vector<std::pair<std::size_t, int>> cells;  // (summand, power of xi)
    for (std::size_t r = 0; r < lengths.size(); ++r) {
        long long w = 1;
        for (int i = 0; (lengths[r] < 0 || i < lengths[r]) && w <= weight_bound; ++i, w *= p)
            cells.emplace_back(r, i);
    }
    RestrictedLie l = empty_lie(std::move(k), cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        auto [r, i] = cells[c];
        l.labels[c] = (i == 0 ? "" : (i == 1 ? std::string("x") : "x^" + std::to_string(i))) + "e" + std::to_string(r);
        long long w = 1;
        for (int j = 0; j < i; ++j)
            w *= p;
        l.weights.push_back(static_cast<int>(w));
        if (c + 1 < cells.size() && cells[c + 1] == std::make_pair(r, i + 1))
            l.xi[c][c + 1] = 1;
    }
    return l;
}

RestrictedLie free_module_lie(FieldPtr k, int rank, int weight_bound)
{
    FPModule m = FPModule::free(k, static_cast<std::size_t>(rank));
    return module_lie(std::move(k), m, weight_bound);
}

RestrictedLie sl2_lie(FieldPtr k, bool correct_xi)
{
    RestrictedLie l = empty_lie(std::move(k), 3);
    const Field& f = *l.k;
    l.labels = {"e", "h", "f"};
    Elt two = f.from_int(2);
    l.bracket[1][0][0] = two;
    l.bracket[0][1][0] = f.neg(two);
    l.bracket[1][2][2] = f.neg(two);
    l.bracket[2][1][2] = two;
    l.bracket[0][2][1] = 1;
    l.bracket[2][0][1] = f.neg(1);
    l.xi[1][1] = 1;
    if (!correct_xi)
        l.xi[0][0] = 1;
    return l;
}

LieValidation validate_restricted_lie(const RestrictedLie& l)
{
    const Field& k = *l.k;
    int p = k.p();
    std::size_t n = l.dim();
    LieValidation r;
    auto fail = [&](const std::string& what, const Vec& x, const Vec& y) {
        r.ok = false;
        r.failure = what;
        r.witness = std::make_pair(x, y);
        r.witness_str = "(" + l.vec_str(x) + ", " + l.vec_str(y) + ")";
        return r;
    };
    if (l.bracket.size() != n || l.xi.size() != n || (!l.weights.empty() && l.weights.size() != n))
        throw std::invalid_argument("validate_restricted_lie: inconsistent sizes");
    for (std::size_t i = 0; i < n; ++i) {
        if (l.bracket[i].size() != n || l.xi[i].size() != n)
            throw std::invalid_argument("validate_restricted_lie: inconsistent sizes");
        for (std::size_t j = 0; j < n; ++j)
            if (l.bracket[i][j].size() != n)
                throw std::invalid_argument("validate_restricted_lie: inconsistent sizes");
    }
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(l.basis_vector(i));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!vec_zero(vec_add(k, l.bracket[i][j], l.bracket[j][i])) || (i == j && !vec_zero(l.bracket[i][i])))
                return fail("antisymmetry", e[i], e[j]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Vec j = l.br(e[a], l.br(e[b], e[c]));
                j = vec_add(k, j, l.br(e[b], l.br(e[c], e[a])));
                j = vec_add(k, j, l.br(e[c], l.br(e[a], e[b])));
                if (!vec_zero(j))
                    return fail("Jacobi on (" + l.labels[a] + ", " + l.labels[b] + ", " + l.labels[c] + ")", e[a], e[b]);
            }
    if (!l.weights.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (l.weights[i] < 1)
                throw std::invalid_argument("validate_restricted_lie: weights must be positive");
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t c = 0; c < n; ++c)
                    if (l.bracket[i][j][c] != 0 && l.weights[c] != l.weights[i] + l.weights[j])
                        return fail("bracket does not preserve weight", e[i], e[j]);
            for (std::size_t c = 0; c < n; ++c)
                if (l.xi[i][c] != 0 && l.weights[c] != p * l.weights[i])
                    return fail("xi does not multiply weight by p", e[i], e[i]);
        }
    }

    // ad(xi(x)) = ad(x)^p, first on the basis, then on sample vectors.
    std::vector<Vec> sample = e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (Elt a = 1; a < std::min<Elt>(static_cast<Elt>(k.order()), 4); ++a)
                sample.push_back(vec_add(k, e[i], e[j], a));
    std::mt19937 rng(12345);
    for (int t = 0; t < 8 && n > 0; ++t) {
        Vec v(n);
        for (auto& c : v)
            c = static_cast<Elt>(rng() % static_cast<unsigned>(k.order()));
        sample.push_back(v);
    }
    for (const Vec& x : sample) {
        Matrix lhs = l.ad(l.xi_of(x));
        Matrix rhs = identity(n), adx = l.ad(x);
        for (int i = 0; i < p; ++i)
            rhs = mat_mul(k, rhs, adx);
        if (!mat_equal(lhs, rhs)) {
            for (const Vec& y : e)
                if (mat_vec(k, lhs, y) != mat_vec(k, rhs, y))
                    return fail("ad(xi(x)) != ad(x)^p", x, y);
        }
    }
    for (const Vec& x : sample)
        for (Elt a = 0; a < std::min<Elt>(static_cast<Elt>(k.order()), 16); ++a) {
            Vec ax(n);
            for (std::size_t i = 0; i < n; ++i)
                ax[i] = k.mul(a, x[i]);
            Vec want(n);
            Vec xx = l.xi_of(x);
            Elt ap = k.pow(a, static_cast<long long>(p));
            for (std::size_t i = 0; i < n; ++i)
                want[i] = k.mul(ap, xx[i]);
            if (l.xi_of(ax) != want)
                return fail("xi(a x) != a^p xi(x)", ax, x);
        }
    for (const Vec& x : sample)
        for (const Vec& y : sample) {
            Vec want = vec_add(k, l.xi_of(x), l.xi_of(y));
            std::vector<Vec> s = jacobson_terms(l, x, y);
            for (int i = 1; i < p; ++i)
                want = vec_add(k, want, s[static_cast<std::size_t>(i - 1)], k.inv(k.from_int(i)));
            if (l.xi_of(vec_add(k, x, y)) != want)
                return fail("xi(x+y) != xi(x) + xi(y) + sum s_i(x,y)/i", x, y);
        }
    return r;
}

std::vector<long long> symtr_dims(int p, const std::map<int, int>& w, int bound, SymSigns signs)
{
    std::vector<long long> dims(static_cast<std::size_t>(std::max(bound, 0)) + 1, 0);
    if (bound < 0)
        return {};
    dims[0] = 1;
    for (const auto& [weight, count] : w) {
        if (weight < 1)
            throw std::invalid_argument("symtr_dims: weights must be positive");
        int top = (signs == SymSigns::koszul && p != 2 && weight % 2 == 1) ? 1 : p - 1;
        for (int c = 0; c < count; ++c) {
            std::vector<long long> next(dims.size(), 0);
            for (std::size_t d = 0; d < dims.size(); ++d)
                for (int e = 0; e <= top; ++e) {
                    std::size_t t = d + static_cast<std::size_t>(e * weight);
                    if (t < dims.size())
                        next[t] += dims[d];
                }
            dims = std::move(next);
        }
    }
    return dims;
}

int GradedAlgebraPresentation::weight(const Word& w) const
{
    int s = 0;
    for (int x : w)
        s += weights[static_cast<std::size_t>(x)];
    return s;
}

bool GradedAlgebraPresentation::is_normal(const Word& w) const
{
    for (const auto& [lhs, rhs] : rules)
        if (std::search(w.begin(), w.end(), lhs.begin(), lhs.end()) != w.end())
            return false;
    return true;
}

std::map<Word, Elt> GradedAlgebraPresentation::normalize(std::map<Word, Elt> x) const
{
    const Field& kk = *k;
    std::map<Word, Elt, DegLex> pending(x.begin(), x.end());
    std::map<Word, Elt> out;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Elt c = it->second;
        pending.erase(it);
        if (c == 0)
            continue;
        bool rewritten = false;
        for (std::size_t pos = 0; pos < w.size() && !rewritten; ++pos)
            for (const auto& [lhs, rhs] : rules) {
                if (pos + lhs.size() > w.size() || !std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos)))
                    continue;
                for (const auto& [r, rc] : rhs) {
                    Word nw(w.begin(), w.begin() + static_cast<long>(pos));
                    nw.insert(nw.end(), r.begin(), r.end());
                    nw.insert(nw.end(), w.begin() + static_cast<long>(pos + lhs.size()), w.end());
                    if (!DegLex{}(nw, w))
                        throw std::logic_error("normalize: rule does not decrease the word");
                    Elt& slot = pending[nw];
                    slot = kk.add(slot, kk.mul(c, rc));
                }
                rewritten = true;
                break;
            }
        if (!rewritten)
            add_term(out, kk, w, c);
    }
    return out;
}

std::vector<std::vector<Word>> GradedAlgebraPresentation::basis(int bound) const
{
    for (int w : weights)
        if (w < 1)
            throw std::invalid_argument("GradedAlgebraPresentation: weights must be positive");
    std::vector<std::vector<Word>> out(static_cast<std::size_t>(std::max(bound, 0)) + 1);
    if (bound < 0)
        return out;
    std::size_t maxlen = 0;
    for (const auto& [lhs, rhs] : rules)
        maxlen = std::max(maxlen, lhs.size());
    Word cur;
    std::function<void(int)> rec = [&](int wt) {
        out[static_cast<std::size_t>(wt)].push_back(cur);
        for (std::size_t g = 0; g < weights.size(); ++g) {
            int nw = wt + weights[g];
            if (nw > bound)
                continue;
            cur.push_back(static_cast<int>(g));
            bool ok = true;
            for (std::size_t len = 1; len <= std::min(maxlen, cur.size()) && ok; ++len)
                if (rules.count(Word(cur.end() - static_cast<long>(len), cur.end())))
                    ok = false;
            if (ok)
                rec(nw);
            cur.pop_back();
        }
    };
    rec(0);
    for (auto& ws : out)
        std::sort(ws.begin(), ws.end());
    return out;
}

GradedAlgebraPresentation ur_presentation(const RestrictedLie& l)
{
    GradedAlgebraPresentation a;
    a.k = l.k;
    a.weights = l.weights.empty() ? std::vector<int>(l.dim(), 1) : l.weights;
    int p = l.k->p();
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            std::map<Word, Elt> rhs{{Word{static_cast<int>(i), static_cast<int>(j)}, 1}};
            for (std::size_t c = 0; c < l.dim(); ++c)
                add_term(rhs, *l.k, Word{static_cast<int>(c)}, l.bracket[j][i][c]);
            a.rules[Word{static_cast<int>(j), static_cast<int>(i)}] = rhs;
        }
        std::map<Word, Elt> rhs;
        for (std::size_t c = 0; c < l.dim(); ++c)
            add_term(rhs, *l.k, Word{static_cast<int>(c)}, l.xi[i][c]);
        a.rules[Word(static_cast<std::size_t>(p), static_cast<int>(i))] = rhs;
    }
    return a;
}

void check_confluence(const GradedAlgebraPresentation& a)
{
    const Field& k = *a.k;
    auto describe = [&](const Word& w) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < a.weights.size(); ++i)
            labels.push_back("g" + std::to_string(i));
        return word_str(w, labels);
    };
    auto resolve = [&](const Word& pre, const std::map<Word, Elt>& mid, const Word& post) {
        std::map<Word, Elt> x;
        for (const auto& [w, c] : mid) {
            Word nw = pre;
            nw.insert(nw.end(), w.begin(), w.end());
            nw.insert(nw.end(), post.begin(), post.end());
            add_term(x, k, nw, c);
        }
        return a.normalize(x);
    };
    for (const auto& [u, ru] : a.rules)
        for (const auto& [v, rv] : a.rules) {
            // Proper overlaps: a suffix of u equals a prefix of v.
            for (std::size_t len = 1; len < std::min(u.size(), v.size()); ++len) {
                if (!std::equal(u.end() - static_cast<long>(len), u.end(), v.begin()))
                    continue;
                Word tail(v.begin() + static_cast<long>(len), v.end());
                Word head(u.begin(), u.end() - static_cast<long>(len));
                if (resolve({}, ru, tail) != resolve(head, rv, {})) {
                    Word w = u;
                    w.insert(w.end(), tail.begin(), tail.end());
                    throw NonConfluent("overlap " + describe(w) + " resolves in two different ways");
                }
            }
            // Inclusions: v occurs strictly inside u.
            if (v.size() < u.size())
                for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos)
                    if (std::equal(v.begin(), v.end(), u.begin() + static_cast<long>(pos))) {
                        Word head(u.begin(), u.begin() + static_cast<long>(pos));
                        Word tail(u.begin() + static_cast<long>(pos + v.size()), u.end());
                        if (resolve({}, ru, {}) != resolve(head, rv, tail))
                            throw NonConfluent("inclusion " + describe(v) + " in " + describe(u) +
                                               " resolves in two different ways");
                    }
        }
}

std::vector<long long> ur_dims(const RestrictedLie& l, int bound)
{
    if (l.weights.size() != l.dim())
        throw std::invalid_argument("ur_dims: weights are required");
    GradedAlgebraPresentation a = ur_presentation(l);
    check_confluence(a);
    std::vector<long long> dims;
    for (const auto& ws : a.basis(bound))
        dims.push_back(static_cast<long long>(ws.size()));
    return dims;
}

PBWReport pbw_check(const RestrictedLie& l, int bound)
{
    PBWReport r;
    r.ur = ur_dims(l, bound);
    std::map<int, int> w;
    for (int x : l.weights)
        ++w[x];
    r.symtr = symtr_dims(l.k->p(), w, bound, SymSigns::weight_only);
    return r;
}

Coalgebra dual_of_truncated_polynomial(FieldPtr k, int height)
{
    if (height < 1)
        throw std::invalid_argument("dual_of_truncated_polynomial: height must be positive");
    auto n = static_cast<std::size_t>(height);
    Coalgebra c{std::move(k), std::vector<Elt>(n, 0), std::vector<Matrix>(n, Matrix(n, n))};
    c.counit[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a <= i; ++a)
            c.delta[i](a, i - a) = 1;
    return c;
}

Coalgebra group_coalgebra(FieldPtr k, int order)
{
    if (order < 1)
        throw std::invalid_argument("group_coalgebra: order must be positive");
    auto n = static_cast<std::size_t>(order);
    Coalgebra c{std::move(k), std::vector<Elt>(n, 1), std::vector<Matrix>(n, Matrix(n, n))};
    for (std::size_t i = 0; i < n; ++i)
        c.delta[i](i, i) = 1;
    return c;
}

bool truncated_coalgebra_check(const Coalgebra& c)
{
    const Field& k = *c.k;
    std::size_t n = c.dim();
    if (c.delta.size() != n)
        throw std::invalid_argument("truncated_coalgebra_check: inconsistent sizes");
    for (const auto& m : c.delta)
        if (m.rows != n || m.cols != n)
            throw std::invalid_argument("truncated_coalgebra_check: inconsistent sizes");
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& d = c.delta[i];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (d(a, b) != d(b, a))
                    throw std::invalid_argument("truncated_coalgebra_check: not cocommutative");
        for (std::size_t a = 0; a < n; ++a) {
            Elt left = 0, right = 0;
            for (std::size_t j = 0; j < n; ++j) {
                left = k.add(left, k.mul(c.counit[j], d(j, a)));
                right = k.add(right, k.mul(c.counit[j], d(a, j)));
            }
            Elt want = a == i ? 1 : 0;
            if (left != want || right != want)
                throw std::invalid_argument("truncated_coalgebra_check: not counital");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t e = 0; e < n; ++e) {
                    Elt lhs = 0, rhs = 0;
                    for (std::size_t j = 0; j < n; ++j) {
                        lhs = k.add(lhs, k.mul(d(j, e), c.delta[j](a, b)));
                        rhs = k.add(rhs, k.mul(d(a, j), c.delta[j](b, e)));
                    }
                    if (lhs != rhs)
                        throw std::invalid_argument("truncated_coalgebra_check: not coassociative");
                }
    }
    // Dual algebra: (f_a f_b)_i = delta_i(a, b), unit = counit. Frobenius must land in k * unit.
    auto mul = [&](const Vec& x, const Vec& y) {
        Vec z(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < n; ++a) {
                if (x[a] == 0)
                    continue;
                for (std::size_t b = 0; b < n; ++b)
                    if (y[b] != 0)
                        z[i] = k.add(z[i], k.mul(k.mul(x[a], y[b]), c.delta[i](a, b)));
            }
        return z;
    };
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
        if (c.counit[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == n)
        throw std::invalid_argument("truncated_coalgebra_check: zero counit");
    for (std::size_t j = 0; j < n; ++j) {
        Vec f(n, 0);
        f[j] = 1;
        Vec power = f;
        for (int e = 1; e < k.p(); ++e)
            power = mul(power, f);
        Elt scale = k.div(power[pivot], c.counit[pivot]);
        for (std::size_t i = 0; i < n; ++i)
            if (power[i] != k.mul(scale, c.counit[i]))
                return false;
    }
    return true;
}

GradedAlgebraPresentation polynomial_presentation(FieldPtr k, int weight)
{
    GradedAlgebraPresentation a;
    a.k = std::move(k);
    a.weights = {weight};
    return a;
}

GradedAlgebraPresentation truncated_presentation(FieldPtr k, int weight, int height)
{
    GradedAlgebraPresentation a = polynomial_presentation(std::move(k), weight);
    a.rules[Word(static_cast<std::size_t>(height), 0)] = {};
    return a;
}

BigradedDims bar_tor(const GradedAlgebraPresentation& a, int s_max, int t_max)
{
    const Field& k = *a.k;
    for (const auto& [lhs, rhs] : a.rules)
        if (rhs.count(Word{}))
            throw std::invalid_argument("bar_tor: presentation is not augmented");
    std::vector<std::vector<Word>> basis = a.basis(t_max);
    std::vector<Word> words;
    std::vector<int> wts;
    std::map<Word, int> id;
    for (int t = 1; t <= t_max; ++t)
        for (const Word& w : basis[static_cast<std::size_t>(t)]) {
            id[w] = static_cast<int>(words.size());
            words.push_back(w);
            wts.push_back(t);
        }
    std::map<std::pair<int, int>, std::vector<std::pair<int, Elt>>> products;
    auto product = [&](int x, int y) -> const std::vector<std::pair<int, Elt>>& {
        auto it = products.find({x, y});
        if (it != products.end())
            return it->second;
        Word w = words[static_cast<std::size_t>(x)];
        const Word& v = words[static_cast<std::size_t>(y)];
        w.insert(w.end(), v.begin(), v.end());
        std::vector<std::pair<int, Elt>> out;
        for (const auto& [nw, c] : a.normalize({{w, 1}}))
            out.emplace_back(id.at(nw), c);
        return products[{x, y}] = out;
    };
    // Bar elements of each bidegree (s, t), s <= s_max + 1.
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> cells;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int s, int t) {
        cells[{s, t}].push_back(cur);
        if (s == s_max + 1)
            return;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (t + wts[i] <= t_max) {
                cur.push_back(static_cast<int>(i));
                rec(s + 1, t + wts[i]);
                cur.pop_back();
            }
    };
    rec(0, 0);
    std::map<std::pair<int, int>, long long> ranks;  // rank of d: B_{s,t} -> B_{s-1,t}
    for (const auto& [cell, elems] : cells) {
        auto [s, t] = cell;
        if (s < 2)
            continue;
        std::map<std::vector<int>, std::size_t> target;
        const auto& tgt = cells[{s - 1, t}];
        for (std::size_t i = 0; i < tgt.size(); ++i)
            target[tgt[i]] = i;
        SparseEchelon ech(k);
        for (const auto& e : elems) {
            std::map<std::size_t, Elt> row;
            for (int i = 0; i + 1 < s; ++i) {
                Elt sign = (i % 2 == 0) ? k.neg(1) : 1;
                for (const auto& [z, c] : product(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i) + 1])) {
                    std::vector<int> f(e.begin(), e.begin() + i);
                    f.push_back(z);
                    f.insert(f.end(), e.begin() + i + 2, e.end());
                    Elt& slot = row[target.at(f)];
                    slot = k.add(slot, k.mul(sign, c));
                }
            }
            for (auto it = row.begin(); it != row.end();)
                it = it->second == 0 ? row.erase(it) : std::next(it);
            if (!row.empty())
                ech.add(std::move(row));
        }
        ranks[cell] = static_cast<long long>(ech.rank());
    }
    BigradedDims out;
    for (int s = 0; s <= s_max; ++s)
        for (int t = 0; t <= t_max; ++t) {
            auto it = cells.find({s, t});
            long long n = it == cells.end() ? 0 : static_cast<long long>(it->second.size());
            long long d = n - (ranks.count({s, t}) ? ranks[{s, t}] : 0) - (ranks.count({s + 1, t}) ? ranks[{s + 1, t}] : 0);
            if (d != 0)
                out[{s, t}] = d;
        }
    return out;
}

BigradedDims kunneth(const BigradedDims& x, const BigradedDims& y, int s_max, int t_max)
{
    BigradedDims out;
    for (const auto& [a, da] : x)
        for (const auto& [b, db] : y) {
            int s = a.first + b.first, t = a.second + b.second;
            if (s <= s_max && t <= t_max)
                out[{s, t}] += da * db;
        }
    return out;
}

BigradedDims exterior_dims(const std::vector<int>& weights, int s_max, int t_max)
{
    BigradedDims out{{{0, 0}, 1}};
    for (int w : weights)
        out = kunneth(out, BigradedDims{{{0, 0}, 1}, {{1, w}, 1}}, s_max, t_max);
    return out;
}

AbelianHomologyReport abelian_homology_check(const FPModule& m, int s_max, int t_max)
{
    RestrictedLie l = module_lie(m.k, m, t_max);
    GradedAlgebraPresentation a = ur_presentation(l);
    check_confluence(a);
    AbelianHomologyReport r;
    r.tor = bar_tor(a, s_max, t_max);
    std::vector<int> gens;
    for (int w : l.weights)
        if (w == 1)
            gens.push_back(1);
    r.exterior = exterior_dims(gens, s_max, t_max);
    r.matches = r.tor == r.exterior;
    return r;
}

}  // namespace rla
