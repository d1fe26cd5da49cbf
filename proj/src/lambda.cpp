#include "rla/lambda.hpp"

#include <stdexcept>

namespace rla {

bool lambda_valid(int p, int code)
{
    return st_valid(p, code);
}

LambdaGen lambda_decode(int p, int code)
{
    if (p == 2)
        return {LambdaKind::lambda, code - 1};
    auto [a, e] = st_decode(p, code);
    return {e ? LambdaKind::mu : LambdaKind::lambda, a};
}

int lambda_encode(int p, LambdaGen g)
{
    if (p == 2)
        return g.a + 1;
    return st_encode(p, g.a, g.kind == LambdaKind::mu ? 1 : 0);
}

std::string lambda_name(int p, int code)
{
    LambdaGen g = lambda_decode(p, code);
    return (g.kind == LambdaKind::mu ? "m" : "l") + std::to_string(g.a);
}

std::string lambda_word_name(int p, const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k)
        s += (k ? " " : "") + lambda_name(p, w[k]);
    return s;
}

int lambda_degree(const Word& w)
{
    int d = 0;
    for (int c : w)
        d += c - 1;
    return d;
}

std::optional<Comb> lambda_pair(int p, int x, int y)
{
    LambdaGen g = lambda_decode(p, x), h = lambda_decode(p, y);
    int a = g.a, b = h.a;
    Comb out;
    auto add = [&](LambdaGen u, LambdaGen v, long long c) {
        if (u.a < 0 || v.a < 0)
            return;
        if (p != 2 && ((u.kind == LambdaKind::lambda && u.a < 1) || (v.kind == LambdaKind::lambda && v.a < 1)))
            return;
        comb_add(out, Word{lambda_encode(p, u), lambda_encode(p, v)}, c, p);
    };
    auto sgn = [](int n) { return n % 2 ? -1 : 1; };
    const LambdaKind L = LambdaKind::lambda, M = LambdaKind::mu;
    if (p == 2) {
        if (b <= 2 * a)
            return std::nullopt;
        for (int i = 1; i <= a + b; ++i)
            add({L, a + b - i}, {L, i}, binom_mod(b - i - 1, i - 2 * a - 1, 2));
        return out;
    }
    if (g.kind == L) {
        if (b < p * a)
            return std::nullopt;
        int e = h.kind == L ? 1 : 0;
        for (int i = 0; i <= a + b; ++i) {
            add({h.kind, a + b - i}, {L, i}, sgn(i + a + 1) * binom_mod((p - 1) * (b - i) - e, i - p * a, p));
            if (e == 0)
                add({L, a + b - i}, {M, i}, sgn(i + a + 1) * binom_mod((p - 1) * (b - i) - 1, i - p * a, p));
        }
        return out;
    }
    if (b <= p * a)
        return std::nullopt;
    for (int i = 1; i <= a + b; ++i)
        add({M, a + b - i}, {h.kind, i}, sgn(i + a) * binom_mod((p - 1) * (b - i) - 1, i - p * a - 1, p));
    return out;
}

bool lambda_admissible(int p, const Word& w)
{
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (lambda_pair(p, w[k], w[k + 1]))
            return false;
    return true;
}

Comb lambda_normalize(int p, const Word& w, Strategy s)
{
    for (int c : w)
        if (!lambda_valid(p, c))
            throw std::invalid_argument("lambda: generator code " + std::to_string(c) + " is not valid for p = " + std::to_string(p));
    return normalize_words(Comb{{w, 1}}, p, [p](int x, int y) { return lambda_pair(p, x, y); }, s);
}

LambdaElement lambda_normalize(const Field& k, const Word& w, Elt coeff, Strategy s)
{
    LambdaElement out;
    if (!coeff)
        return out;
    for (const auto& [m, c] : lambda_normalize(k.p(), w, s))
        out.emplace(m, k.mul(k.from_int(c), coeff));
    return out;
}

namespace {

// Admissible words of internal degree m and weight s whose first generator passes `first`.
template <class F>
void enum_lambda(int p, int m, int s, int prev, Word& cur, std::vector<Word>& out, const F& first)
{
    if (s == 0) {
        if (m == 0)
            out.push_back(cur);
        return;
    }
    for (int c = 1; c - 1 <= m; ++c) {
        if (!lambda_valid(p, c))
            continue;
        if (prev ? bool(lambda_pair(p, prev, c)) : !first(c))
            continue;
        cur.push_back(c);
        enum_lambda(p, m - (c - 1), s - 1, c, cur, out, first);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> lambda_admissible_basis(int p, int m, int s)
{
    std::vector<Word> out;
    if (m < 0 || s < 0)
        return out;
    Word cur;
    enum_lambda(p, m, s, 0, cur, out, [](int) { return true; });
    return out;
}

bool lambda_in_filtration(int p, int l, int code)
{
    LambdaGen g = lambda_decode(p, code);
    if (p == 2)
        return g.a < l;
    int n = l / 2;
    if (l % 2 == 0)
        return g.kind == LambdaKind::lambda ? g.a <= n : g.a < n;
    return g.a <= n;
}

std::vector<Word> lambda_l_basis(int p, int l, int max_degree, int max_weight)
{
    if (l < 1)
        throw std::invalid_argument("lambda: filtration index must be >= 1");
    std::vector<Word> out;
    for (int s = 0; s <= max_weight; ++s)
        for (int m = 0; m <= max_degree; ++m) {
            Word cur;
            enum_lambda(p, m, s, 0, cur, out, [&](int c) { return lambda_in_filtration(p, l, c); });
        }
    return out;
}

bool lambda_leading_ok(int p, int code, int d, Flavor f)
{
    LambdaGen g = lambda_decode(p, code);
    bool hat = f == Flavor::module;
    if (p == 2)
        return hat ? g.a < d : g.a + 1 < d;
    int eps = g.kind == LambdaKind::lambda ? 1 : 0;
    return hat ? 2 * g.a - eps < d : 2 * g.a < d;
}

std::map<std::pair<int, int>, TensorLambdaCell> w_tensor_lambda(int p, const std::map<int, int>& w_dims, Flavor f,
                                                                 int max_degree, int max_weight)
{
    std::map<std::pair<int, int>, TensorLambdaCell> out;
    for (const auto& [d, n] : w_dims) {
        if (n <= 0)
            continue;
        for (int s = 0; s <= max_weight; ++s)
            for (int m = 0; d + m <= max_degree; ++m) {
                std::vector<Word> ys;
                Word cur;
                enum_lambda(p, m, s, 0, cur, ys, [&](int c) { return lambda_leading_ok(p, c, d, f); });
                if (ys.empty())
                    continue;
                TensorLambdaCell& cell = out[{d + m, s}];
                cell.degree = d + m;
                cell.weight = s;
                for (int k = 0; k < n; ++k)
                    for (const Word& y : ys) {
                        std::string label = "w" + std::to_string(d) + (n > 1 ? "_" + std::to_string(k) : "");
                        cell.basis.push_back(y.empty() ? label : label + " (x) " + lambda_word_name(p, y));
                    }
            }
    }
    return out;
}

}  // namespace rla
