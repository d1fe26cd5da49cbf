#include "rla/steenrod.hpp"

#include <functional>
#include <stdexcept>

namespace rla {

bool st_valid(int p, int i)
{
    if (i < 1)
        return false;
    if (p == 2)
        return true;
    int r = i % (2 * (p - 1));
    return r == 0 || r == 1;
}

StDecoded st_decode(int p, int i)
{
    if (p == 2)
        return {i, 0};
    return {i / (2 * (p - 1)), i % (2 * (p - 1))};
}

int st_encode(int p, int a, int eps)
{
    return p == 2 ? a : 2 * a * (p - 1) + eps;
}

std::string st_name(int p, int i)
{
    if (p == 2)
        return "Sq" + std::to_string(i);
    auto [a, e] = st_decode(p, i);
    return std::string(e ? "bP" : "P") + std::to_string(a);
}

std::string st_word_name(int p, const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k)
        s += (k ? " " : "") + st_name(p, w[k]);
    return s;
}

std::optional<Comb> adem_pair(int p, int i, int j)
{
    if (i >= p * j)
        return std::nullopt;
    Comb out;
    auto add = [&](int x, int y, long long c) {
        if (st_valid(p, x) && st_valid(p, y))
            comb_add(out, Word{x, y}, c, p);
    };
    if (p == 2) {
        int a = i, b = j;
        for (int k = 0; 2 * k <= a; ++k)
            add(a + b - k, k, binom_mod(b - k - 1, a - 2 * k, 2));
        return out;
    }
    auto [a, e] = st_decode(p, i);
    auto [b, f] = st_decode(p, j);
    auto sgn = [](int n) { return n % 2 ? -1 : 1; };
    for (int k = 0; p * k <= a; ++k) {
        if (f == 0) {
            add(st_encode(p, a + b - k, e), st_encode(p, k, 0), sgn(a + k) * binom_mod((p - 1) * (b - k) - 1, a - p * k, p));
        } else {
            add(st_encode(p, a + b - k, e), st_encode(p, k, 1), sgn(a + k - 1) * binom_mod((p - 1) * (b - k) - 1, a - p * k - 1, p));
            if (e == 0)
                add(st_encode(p, a + b - k, 1), st_encode(p, k, 0), sgn(a + k) * binom_mod((p - 1) * (b - k), a - p * k, p));
        }
    }
    return out;
}

bool is_admissible(int p, const Word& w)
{
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] < p * w[k + 1])
            return false;
    return true;
}

namespace {

void check_word(int p, const Word& w)
{
    for (int i : w)
        if (!st_valid(p, i))
            throw std::invalid_argument("steenrod: index " + std::to_string(i) + " is not valid for p = " + std::to_string(p));
}

}  // namespace

Comb adem_normalize(int p, const Word& w, Strategy s)
{
    check_word(p, w);
    return normalize_words(Comb{{w, 1}}, p, [p](int i, int j) { return adem_pair(p, i, j); }, s);
}

SteenrodElement adem_normalize(const Field& k, const Word& w, Elt coeff, Strategy s)
{
    SteenrodElement out;
    if (!coeff)
        return out;
    for (const auto& [m, c] : adem_normalize(k.p(), w, s))
        out.emplace(m, k.mul(k.from_int(c), coeff));
    return out;
}

int word_degree(const Word& w)
{
    int d = 0;
    for (int i : w)
        d += i;
    return d;
}

int excess(int p, const Word& w)
{
    if (w.empty())
        return -1;
    return w[0] - (p - 1) * (word_degree(w) - w[0]);
}

namespace {

// Admissible words of degree t, length s (s < 0: any), with first index <= cap.
void enum_admissible(int p, int t, int s, int cap, Word& cur, std::vector<Word>& out)
{
    if (t == 0) {
        if (s <= 0)
            out.push_back(cur);
        return;
    }
    if (s == 0)
        return;
    for (int i = std::min(t, cap); i >= 1; --i) {
        if (!st_valid(p, i))
            continue;
        cur.push_back(i);
        enum_admissible(p, t - i, s < 0 ? s : s - 1, i / p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> admissible_basis(int p, int t, int s)
{
    std::vector<Word> out;
    if (t < 0 || s < 0)
        return out;
    Word cur;
    enum_admissible(p, t, s, t, cur, out);
    if (s == 0 && t != 0)
        out.clear();
    return out;
}

std::vector<Word> admissible_of_degree(int p, int t)
{
    std::vector<Word> out;
    Word cur;
    enum_admissible(p, t, -1, t, cur, out);
    return out;
}

const char* flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::module:
        return "module";
    case Flavor::strong:
        return "strong-module";
    default:
        return "algebra";
    }
}

bool excess_ok(int p, int e, int l, Flavor f)
{
    return f == Flavor::module ? e <= (p - 1) * l : e < (p - 1) * l;
}

std::vector<UnstableBasisElement> unstable_basis(int p, int l, Flavor f, int max_degree)
{
    if (l < 1)
        throw std::invalid_argument("steenrod: generator degree must be >= 1");
    std::vector<UnstableBasisElement> out;
    for (int t = 0; l + t <= max_degree; ++t)
        for (Word& w : admissible_of_degree(p, t))
            if (excess_ok(p, excess(p, w), l, f))
                out.push_back({std::move(w), l, f});
    return out;
}

std::map<int, long long> unstable_algebra_dims(int p, int l, int max_degree)
{
    // series[d] = dim of the free graded-commutative unital algebra in degree d
    std::vector<long long> series(std::max(0, max_degree) + 1, 0);
    series[0] = 1;
    for (const auto& g : unstable_basis(p, l, Flavor::algebra, max_degree)) {
        int d = g.degree();
        if (p != 2 && d % 2) {
            for (int t = max_degree; t >= d; --t)
                series[t] += series[t - d];
        } else {
            for (int t = d; t <= max_degree; ++t)
                series[t] += series[t - d];
        }
    }
    std::map<int, long long> out;
    for (int t = 1; t <= max_degree; ++t)
        out[t] = series[t];
    return out;
}

Comb st_act(int p, int i, const UnstableBasisElement& x)
{
    if (!st_valid(p, i))
        throw std::invalid_argument("steenrod: index " + std::to_string(i) + " is not valid for p = " + std::to_string(p));
    Word w{i};
    w.insert(w.end(), x.ops.begin(), x.ops.end());
    Comb out;
    for (const auto& [m, c] : adem_normalize(p, w))
        if (excess_ok(p, excess(p, m), x.l, x.flavor))
            out.emplace(m, c);
    return out;
}

SteenrodElement act_on_scaled(const Field& k, const Word& w, Elt alpha, bool normalize_first)
{
    SteenrodElement out;
    if (!alpha)
        return out;
    if (normalize_first) {
        for (const auto& [m, c] : adem_normalize(k.p(), w))
            out.emplace(m, k.mul(k.from_int(c), k.frobenius(alpha, int(m.size()))));
        return out;
    }
    Elt a = alpha;
    for (size_t n = 0; n < w.size(); ++n)
        a = k.frobenius(a, 1);
    return adem_normalize(k, w, a);
}

}  // namespace rla
