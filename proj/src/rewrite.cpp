#include "rla/rewrite.hpp"

#include <string>

namespace rla {

int mod_p(long long a, int p)
{
    a %= p;
    return int(a < 0 ? a + p : a);
}

int binom_mod(long long m, long long n, int p)
{
    if (n < 0 || m < 0 || n > m)
        return 0;
    long long r = 1;
    while (m || n) {
        long long a = m % p, b = n % p;
        if (b > a)
            return 0;
        long long c = 1;
        for (long long i = 0; i < b; ++i)
            c = c * (a - i) / (i + 1);
        r = r * (c % p) % p;
        m /= p;
        n /= p;
    }
    return int(r);
}

void comb_add(Comb& into, const Word& w, long long c, int p)
{
    int v = mod_p(c, p);
    if (!v)
        return;
    auto it = into.find(w);
    if (it == into.end()) {
        into.emplace(w, v);
        return;
    }
    it->second = (it->second + v) % p;
    if (!it->second)
        into.erase(it);
}

void comb_axpy(Comb& into, const Comb& x, long long c, int p)
{
    for (const auto& [w, v] : x)
        comb_add(into, w, c * v, p);
}

Comb normalize_words(const Comb& input, int p, const PairRule& rule, Strategy strategy)
{
    // Rewrites only produce lexicographically larger words, so the smallest pending word
    // has received all of its contributions.
    Comb todo = input, out;
    while (!todo.empty()) {
        auto it = todo.begin();
        Word w = it->first;
        int c = it->second;
        todo.erase(it);
        std::optional<Comb> r;
        std::size_t pos = 0;
        int n = int(w.size());
        if (strategy == Strategy::leftmost) {
            for (int k = 0; k + 1 < n && !r; ++k)
                if ((r = rule(w[k], w[k + 1])))
                    pos = std::size_t(k);
        } else {
            for (int k = n - 2; k >= 0 && !r; --k)
                if ((r = rule(w[k], w[k + 1])))
                    pos = std::size_t(k);
        }
        if (!r) {
            comb_add(out, w, c, p);
            continue;
        }
        for (const auto& [pair, cc] : *r) {
            Word nw = w;
            nw[pos] = pair[0];
            nw[pos + 1] = pair[1];
            if (!(w < nw))
                throw RewriteCycle("rewrite step does not increase the word order at position " + std::to_string(pos));
            comb_add(todo, nw, 1LL * c * cc, p);
        }
    }
    return out;
}

}  // namespace rla
