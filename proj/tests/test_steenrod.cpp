#include "doctest.h"
#include "rla/steenrod.hpp"

#include <array>
#include <map>
#include <random>
#include <set>

using namespace rla;

namespace {

using Mono = std::array<int, 4>;
using Poly = std::set<Mono>;  // F_2-polynomial in four degree-one classes

void toggle(Poly& p, const Mono& m)
{
    if (!p.erase(m))
        p.insert(m);
}

// Classical Sq^k on F_2[x1..x4] via the Cartan formula, Sq(x) = x + x^2.
Poly classical_sq(int k, const Poly& f)
{
    Poly out;
    for (const auto& m : f)
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                for (int c = 0; a + b + c <= k; ++c) {
                    int d = k - a - b - c;
                    std::array<int, 4> ks{a, b, c, d};
                    Mono r = m;
                    bool odd = true;
                    for (int i = 0; i < 4; ++i) {
                        odd = odd && binom_mod(m[i], ks[i], 2) == 1;
                        r[i] += ks[i];
                    }
                    if (odd)
                        toggle(out, r);
                }
    return out;
}

Poly classical_word(const Word& w, Poly f)
{
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        f = classical_sq(*it, f);
    return f;
}

void add_into(Poly& a, const Poly& b)
{
    for (const auto& m : b)
        toggle(a, m);
}

Word random_word(int p, std::mt19937& rng, int max_len, int max_index)
{
    std::uniform_int_distribution<int> len(1, max_len), idx(1, max_index);
    Word w;
    int n = len(rng);
    while (int(w.size()) < n) {
        int i = idx(rng);
        if (st_valid(p, i))
            w.push_back(i);
    }
    return w;
}

}  // namespace

TEST_CASE("adem normalization examples at p = 2")
{
    CHECK(adem_normalize(2, {4, 2}) == Comb{{{4, 2}, 1}});
    CHECK(adem_normalize(2, {1, 1}).empty());
    CHECK(adem_normalize(2, {2, 2}) == Comb{{{3, 1}, 1}});
}

// With Sq^0 = 1 the classical relation is the homogenized one plus C(b-1, a) Sq^(a+b).
TEST_CASE("homogenized adem relations agree with the classical action on polynomials")
{
    std::vector<Poly> samples;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 2; ++c)
                samples.push_back(Poly{Mono{a, b, c, 1}});
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b) {
            if (a >= 2 * b)
                continue;
            Comb rel = adem_normalize(2, {a, b});
            for (const auto& f : samples) {
                Poly rhs = binom_mod(b - 1, a, 2) ? classical_sq(a + b, f) : Poly{};
                for (const auto& [w, c] : rel)
                    if (c)
                        add_into(rhs, classical_word(w, f));
                CHECK(classical_word({a, b}, f) == rhs);
            }
        }
}

TEST_CASE("adem normalization rejects invalid indices")
{
    CHECK_FALSE(st_valid(3, 2));
    CHECK(st_valid(3, 4));
    CHECK(st_valid(3, 5));
    CHECK_THROWS(adem_normalize(3, {2}));
}

TEST_CASE("admissible basis examples")
{
    CHECK(admissible_basis(2, 3, 2) == std::vector<Word>{{2, 1}});
    for (int p : {2, 3, 5})
        CHECK(admissible_basis(p, 0, 0) == std::vector<Word>{Word{}});
    CHECK(admissible_basis(2, 1, 2).empty());
}

TEST_CASE("unstable bases")
{
    auto ops = [](const std::vector<UnstableBasisElement>& b) {
        std::set<Word> s;
        for (const auto& e : b)
            s.insert(e.ops);
        return s;
    };
    CHECK(ops(unstable_basis(2, 1, Flavor::module, 4)) == std::set<Word>{{}, {1}, {2, 1}});
    CHECK(ops(unstable_basis(2, 1, Flavor::strong, 4)) == std::set<Word>{{}});
    for (int p : {2, 3})
        for (int l = 1; l <= 4; ++l)
            CHECK(ops(unstable_basis(p, l, Flavor::module, l)) == std::set<Word>{{}});
}

TEST_CASE("free unstable algebra dimensions")
{
    CHECK(unstable_algebra_dims(2, 1, 3) == std::map<int, long long>{{1, 1}, {2, 1}, {3, 1}});
    // E(iota) (x) P(beta iota), since beta iota has excess 1 < p - 1
    auto d = unstable_algebra_dims(3, 1, 2);
    CHECK(d[1] == 1);
    CHECK(d[2] == 1);
    CHECK(unstable_algebra_dims(2, 2, 0).empty());
}

TEST_CASE("action on free unstable modules")
{
    UnstableBasisElement iota{{}, 3, Flavor::module};
    CHECK(st_act(2, 4, iota).empty());
    CHECK(st_act(2, 2, iota) == Comb{{{2}, 1}});
    UnstableBasisElement sq1{{1}, 2, Flavor::module};
    CHECK(st_act(2, 1, sq1).empty());
}

TEST_CASE("leftmost and rightmost rewriting agree")
{
    std::mt19937 rng(1234);
    for (int p : {2, 3, 5})
        for (int it = 0; it < 150; ++it) {
            Word w = random_word(p, rng, 4, 20);
            CHECK(adem_normalize(p, w, Strategy::leftmost) == adem_normalize(p, w, Strategy::rightmost));
        }
}

TEST_CASE("products of admissible monomials lie in the admissible span")
{
    for (int p : {2, 3})
        for (int t = 0; t <= 20; ++t)
            for (int s = 1; s <= 3; ++s) {
                auto basis = admissible_basis(p, t, s);
                std::set<Word> span(basis.begin(), basis.end());
                for (int s1 = 0; s1 <= s; ++s1)
                    for (int t1 = 0; t1 <= t; ++t1)
                        for (const auto& u : admissible_basis(p, t1, s1))
                            for (const auto& v : admissible_basis(p, t - t1, s - s1)) {
                                Word w = u;
                                w.insert(w.end(), v.begin(), v.end());
                                for (const auto& [m, c] : adem_normalize(p, w)) {
                                    CHECK(c != 0);
                                    CHECK(span.count(m) == 1);
                                }
                            }
            }
}

TEST_CASE("action respects the instability bound")
{
    for (int p : {2, 3})
        for (Flavor f : {Flavor::module, Flavor::strong})
            for (int l = 1; l <= 4; ++l)
                for (const auto& x : unstable_basis(p, l, f, 20))
                    for (int i = 1; i <= 12; ++i) {
                        if (!st_valid(p, i))
                            continue;
                        for (const auto& [m, c] : st_act(p, i, x))
                            CHECK(excess_ok(p, excess(p, m), l, f));
                    }
}

TEST_CASE("scalars move past operations semilinearly")
{
    auto f4 = make_field(2, 2, {1, 1, 1});
    auto f9 = make_field(3, 2, {1, 0, 1});
    std::mt19937 rng(7);
    for (const auto& k : {f4, f9})
        for (int it = 0; it < 60; ++it) {
            Word w = random_word(k->p(), rng, 3, 12);
            Elt a = Elt(rng() % k->order());
            CHECK(act_on_scaled(*k, w, a, false) == act_on_scaled(*k, w, a, true));
        }
}
