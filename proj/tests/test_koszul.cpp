#include "doctest.h"
#include "rla/koszul.hpp"

#include <random>

using namespace rla;

TEST_CASE("phi examples")
{
    CHECK(phi(2, {2, 3}) == Word{3, 2});
    CHECK(lambda_word_name(2, phi(2, {2, 3})) == lambda_word_name(2, {3, 2}));
    CHECK(lambda_admissible(2, phi(2, {2, 3})));
    CHECK(phi(2, {}).empty());
    CHECK(phi(3, {4}) == Word{4});
    CHECK(lambda_decode(3, phi(3, {4})[0]).kind == LambdaKind::lambda);
    CHECK(lambda_decode(3, phi(3, {4})[0]).a == 1);
}

TEST_CASE("phi matches admissibility")
{
    for (int p : {2, 3})
        for (int t = 0; t <= 24; ++t)
            for (int s = 1; s <= 3; ++s)
                for (const auto& j : orth_admissible_basis(p, t, s))
                    CHECK(lambda_admissible(p, phi(p, j)));
}

TEST_CASE("koszul normalization examples")
{
    CHECK(k_normalize(2, {2, 3}) == Comb{{{2, 3}, 1}});
    Comb r = k_normalize(2, {3, 1});
    for (const auto& [w, c] : r) {
        CHECK(orth_admissible(2, w));
        CHECK(word_degree(w) == 4);
        CHECK(w.size() == 2);
    }
    CHECK_THROWS(k_normalize(3, {2, 4}));
}

TEST_CASE("phi is anti-multiplicative")
{
    std::mt19937 rng(11);
    for (int p : {2, 3}) {
        std::uniform_int_distribution<int> len(1, 4), idx(1, 18);
        for (int it = 0; it < 100; ++it) {
            Word w;
            int n = len(rng);
            while (int(w.size()) < n) {
                int c = idx(rng);
                if (st_valid(p, c))
                    w.push_back(c);
            }
            Comb mapped;
            for (const auto& [m, c] : k_normalize(p, w))
                mapped[phi(p, m)] = c;
            CHECK(mapped == lambda_normalize(p, phi(p, w)));
        }
    }
}

TEST_CASE("quadratic duality")
{
    CHECK(quadratic_duality_check(2, 6).pass);
    CHECK(quadratic_duality_check(3, 10).pass);
    auto r = quadratic_duality_check(3, 3);
    for (const auto& d : r.degrees)
        if (d.pairs == 0)
            CHECK((d.orthogonal && d.complementary));
}

TEST_CASE("dual right action on single generators")
{
    for (int i : {1, 2, 3, 5})
        CHECK(dual_right_action(2, {i}, i) == Comb{{{}, 1}});
    CHECK(dual_right_action(2, {3}, 2).empty());
}

TEST_CASE("koszul complexes are acyclic")
{
    for (int p : {2, 3})
        for (Flavor f : {Flavor::module, Flavor::strong})
            for (int l = 1; l <= 3; ++l) {
                auto k = build_koszul_complex(p, {{l, 1}}, f, 3, 12);
                auto v = verify_complex(k);
                CHECK_MESSAGE(v.pass(), "p=", p, " l=", l);
            }
    auto zero = build_koszul_complex(2, {}, Flavor::module, 3, 10);
    CHECK(verify_complex(zero).pass());
}

TEST_CASE("corrupted differential is caught")
{
    auto k = build_koszul_complex(2, {{2, 1}}, Flavor::module, 2, 8);
    REQUIRE(verify_complex(k).pass());
    bool corrupted = false;
    for (auto& [key, m] : k.d)
        if (key.first == 2 && m.rows && m.cols) {
            m(0, 0) = m(0, 0) ? 0 : 1;
            corrupted = true;
            break;
        }
    REQUIRE(corrupted);
    auto v = verify_complex(k);
    CHECK_FALSE(v.pass());
    CHECK_FALSE(v.witnesses.empty());
}

TEST_CASE("ext examples")
{
    std::map<int, int> s2{{2, 1}}, s1{{1, 1}};
    CHECK(ext_dims_closed(2, s2, Flavor::module, 1, 3).dim == 1);
    CHECK(ext_dims_closed(2, s2, Flavor::module, 1, 4).dim == 1);
    CHECK(ext_dims_closed(2, s2, Flavor::module, 1, 5).dim == 0);
    for (int t = 0; t <= 6; ++t)
        CHECK(ext_dims_closed(3, s2, Flavor::module, 0, t).dim == (t == 2 ? 1 : 0));
    for (int s = 1; s <= 4; ++s)
        for (int t = 0; t <= 12; ++t)
            CHECK(ext_dims_closed(2, s1, Flavor::strong, s, t).dim == 0);
}

TEST_CASE("closed form agrees with the resolution")
{
    for (int p : {2, 3}) {
        auto c = ext_chart(p, {{2, 1}}, Flavor::module, 3, 12, true);
        CHECK(c.methods_agree);
        auto d = ext_chart(p, {{1, 1}, {3, 1}}, Flavor::strong, 3, 12, true);
        CHECK(d.methods_agree);
    }
}
