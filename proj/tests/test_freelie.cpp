#include "doctest.h"
#include "rla/freelie.hpp"

using namespace rla;

namespace {

SimplicialVectorSpace sphere(FieldPtr k, int l, int top)
{
    return dold_kan(k, {{l, 1}}, top);
}

Perm cycle(int n, int len)
{
    Perm t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        t[std::size_t(j)] = j < len ? (j + 1) % len : j;
    return t;
}

Perm compose(const Perm& s, const Perm& t)
{
    Perm r(t.size());
    for (std::size_t j = 0; j < t.size(); ++j)
        r[j] = s[std::size_t(t[j])];
    return r;
}

}  // namespace

TEST_CASE("Lie operad dimensions")
{
    long long f = 1;
    for (int n = 1; n <= 7; ++n) {
        if (n > 1)
            f *= n - 1;
        CHECK(lie_operad_basis(n).dim() == std::size_t(f));
    }
    CHECK_THROWS(lie_operad_basis(8));
    CHECK_THROWS(lie_operad_basis(0));
}

TEST_CASE("symmetric group action on Lie_n")
{
    auto k2 = make_field(2), k3 = make_field(3);
    auto one = lie_operad_basis(1);
    CHECK(mat_equal(one.action(*k3, {0}), identity(1)));
    auto two = lie_operad_basis(2);
    CHECK(two.action(*k3, {1, 0})(0, 0) == k3->neg(1));
    CHECK(two.action(*k2, {1, 0})(0, 0) == 1);
    auto three = lie_operad_basis(3);
    for (const auto& k : {k2, k3}) {
        Matrix c = three.action(*k, cycle(3, 3));
        CHECK_FALSE(mat_equal(c, identity(2)));
        CHECK(mat_equal(mat_mul(*k, c, mat_mul(*k, c, c)), identity(2)));
    }
    auto four = lie_operad_basis(4);
    Perm s = cycle(4, 2), t = cycle(4, 4);
    for (const auto& k : {k2, k3})
        CHECK(mat_equal(four.action(*k, compose(s, t)), mat_mul(*k, four.action(*k, s), four.action(*k, t))));
}

TEST_CASE("Lyndon words and free Lie dimensions")
{
    CHECK(lyndon_count({1, 1}) == 1);
    CHECK(lyndon_count({2, 1}) == 1);
    CHECK(lyndon_count({2, 2}) == 1);
    CHECK(lyndon_count({3, 3}) == 3);
    long long total = 0;
    for (int a = 0; a <= 6; ++a)
        total += lyndon_count({a, 6 - a});
    CHECK(total == 9);
    CHECK(lyndon_words({3, 3}).size() == 3);
    CHECK(primitive_count({2}, 2, true) == 1);
    CHECK(primitive_count({2}, 2, false) == 0);
    CHECK(primitive_count({1}, 3, true) == 1);
    CHECK(primitive_count({3}, 3, true) == 1);
}

TEST_CASE("Dold-Kan")
{
    auto k = make_field(2);
    auto c0 = dold_kan(k, {{0, 1}}, 4);
    CHECK(c0.dims == std::vector<std::size_t>{1, 1, 1, 1, 1});
    auto c1 = sphere(k, 1, 4);
    CHECK(c1.dims == std::vector<std::size_t>{0, 1, 2, 3, 4});
    auto both = dold_kan(k, {{1, 1}, {2, 1}}, 4);
    auto c2 = sphere(k, 2, 4);
    for (int q = 0; q <= 4; ++q)
        CHECK(both.dims[std::size_t(q)] == c1.dims[std::size_t(q)] + c2.dims[std::size_t(q)]);
    for (const auto* v : {&c0, &c1, &both})
        CHECK(v->check_identities());
    auto pi = simplicial_homotopy(both);
    CHECK(pi == std::vector<long long>{0, 1, 1, 0});
}

TEST_CASE("restricted Lie powers")
{
    auto k = make_field(2);
    auto v = sphere(k, 1, 4);
    auto l1 = restricted_lie_power(v, 1);
    CHECK(l1.dims == v.dims);
    auto l2 = restricted_lie_power(v, 2);
    CHECK(l2.dims == std::vector<std::size_t>{0, 1, 3, 6, 10});
    CHECK(l2.check_identities());
    auto z = restricted_lie_power(zero_simplicial(k, 4), 2);
    for (auto d : z.dims)
        CHECK(d == 0);
}

TEST_CASE("invariant dimensions agree across models")
{
    for (int p : {2, 3}) {
        auto k = make_field(p);
        auto v = sphere(k, 1, 4);
        for (int n = 2; n <= 4; ++n) {
            auto lr = restricted_lie_power(v, n);
            auto pd = lie_power_dims(v.dims, n, p);
            for (int q = 0; q <= 4; ++q)
                CHECK(pd.invariants[std::size_t(q)] == (long long)(lr.dims[std::size_t(q)]));
            auto lrpi = simplicial_homotopy(lr);
            auto oracle = homotopy_oracle(v, n, 2);
            for (int q = 0; q <= 2; ++q)
                CHECK(lrpi[std::size_t(q)] == oracle[std::size_t(q)]);
        }
    }
}

TEST_CASE("homotopy oracle examples")
{
    auto k2 = make_field(2);
    for (int l = 1; l <= 3; ++l) {
        auto pi = homotopy_oracle(sphere(k2, l, 6), 1, 4);
        for (int q = 0; q <= 4; ++q)
            CHECK(pi[std::size_t(q)] == (q == l ? 1 : 0));
    }
    auto pi2 = homotopy_oracle(sphere(k2, 1, 6), 2, 4);
    CHECK(pi2 == std::vector<long long>{0, 1, 1, 0, 0});
    // Lie_2 (x) V^2 vanishes below degree 2 for V = Gamma(Sigma^2 k)
    auto low = homotopy_oracle(sphere(k2, 2, 4), 3, 1);
    CHECK(low == std::vector<long long>{0, 0});
}

TEST_CASE("closed form examples")
{
    auto chart = homotopy_closed_form(2, 1, 4, 4);
    for (int s = 0; s <= 4; ++s)
        CHECK(chart.dims[{1, 1LL << s}] == 1);
    for (int stem = 0; stem <= 4; ++stem)
        for (long long n : {3, 5, 6, 7})
            CHECK(closed_form_dim(2, 1, stem, n) == 0);
    for (int stem = 0; stem <= 4; ++stem)
        CHECK(closed_form_dim(3, 1, stem, 1) == (stem == 1 ? 1 : 0));
}

TEST_CASE("closed form matches the oracle")
{
    struct Case
    {
        int p, l, n;
    };
    for (auto c : {Case{2, 1, 2}, Case{2, 1, 4}, Case{2, 2, 2}, Case{3, 1, 2}, Case{3, 1, 3}, Case{3, 2, 3}}) {
        auto k = make_field(c.p);
        auto pi = homotopy_oracle(sphere(k, c.l, 6), c.n, 4);
        for (int q = 0; q <= 4; ++q)
            CHECK_MESSAGE(pi[std::size_t(q)] == closed_form_dim(c.p, c.l, q, c.n), "p=", c.p, " l=", c.l, " n=", c.n,
                          " q=", q);
    }
}

TEST_CASE("size budget")
{
    auto k = make_field(3);
    CHECK_THROWS_AS(homotopy_oracle(sphere(k, 1, 7), 9, 4), SizeError);
    CHECK(lie_budget_cost({0, 1, 2}, 2, 2) == doctest::Approx(5.0));
}

TEST_CASE("oracle beyond the default budget agrees with the closed form" * doctest::timeout(600))
{
    auto k = make_field(3);
    OracleOptions opt;
    opt.budget = 1e9;
    auto pi = homotopy_oracle(sphere(k, 1, 5), 7, 3, opt);
    for (int q = 0; q <= 3; ++q)
        CHECK(pi[std::size_t(q)] == closed_form_dim(3, 1, q, 7));
}

TEST_CASE("Curtis splitting")
{
    auto k = make_field(2);
    auto r = curtis_split_check(sphere(k, 1, 5), 1, 4);
    CHECK(r.identity_holds);
    CHECK(r.connectivity == 0);
    CHECK(r.connectivity_holds);
    for (int q = 0; q <= 1; ++q)
        CHECK(r.lie_homotopy[2][std::size_t(q)] == 0);
    auto z = curtis_split_check(zero_simplicial(k, 5), 1, 4);
    CHECK(z.pass());
    auto r3 = curtis_split_check(sphere(make_field(3), 1, 5), 1, 4);
    CHECK(r3.pass());
}

TEST_CASE("Hilton-Milnor")
{
    auto r = hilton_milnor_dims(2, {{1, 1}}, {{1, 1}}, 3, 6);
    CHECK(r.pass);
    CHECK_FALSE(r.cells.empty());
    auto alone = hilton_milnor_dims(2, {{1, 1}}, {}, 3, 6);
    CHECK(alone.pass);
    auto w1 = hilton_milnor_dims(3, {{1, 1}}, {{2, 1}}, 1, 6);
    CHECK(w1.pass);
    CHECK(w1.hall_words == std::vector<std::string>{"x1", "x2"});
}
