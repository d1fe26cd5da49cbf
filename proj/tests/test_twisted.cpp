#include "doctest.h"
#include "rla/twisted.hpp"

#include <random>

using namespace rla;

namespace {

TwistedPoly xi_pow(FieldPtr k, int i)
{
    return TwistedPoly::monomial(k, 1, i);
}

TwistedPoly random_poly(FieldPtr k, std::mt19937& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<Elt> c(0, k->order() - 1);
    std::vector<Elt> v(deg(rng) + 1);
    for (auto& x : v)
        x = c(rng);
    return TwistedPoly(k, v);
}

}  // namespace

TEST_CASE("twisted multiplication over F_4")
{
    auto k = make_field(2, 2, {1, 1, 1});
    Elt g = k->from_coeffs({0, 1});
    TwistedPoly xi = xi_pow(k, 1);
    TwistedPoly cg(k, {g});
    CHECK(tp_mul(xi, cg) == TwistedPoly::monomial(k, k->add(g, 1), 1));
    CHECK(tp_mul(xi, xi) == xi_pow(k, 2));
    TwistedPoly gxi = TwistedPoly::monomial(k, g, 1);
    CHECK(tp_mul(gxi, gxi) == xi_pow(k, 2));
}

TEST_CASE("twisted division examples")
{
    auto k = make_field(3, 2, {1, 0, 1});
    TwistedPoly f(k, {2, 5, 7});
    for (Side s : {Side::left, Side::right}) {
        auto [q, r] = tp_divmod(f, f, s);
        CHECK(q == TwistedPoly(k, {1}));
        CHECK(r.is_zero());
        auto [q2, r2] = tp_divmod(xi_pow(k, 2), xi_pow(k, 1), s);
        CHECK(q2 == xi_pow(k, 1));
        CHECK(r2.is_zero());
    }
    CHECK_THROWS_AS(tp_divmod(f, TwistedPoly(k), Side::left), std::domain_error);
}

TEST_CASE("twisted division roundtrip over F_9")
{
    auto k = make_field(3, 2, {1, 0, 1});
    std::mt19937 rng(99);
    for (int it = 0; it < 300; ++it) {
        TwistedPoly f = random_poly(k, rng, 6), g = random_poly(k, rng, 6);
        if (g.is_zero())
            continue;
        auto [ql, rl] = tp_divmod(f, g, Side::left);
        CHECK(tp_add(tp_mul(ql, g), rl) == f);
        CHECK((rl.is_zero() || rl.deg() < g.deg()));
        auto [qr, rr] = tp_divmod(f, g, Side::right);
        CHECK(tp_add(tp_mul(g, qr), rr) == f);
        CHECK((rr.is_zero() || rr.deg() < g.deg()));
    }
}

TEST_CASE("diagonal normal form")
{
    auto k = make_field(2);
    SUBCASE("cyclic xi^3")
    {
        NormalForm nf = module_normal_form(FPModule::cyclic(xi_pow(k, 3)));
        REQUIRE(nf.diag.size() == 1);
        CHECK(nf.diag[0] == xi_pow(k, 3));
        CHECK(nf.free_rank == 0);
    }
    SUBCASE("row (xi, xi^2)")
    {
        FPModule m;
        m.k = k;
        m.gens = 2;
        m.rels = {{xi_pow(k, 1), xi_pow(k, 2)}};
        NormalForm nf = module_normal_form(m);
        CHECK(nf.free_rank == 1);
        REQUIRE(nf.diag.size() == 1);
        CHECK(nf.diag[0].deg() == 1);
        CHECK(nf.diag[0].valuation() == 1);
        for (int n = 1; n <= 10; ++n)
            CHECK(truncated_quotient_dim(m, n) == std::size_t(n + 1));
    }
    SUBCASE("zero presentation")
    {
        FPModule m;
        m.k = k;
        m.gens = 2;
        m.rels = {{TwistedPoly(k), TwistedPoly(k)}};
        NormalForm nf = module_normal_form(m);
        CHECK(nf.free_rank == 2);
        CHECK(nf.diag.empty());
    }
}

TEST_CASE("normal form preserves truncated quotients")
{
    auto k = make_field(2, 2, {1, 1, 1});
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> sz(1, 3);
    for (int it = 0; it < 40; ++it) {
        FPModule m;
        m.k = k;
        m.gens = std::size_t(sz(rng));
        int rows = sz(rng);
        for (int i = 0; i < rows; ++i) {
            std::vector<TwistedPoly> row;
            for (std::size_t j = 0; j < m.gens; ++j)
                row.push_back(random_poly(k, rng, 3));
            m.rels.push_back(row);
        }
        NormalForm nf = module_normal_form(m);
        FPModule d = FPModule::diagonal(k, nf.diag, nf.free_rank);
        for (int n = 1; n <= 10; ++n)
            CHECK(truncated_quotient_dim(m, n) == truncated_quotient_dim(d, n));
    }
}

TEST_CASE("torsion and quotient dimensions")
{
    auto k = make_field(3);
    FPModule c3 = FPModule::cyclic(xi_pow(k, 3));
    auto a = torsion_and_quotient(c3, 1);
    CHECK(a.kernel_dim == 1);
    CHECK(a.quotient_dim == 1);
    auto b = torsion_and_quotient(c3, 5);
    CHECK(b.kernel_dim == 3);
    CHECK(b.quotient_dim == 3);
    for (int r = 1; r <= 6; ++r) {
        auto f = torsion_and_quotient(FPModule::free(k, 1), r);
        CHECK(f.kernel_dim == 0);
        CHECK(f.quotient_dim == std::size_t(r));
    }
    CHECK_THROWS(torsion_and_quotient(c3, 0));
}

// For 0 -> A -> B -> C -> 0, tensoring with k{xi}/xi^N gives a six-term exact sequence
// 0 -> ker xi^N|A -> ker xi^N|B -> ker xi^N|C -> A/xi^N -> B/xi^N -> C/xi^N -> 0.
TEST_CASE("six-term sequence has zero alternating sum")
{
    auto k = make_field(2);
    auto alt = [](const FPModule& a, const FPModule& b, const FPModule& c, int n) {
        auto x = torsion_and_quotient(a, n), y = torsion_and_quotient(b, n), z = torsion_and_quotient(c, n);
        return (long long)(x.kernel_dim) - (long long)(y.kernel_dim) + (long long)(z.kernel_dim) -
               (long long)(x.quotient_dim) + (long long)(y.quotient_dim) - (long long)(z.quotient_dim);
    };
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 1; n <= 10; ++n) {
                // k{xi}/xi^a -> k{xi}/xi^(a+b) -> k{xi}/xi^b
                CHECK(alt(FPModule::cyclic(xi_pow(k, a)), FPModule::cyclic(xi_pow(k, a + b)),
                          FPModule::cyclic(xi_pow(k, b)), n) == 0);
                // k{xi} -> k{xi} -> k{xi}/xi^a, the first map being right multiplication by xi^a
                CHECK(alt(FPModule::free(k, 1), FPModule::free(k, 1), FPModule::cyclic(xi_pow(k, a)), n) == 0);
                // split sequence with a free summand
                CHECK(alt(FPModule::cyclic(xi_pow(k, a)), FPModule::diagonal(k, {xi_pow(k, a)}, 1),
                          FPModule::free(k, 1), n) == 0);
            }
}

TEST_CASE("derived completion")
{
    auto k = make_field(2);
    SUBCASE("free rank one")
    {
        auto r = derived_completion(FPModule::free(k, 1), 8);
        CHECK(r.free_rank == 1);
        CHECK(r.torsion.empty());
        CHECK(r.l1_dim == 0);
    }
    SUBCASE("xi-power torsion is already complete")
    {
        for (int e = 1; e <= 4; ++e) {
            auto r = derived_completion(FPModule::cyclic(xi_pow(k, e)), 10);
            CHECK(r.free_rank == 0);
            CHECK(r.torsion == std::vector<int>{e});
            CHECK(r.l1_dim == 0);
        }
    }
    SUBCASE("xi - 1 completes to zero")
    {
        FPModule m = FPModule::cyclic(TwistedPoly(k, {1, 1}));
        auto r = derived_completion(m, 8);
        CHECK(r.free_rank == 0);
        CHECK(r.torsion.empty());
        for (int n = 1; n <= 8; ++n)
            CHECK(r.quotient_dims[std::size_t(n - 1)] == truncated_quotient_dim(m, n));
    }
    SUBCASE("mixed module, quotients match the raw presentation")
    {
        FPModule m = FPModule::diagonal(k, {xi_pow(k, 2), TwistedPoly(k, {0, 1, 1})}, 1);
        auto r = derived_completion(m, 10);
        CHECK(r.free_rank == 1);
        CHECK(r.torsion == std::vector<int>{1, 2});
        for (int n = 1; n <= 10; ++n)
            CHECK(r.quotient_dims[std::size_t(n - 1)] == truncated_quotient_dim(m, n));
        FPModule t = completion_truncation(r, k, 10);
        for (int n = 1; n <= 10; ++n)
            CHECK(truncated_quotient_dim(t, n) == r.quotient_dims[std::size_t(n - 1)]);
    }
    CHECK_THROWS(derived_completion(FPModule::free(k, 1), 2));
}

TEST_CASE("derived completeness")
{
    auto k = make_field(3);
    CHECK(is_derived_complete(FPModule::cyclic(xi_pow(k, 2))));
    CHECK_FALSE(is_derived_complete(FPModule::free(k, 1)));
    CHECK(is_derived_complete(FPModule::free(k, 0)));
    CHECK_FALSE(is_derived_complete(FPModule::cyclic(TwistedPoly(k, {1, 1}))));
}
