#include "doctest.h"
#include "rla/hopf.hpp"

using namespace rla;

TEST_CASE("restricted Lie algebra validation")
{
    for (int p : {2, 3, 5}) {
        auto k = make_field(p);
        CHECK(validate_restricted_lie(abelian_lie(k, {1, 1, 2})).ok);
        CHECK(validate_restricted_lie(heisenberg_lie(k)).ok);
        CHECK(validate_restricted_lie(sl2_lie(k, true)).ok);
        auto truncated = module_lie(k, FPModule::cyclic(TwistedPoly::monomial(k, 1, 2)), 20);
        CHECK(truncated.dim() == 2);
        CHECK(validate_restricted_lie(truncated).ok);
        auto bad = validate_restricted_lie(sl2_lie(k, false));
        CHECK_FALSE(bad.ok);
        CHECK(bad.witness.has_value());
        CHECK_FALSE(bad.witness_str.empty());
    }
}

TEST_CASE("Jacobson terms vanish on abelian algebras")
{
    auto k = make_field(3);
    auto l = abelian_lie(k, {1, 1});
    for (const auto& s : jacobson_terms(l, l.basis_vector(0), l.basis_vector(1)))
        for (Elt c : s)
            CHECK(c == 0);
}

TEST_CASE("p-operation on the Heisenberg algebra is additive up to Jacobson terms")
{
    auto k = make_field(2);
    auto h = heisenberg_lie(k);
    Vec x = h.basis_vector(0), y = h.basis_vector(1);
    Vec sum(3);
    for (std::size_t i = 0; i < 3; ++i)
        sum[i] = k->add(x[i], y[i]);
    // at p = 2, xi(x + y) = xi(x) + xi(y) + [x, y]
    Vec expect = h.br(x, y);
    Vec xx = h.xi_of(x), yy = h.xi_of(y);
    for (std::size_t i = 0; i < 3; ++i)
        expect[i] = k->add(expect[i], k->add(xx[i], yy[i]));
    CHECK(h.xi_of(sum) == expect);
}

TEST_CASE("truncated symmetric algebra dimensions")
{
    CHECK(symtr_dims(2, {{1, 1}}, 4) == std::vector<long long>{1, 1, 0, 0, 0});
    CHECK(symtr_dims(3, {{1, 1}}, 4) == std::vector<long long>{1, 1, 1, 0, 0});
    CHECK(symtr_dims(3, {{1, 1}}, 4, SymSigns::koszul) == std::vector<long long>{1, 1, 0, 0, 0});
    CHECK(symtr_dims(3, {}, 3) == std::vector<long long>{1, 0, 0, 0});
    CHECK(symtr_dims(2, {{1, 2}}, 3) == std::vector<long long>{1, 2, 1, 0});
}

TEST_CASE("restricted enveloping algebra dimensions")
{
    auto k3 = make_field(3);
    CHECK(ur_dims(abelian_lie(k3, {1}), 5) == std::vector<long long>{1, 1, 1, 0, 0, 0});
    auto k2 = make_field(2);
    CHECK(ur_dims(free_module_lie(k2, 1, 8), 8) == std::vector<long long>(9, 1));
    CHECK(ur_dims(abelian_lie(k2, {}), 3) == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("PBW dimensions")
{
    for (int p : {2, 3}) {
        auto k = make_field(p);
        CHECK(pbw_check(heisenberg_lie(k), 10).pass());
        CHECK(pbw_check(abelian_lie(k, {1, 1, 2}), 10).pass());
        CHECK(pbw_check(free_module_lie(k, 2, 10), 10).pass());
    }
}

TEST_CASE("non-confluent presentations are rejected")
{
    auto k = make_field(2);
    GradedAlgebraPresentation a;
    a.k = k;
    a.weights = {1, 1, 2};
    a.rules[{0, 1}] = {{{2}, 1}};
    a.rules[{1, 1}] = {};
    CHECK_THROWS_AS(check_confluence(a), NonConfluent);
    CHECK_NOTHROW(check_confluence(ur_presentation(heisenberg_lie(k))));
}

TEST_CASE("truncated coalgebras")
{
    auto k = make_field(2);
    CHECK(truncated_coalgebra_check(dual_of_truncated_polynomial(k, 2)));
    CHECK_FALSE(truncated_coalgebra_check(group_coalgebra(k, 2)));
    CHECK(truncated_coalgebra_check(dual_of_truncated_polynomial(k, 1)));
    auto k3 = make_field(3);
    CHECK(truncated_coalgebra_check(dual_of_truncated_polynomial(k3, 3)));
    CHECK_FALSE(truncated_coalgebra_check(dual_of_truncated_polynomial(k3, 4)));
}

TEST_CASE("bar complex homology")
{
    auto k2 = make_field(2);
    CHECK(bar_tor(polynomial_presentation(k2, 1), 4, 8) == BigradedDims{{{0, 0}, 1}, {{1, 1}, 1}});
    BigradedDims ext;
    for (int s = 0; s <= 4; ++s)
        ext[{s, s}] = 1;
    CHECK(bar_tor(truncated_presentation(k2, 1, 2), 4, 8) == ext);
    auto k3 = make_field(3);
    BigradedDims t3{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{4, 6}, 1}};
    CHECK(bar_tor(truncated_presentation(k3, 1, 3), 4, 8) == t3);
    GradedAlgebraPresentation trivial;
    trivial.k = k2;
    CHECK(bar_tor(trivial, 4, 8) == BigradedDims{{{0, 0}, 1}});
}

TEST_CASE("homology of abelian restricted Lie algebras")
{
    for (int p : {2, 3}) {
        auto k = make_field(p);
        CHECK(abelian_homology_check(FPModule::free(k, 1), 4, 10).matches);
        CHECK(abelian_homology_check(FPModule::free(k, 2), 3, 8).matches);
        auto control = abelian_homology_check(FPModule::cyclic(TwistedPoly::monomial(k, 1, 1)), 4, 10);
        CHECK_FALSE(control.matches);
        CHECK(control.tor.count({3, 1 + p}) == 1);
    }
}
