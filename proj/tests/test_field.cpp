#include "doctest.h"
#include "rla/field.hpp"

#include <vector>

using namespace rla;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus, all mod p.
std::vector<int> poly_mulmod(int p, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m)
{
    std::size_t n = m.size() - 1;
    std::vector<int> c(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (std::size_t d = c.size() - 1; d >= n; --d) {
        int lead = c[d];
        for (std::size_t i = 0; i <= n; ++i)
            c[d - n + i] = ((c[d - n + i] - lead * m[i]) % p + p) % p;
    }
    c.resize(n);
    return c;
}

std::vector<int> digits(int p, std::size_t n, unsigned code)
{
    std::vector<int> d(n);
    for (auto& x : d) {
        x = int(code % unsigned(p));
        code /= unsigned(p);
    }
    return d;
}

void check_against_polynomials(int p, int n, const std::vector<int>& modulus)
{
    auto k = make_field(p, n, modulus);
    for (unsigned a = 0; a < k->order(); ++a)
        for (unsigned b = 0; b < k->order(); ++b) {
            auto prod = poly_mulmod(p, digits(p, n, a), digits(p, n, b), modulus);
            CHECK(k->coeffs(k->mul(a, b)) == prod);
        }
}

}  // namespace

TEST_CASE("field multiplication matches polynomial arithmetic")
{
    check_against_polynomials(2, 2, {1, 1, 1});
    check_against_polynomials(3, 2, {1, 0, 1});
    check_against_polynomials(2, 3, {1, 1, 0, 1});
    check_against_polynomials(5, 2, {2, 0, 1});
}

TEST_CASE("prime field arithmetic")
{
    auto k = make_field(7);
    CHECK(k->mul(3, 5) == 1);
    CHECK(k->inv(3) == 5);
    CHECK(k->neg(2) == 5);
    CHECK(k->from_int(-1) == 6);
    CHECK(k->frobenius(4, 3) == 4);
}

TEST_CASE("extension fields need an irreducible modulus")
{
    CHECK_THROWS(make_field(2, 2));
    CHECK_THROWS(make_field(2, 2, {1, 0, 1}));
    CHECK_THROWS(make_field(4));
    CHECK(is_irreducible(3, {1, 0, 1}));
    CHECK_FALSE(is_irreducible(2, {1, 0, 1}));
}

TEST_CASE("frobenius on F_4 and F_9")
{
    auto f4 = make_field(2, 2, {1, 1, 1});
    Elt g = f4->from_coeffs({0, 1});
    CHECK(f4->frobenius(g, 1) == f4->add(g, 1));
    CHECK(f4->frobenius(g, -1) == f4->add(g, 1));
    auto f9 = make_field(3, 2, {1, 0, 1});
    for (Elt a = 0; a < f9->order(); ++a) {
        CHECK(f9->frobenius(f9->frobenius(a, 1), 1) == a);
        CHECK(f9->frobenius(a, 1) == f9->pow(a, 3));
        CHECK(f9->frobenius(f9->frobenius(a, 1), -1) == a);
        if (a)
            CHECK(f9->mul(a, f9->inv(a)) == 1);
    }
}
