#include "doctest.h"
#include "rla/lambda.hpp"

#include <random>
#include <set>

using namespace rla;

namespace {

// p = 2 codes: lambda_a is a + 1
int l2(int a)
{
    return a + 1;
}

}  // namespace

TEST_CASE("lambda normalization examples at p = 2")
{
    CHECK(lambda_normalize(2, {l2(1), l2(2)}) == Comb{{{l2(1), l2(2)}, 1}});
    CHECK(lambda_normalize(2, {l2(0), l2(1)}).empty());
    // lambda_i lambda_(2i+1) = 0
    CHECK(lambda_normalize(2, {l2(2), l2(5)}).empty());
    CHECK(lambda_normalize(2, {l2(2), l2(6)}) == Comb{{{l2(3), l2(5)}, 1}});
    for (int a = 0; a <= 6; ++a)
        for (int b = 2 * a + 1; b <= 16; ++b)
            for (const auto& [w, c] : lambda_normalize(2, {l2(a), l2(b)})) {
                CHECK(w.size() == 2);
                CHECK(lambda_degree(w) == a + b);
                CHECK(lambda_admissible(2, w));
            }
}

TEST_CASE("lambda generator codes")
{
    CHECK(lambda_valid(3, 1));   // mu_0
    CHECK_FALSE(lambda_valid(3, 2));
    CHECK(lambda_valid(3, 4));   // lambda_1
    CHECK(lambda_decode(3, 5).kind == LambdaKind::mu);
    CHECK(lambda_decode(3, 5).a == 1);
    CHECK(lambda_encode(3, {LambdaKind::lambda, 2}) == 8);
    CHECK_THROWS(lambda_normalize(3, {2}));
}

TEST_CASE("lambda admissible basis examples")
{
    CHECK(lambda_admissible_basis(2, 0, 3) == std::vector<Word>{{1, 1, 1}});
    CHECK(lambda_admissible_basis(2, 1, 1) == std::vector<Word>{{l2(1)}});
    auto b = lambda_admissible_basis(2, 2, 2);
    CHECK(std::set<Word>(b.begin(), b.end()) == std::set<Word>{{l2(1), l2(1)}, {l2(2), l2(0)}});
}

TEST_CASE("lambda filtration examples")
{
    // the empty monomial of weight 0 is listed too
    for (const auto& w : lambda_l_basis(2, 1, 6, 4))
        for (int c : w)
            CHECK(c == l2(0));
    CHECK(lambda_l_basis(2, 1, 6, 4).size() == 5);
    auto b = lambda_l_basis(2, 2, 1, 1);
    CHECK(std::set<Word>(b.begin(), b.end()) == std::set<Word>{{}, {l2(0)}, {l2(1)}});
    auto c = lambda_l_basis(3, 1, 10, 1);
    CHECK(std::set<Word>(c.begin(), c.end()) == std::set<Word>{{}, {1}});
}

TEST_CASE("lambda filtration is monotone")
{
    for (int p : {2, 3})
        for (int l = 1; l <= 5; ++l) {
            auto a = lambda_l_basis(p, l, 20, 3), b = lambda_l_basis(p, l + 1, 20, 3);
            std::set<Word> big(b.begin(), b.end());
            for (const auto& w : a)
                CHECK(big.count(w) == 1);
        }
}

TEST_CASE("tensor with lambda")
{
    auto count_weight = [](const auto& cells, int weight) {
        std::size_t n = 0;
        for (const auto& [key, cell] : cells)
            if (key.second == weight)
                n += cell.basis.size();
        return n;
    };
    CHECK(count_weight(w_tensor_lambda(2, {{2, 1}}, Flavor::module, 10, 1), 1) == 2);
    CHECK(count_weight(w_tensor_lambda(2, {{2, 1}}, Flavor::strong, 10, 1), 1) == 1);
    CHECK(count_weight(w_tensor_lambda(2, {{1, 1}}, Flavor::strong, 10, 3), 1) == 0);
}

TEST_CASE("lambda rewriting is confluent and closed")
{
    std::mt19937 rng(42);
    for (int p : {2, 3, 5}) {
        std::uniform_int_distribution<int> len(1, 4), idx(1, 20);
        for (int it = 0; it < 150; ++it) {
            Word w;
            int n = len(rng);
            while (int(w.size()) < n) {
                int c = idx(rng);
                if (lambda_valid(p, c))
                    w.push_back(c);
            }
            Comb a = lambda_normalize(p, w, Strategy::leftmost);
            CHECK(a == lambda_normalize(p, w, Strategy::rightmost));
            auto basis = lambda_admissible_basis(p, lambda_degree(w), int(w.size()));
            std::set<Word> span(basis.begin(), basis.end());
            for (const auto& [m, c] : a)
                CHECK(span.count(m) == 1);
        }
    }
}
