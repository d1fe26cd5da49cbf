#pragma once

#include "rla/field.hpp"
#include "rla/rewrite.hpp"
#include "rla/steenrod.hpp"

#include <map>
#include <string>
#include <vector>

namespace rla {

// Lambda generators are coded by integers: at p = 2, lambda_a has code a + 1; at odd p,
// lambda_a (a >= 1) has code 2a(p-1) and mu_a (a >= 0) has code 2a(p-1) + 1.
// The internal degree of a generator is code - 1.
enum class LambdaKind { lambda, mu };
struct LambdaGen
{
    LambdaKind kind;
    int a;
};

bool lambda_valid(int p, int code);
LambdaGen lambda_decode(int p, int code);
int lambda_encode(int p, LambdaGen g);
std::string lambda_name(int p, int code);
std::string lambda_word_name(int p, const Word& w);
int lambda_degree(const Word& w);

std::optional<Comb> lambda_pair(int p, int x, int y);
bool lambda_admissible(int p, const Word& w);
Comb lambda_normalize(int p, const Word& w, Strategy s = Strategy::leftmost);

using LambdaElement = std::map<Word, Elt>;
LambdaElement lambda_normalize(const Field& k, const Word& w, Elt coeff, Strategy s = Strategy::leftmost);

std::vector<Word> lambda_admissible_basis(int p, int m, int s);
// Whether a generator may lead a monomial of Lambda(l).
bool lambda_in_filtration(int p, int l, int code);
std::vector<Word> lambda_l_basis(int p, int l, int max_degree, int max_weight);

struct TensorLambdaCell
{
    int degree;  // |w| + |y|
    int weight;
    std::vector<std::string> basis;
};

// Leading-generator condition for w (x) y with |w| = d; module = hat, strong = tilde.
bool lambda_leading_ok(int p, int code, int d, Flavor f);
// Bigraded cells of W (x)^ Lambda or W (x)~ Lambda, keyed by (degree, weight).
std::map<std::pair<int, int>, TensorLambdaCell> w_tensor_lambda(int p, const std::map<int, int>& w_dims, Flavor f,
                                                                 int max_degree, int max_weight);

}  // namespace rla
