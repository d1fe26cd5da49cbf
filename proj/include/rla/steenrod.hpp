#pragma once

#include "rla/field.hpp"
#include "rla/rewrite.hpp"

#include <map>
#include <string>
#include <vector>

namespace rla {

// St^i: at p = 2 this is Sq^i; at odd p, i = 2a(p-1) is P^a and i = 2a(p-1)+1 is beta P^a.
bool st_valid(int p, int i);
struct StDecoded
{
    int a;
    int eps;
};
StDecoded st_decode(int p, int i);
int st_encode(int p, int a, int eps);
std::string st_name(int p, int i);
std::string st_word_name(int p, const Word& w);

// Adem rewrite of St^i St^j when i < p j, or nullopt if admissible.
std::optional<Comb> adem_pair(int p, int i, int j);
bool is_admissible(int p, const Word& w);

Comb adem_normalize(int p, const Word& w, Strategy s = Strategy::leftmost);

using SteenrodElement = std::map<Word, Elt>;
SteenrodElement adem_normalize(const Field& k, const Word& w, Elt coeff, Strategy s = Strategy::leftmost);

int word_degree(const Word& w);
// e(I) = i_1 - (p-1)(i_2 + ... + i_k), e(empty) = -1.
int excess(int p, const Word& w);

std::vector<Word> admissible_basis(int p, int t, int s);
// Admissible words of internal degree t and any length.
std::vector<Word> admissible_of_degree(int p, int t);

enum class Flavor { module, strong, algebra };
const char* flavor_name(Flavor f);
// Excess bound against a class of degree l.
bool excess_ok(int p, int e, int l, Flavor f);

struct UnstableBasisElement
{
    Word ops;
    int l;
    Flavor flavor;
    int degree() const { return l + word_degree(ops); }
    bool operator<(const UnstableBasisElement& o) const { return ops < o.ops; }
};

std::vector<UnstableBasisElement> unstable_basis(int p, int l, Flavor f, int max_degree);
std::map<int, long long> unstable_algebra_dims(int p, int l, int max_degree);

// St^i x expressed in the free unstable module basis on the generator of x.
Comb st_act(int p, int i, const UnstableBasisElement& x);

// Action on a scaled class: St^{w}(alpha x), evaluated either by moving alpha past one
// operation at a time and then normalizing, or by normalizing first.
SteenrodElement act_on_scaled(const Field& k, const Word& w, Elt alpha, bool normalize_first);

}  // namespace rla
