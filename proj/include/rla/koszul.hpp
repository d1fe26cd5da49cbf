#pragma once

#include "rla/errors.hpp"
#include "rla/field.hpp"
#include "rla/lambda.hpp"
#include "rla/linalg.hpp"
#include "rla/steenrod.hpp"

#include <map>
#include <string>
#include <vector>

namespace rla {

// Koszul dual monomials Pr_J use the same index set as St^i.
bool orth_admissible(int p, const Word& j);
// e(J) = last entry, e(empty) = 0.
int koszul_excess(const Word& j);
std::vector<Word> orth_admissible_basis(int p, int t, int s);
std::string koszul_word_name(const Word& j);

// Reverses J; generator codes are shared with the lambda module, so no relabeling is needed.
Word phi(int p, const Word& j);
Word phi_inverse(int p, const Word& y);
Comb k_normalize(int p, const Word& j, Strategy s = Strategy::leftmost);

struct DualityDegree
{
    int degree;
    int pairs;
    int dim_r;    // Adem relation space
    int dim_rp;   // Koszul dual relation space
    bool orthogonal;
    bool complementary;
};

struct DualityReport
{
    bool pass = true;
    std::vector<DualityDegree> degrees;
};

DualityReport quadratic_duality_check(int p, int max_degree);

// (Pr^J . Pr_i) as a combination of dual monomials Pr^{J''} of weight |J| - 1.
Comb dual_right_action(int p, const Word& j, int i);

struct KoszulGenerator
{
    Word j;
    int wdeg;    // degree of the W basis vector
    int windex;  // index within W in that degree
    int degree() const { return word_degree(j) + wdeg; }
};

struct KoszulBasisElement
{
    Word ops;
    int gen;  // index into KoszulComplex::gens[s]
};

struct KoszulComplex
{
    int p = 2;
    std::map<int, int> w;  // degree -> dim
    Flavor flavor = Flavor::module;
    int s_max = 0, t_max = 0;
    std::vector<std::vector<KoszulGenerator>> gens;
    // keyed by (s, t)
    std::map<std::pair<int, int>, std::vector<KoszulBasisElement>> basis;
    std::map<std::pair<int, int>, Matrix> d;  // rows: basis(s,t), cols: basis(s-1,t)

    const std::vector<KoszulBasisElement>& basis_at(int s, int t) const;
    std::string label(int s, const KoszulGenerator& g) const;
};

KoszulComplex build_koszul_complex(int p, const std::map<int, int>& w, Flavor f, int s_max, int t_max,
                                   std::size_t max_basis = 200000);

struct VerifyReport
{
    bool d_squared = true;
    bool acyclic = true;
    std::map<std::pair<int, int>, long long> homology;  // (s, t) -> dim, for s < s_max
    std::vector<std::string> witnesses;
    bool pass() const { return d_squared && acyclic; }
};

VerifyReport verify_complex(const KoszulComplex& k);

enum class ExtMethod { closed, resolution };

struct ExtEntry
{
    int s, t;
    long long dim;
    std::vector<std::string> basis;
};

// Closed form: generator count of the filtered Koszul dual times W, cross-checked against
// the lambda-side count.
ExtEntry ext_dims_closed(int p, const std::map<int, int>& w, Flavor f, int s, int t);
// Resolution: generator count read off a built complex after checking that the induced
// differential on maps to Sigma^t k vanishes.
ExtEntry ext_dims_resolution(const KoszulComplex& k, int s, int t);

struct ExtChart
{
    int p;
    std::map<int, int> w;
    Flavor flavor;
    std::vector<ExtEntry> entries;  // sorted by (s, t)
    bool methods_agree = true;
};

ExtChart ext_chart(int p, const std::map<int, int>& w, Flavor f, int s_max, int t_max, bool both_methods);

}  // namespace rla
