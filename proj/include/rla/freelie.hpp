#pragma once

#include "rla/errors.hpp"
#include "rla/field.hpp"
#include "rla/linalg.hpp"
#include "rla/rewrite.hpp"
#include "rla/simplicial.hpp"

#include <map>
#include <string>
#include <vector>

namespace rla {

using Perm = std::vector<int>;  // 0-based, perm[j] is the image of j

// Lie_n inside the multilinear part of the free associative algebra, with basis the
// left-normed brackets [..[[x_0, x_a1], x_a2], .., x_a(n-1)].
struct LieOperad
{
    int n = 1;
    std::vector<Word> basis;  // letter sequences starting with 0
    std::map<Word, std::size_t> index;

    // Matrix of relabeling letter j -> tau[j]; columns are images of basis vectors.
    Matrix action(const Field& k, const Perm& tau) const;
    std::size_t dim() const { return basis.size(); }
};

LieOperad lie_operad_basis(int n);
Comb left_normed_expansion(const Word& letters, int p);

// Lyndon words over letters 0..r-1 with the given multiplicities.
std::vector<Word> lyndon_words(const std::vector<int>& mult);
Comb lyndon_bracket(const Word& w, int p);
long long lyndon_count(const std::vector<int>& mult);
// Dimension of the free (restricted) Lie algebra in this multidegree.
long long primitive_count(const std::vector<int>& mult, int p, bool restricted);

constexpr double default_lie_budget = 2e7;
// Sum over q <= qmax of (dim V_q)^n (n-1)!.
double lie_budget_cost(const std::vector<std::size_t>& dims, int n, int qmax);

// Degreewise dimensions for q <= top of V.
struct LiePowerDims
{
    std::vector<long long> invariants;    // L^r_n(V_q) = (Lie_n (x) V^n)^{S_n}
    std::vector<long long> coinvariants;  // (Lie_n (x) V^n)_{S_n}
    std::vector<long long> norm_image;    // image of the norm map = free Lie power L_n(V_q)
};
LiePowerDims lie_power_dims(const std::vector<std::size_t>& dims, int n, int p);

SimplicialVectorSpace restricted_lie_power(const SimplicialVectorSpace& v, int n, double budget = default_lie_budget);

struct OracleOptions
{
    bool restricted = true;  // false: free Lie power L_n instead of L^r_n
    double budget = default_lie_budget;
};

// dims of pi_q of L^r_n(V) (or L_n(V)) for q <= max_q, from normalized chains.
std::vector<long long> homotopy_oracle(const SimplicialVectorSpace& v, int n, int max_q, const OracleOptions& opt = {});
// Normalized chain dimensions used by the oracle, q <= max_q + 1.
std::vector<long long> oracle_chain_dims(const SimplicialVectorSpace& v, int n, int max_q, const OracleOptions& opt = {});

struct HomotopyChart
{
    int p, l;
    std::map<std::pair<int, long long>, long long> dims;  // (stem, n) -> dim, nonzero entries
};

// Allowed Lie-power index for weight s: n = p^s, or (p odd, l odd) n = 2 p^(s-1).
long long closed_form_dim(int p, int l, int stem, long long n);
HomotopyChart homotopy_closed_form(int p, int l, int s_max, int stem_max);

struct CurtisReport
{
    int p = 2, n = 1, max_q = 0;
    std::vector<long long> lr_pn, lr_n, l_pn, coinv_pn;
    bool identity_holds = true;
    int connectivity = -1;  // c: pi_i(V) = 0 for i <= c
    std::map<int, std::vector<long long>> lie_homotopy;  // m -> pi_q(L_m(V))
    std::map<int, int> bound;                            // m -> c + ceil(log2 m)
    bool connectivity_holds = true;
    bool pass() const { return identity_holds && connectivity_holds; }
};

CurtisReport curtis_split_check(const SimplicialVectorSpace& v, int n, int max_q);

struct HMCell
{
    int degree, weight;
    long long lhs, rhs;
};

struct HMReport
{
    std::vector<std::string> hall_words;
    std::vector<HMCell> cells;
    bool pass = true;
};

HMReport hilton_milnor_dims(int p, const std::map<int, int>& v1, const std::map<int, int>& v2, int weight_bound,
                            int degree_bound);

}  // namespace rla
