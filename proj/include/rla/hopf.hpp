#pragma once

#include "rla/field.hpp"
#include "rla/linalg.hpp"
#include "rla/rewrite.hpp"
#include "rla/twisted.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rla {

using Vec = std::vector<Elt>;

// Finite-dimensional restricted Lie algebra given by structure constants.
struct RestrictedLie
{
    FieldPtr k;
    std::vector<std::string> labels;
    std::vector<int> weights;                   // empty, or one positive weight per basis vector
    std::vector<std::vector<Vec>> bracket;      // bracket[i][j] = [e_i, e_j]
    std::vector<Vec> xi;                        // xi[i] = xi(e_i)

    std::size_t dim() const { return labels.size(); }
    Vec basis_vector(std::size_t i) const;
    Vec br(const Vec& x, const Vec& y) const;
    Matrix ad(const Vec& x) const;
    // xi extended to all of L by semilinearity and the s_i correction, summing basis terms in order.
    Vec xi_of(const Vec& x) const;
    std::string vec_str(const Vec& x) const;
};

RestrictedLie abelian_lie(FieldPtr k, const std::vector<int>& weights);
RestrictedLie heisenberg_lie(FieldPtr k);
// trivxi of the free module of the given rank, truncated at the weight bound: basis xi^i e_r
// of weight p^i, xi(xi^i e) = xi^(i+1) e, zero past the bound.
RestrictedLie free_module_lie(FieldPtr k, int rank, int weight_bound);
// trivxi of a module whose normal form has monomial diagonal entries, truncated at the bound.
RestrictedLie module_lie(FieldPtr k, const FPModule& m, int weight_bound);
// 3-dimensional sl2 with its standard p-operation, or with a broken one.
RestrictedLie sl2_lie(FieldPtr k, bool correct_xi);

// s_i(x, y) as the t^(i-1) coefficient of ad(tx + y)^(p-1)(x), i = 1..p-1.
std::vector<Vec> jacobson_terms(const RestrictedLie& l, const Vec& x, const Vec& y);

struct LieValidation
{
    bool ok = true;
    std::string failure;        // axiom that failed
    std::optional<std::pair<Vec, Vec>> witness;
    std::string witness_str;
};

LieValidation validate_restricted_lie(const RestrictedLie& l);

enum class SymSigns { weight_only, koszul };

// Dims of Sym(W)/(p-th powers) in weights 0..bound. With koszul signs at odd p, odd-weight
// generators are exterior.
std::vector<long long> symtr_dims(int p, const std::map<int, int>& w, int bound, SymSigns signs = SymSigns::weight_only);

// Monomial rewriting system on generators 0..n-1; a word is normal when it contains no rule
// left-hand side as a subword.
struct GradedAlgebraPresentation
{
    FieldPtr k;
    std::vector<int> weights;
    std::map<Word, std::map<Word, Elt>> rules;

    int weight(const Word& w) const;
    std::map<Word, Elt> normalize(std::map<Word, Elt> x) const;
    bool is_normal(const Word& w) const;
    // Normal words of each weight 0..bound.
    std::vector<std::vector<Word>> basis(int bound) const;
};

struct NonConfluent : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

GradedAlgebraPresentation ur_presentation(const RestrictedLie& l);
// Throws NonConfluent naming the first overlap that resolves in two different ways.
void check_confluence(const GradedAlgebraPresentation& a);
std::vector<long long> ur_dims(const RestrictedLie& l, int bound);

struct PBWReport
{
    std::vector<long long> ur, symtr;
    bool pass() const { return ur == symtr; }
};
PBWReport pbw_check(const RestrictedLie& l, int bound);

// Counital coalgebra: delta[i](j, k) is the coefficient of e_j (x) e_k in the coproduct of e_i.
struct Coalgebra
{
    FieldPtr k;
    std::vector<Elt> counit;
    std::vector<Matrix> delta;
    std::size_t dim() const { return counit.size(); }
};

Coalgebra dual_of_truncated_polynomial(FieldPtr k, int height);  // dual of k[x]/x^height
Coalgebra group_coalgebra(FieldPtr k, int order);                // group-like basis
bool truncated_coalgebra_check(const Coalgebra& c);

using BigradedDims = std::map<std::pair<int, int>, long long>;  // (s, t) -> dim, nonzero only

GradedAlgebraPresentation polynomial_presentation(FieldPtr k, int weight);
GradedAlgebraPresentation truncated_presentation(FieldPtr k, int weight, int height);
BigradedDims bar_tor(const GradedAlgebraPresentation& a, int s_max, int t_max);
BigradedDims kunneth(const BigradedDims& x, const BigradedDims& y, int s_max, int t_max);
// Exterior algebra on generators in bidegree (1, weight).
BigradedDims exterior_dims(const std::vector<int>& weights, int s_max, int t_max);

struct AbelianHomologyReport
{
    BigradedDims tor, exterior;
    bool matches = false;
};

AbelianHomologyReport abelian_homology_check(const FPModule& m, int s_max, int t_max);

}  // namespace rla
