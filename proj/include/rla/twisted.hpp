#pragma once

#include "rla/field.hpp"

#include <string>
#include <vector>

namespace rla {

// f = sum a_i xi^i with coefficients on the left and xi a = a^p xi.
struct TwistedPoly
{
    FieldPtr k;
    std::vector<Elt> c;

    TwistedPoly() = default;
    explicit TwistedPoly(FieldPtr field, std::vector<Elt> coeffs = {});
    static TwistedPoly monomial(FieldPtr field, Elt a, int i);

    bool is_zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    // Lowest degree with a nonzero coefficient; -1 for zero.
    int valuation() const;
    Elt coeff(int i) const { return i >= 0 && i < int(c.size()) ? c[i] : 0; }
    void trim();
    std::string str() const;
    bool operator==(const TwistedPoly& o) const { return c == o.c; }
};

enum class Side { left, right };

TwistedPoly tp_add(const TwistedPoly& f, const TwistedPoly& g);
TwistedPoly tp_sub(const TwistedPoly& f, const TwistedPoly& g);
TwistedPoly tp_mul(const TwistedPoly& f, const TwistedPoly& g);
// left: f = q g + r; right: f = g q + r; r = 0 or deg r < deg g.
std::pair<TwistedPoly, TwistedPoly> tp_divmod(const TwistedPoly& f, const TwistedPoly& g, Side side);

// Left module with generators e_1..e_g and relations sum_j rels[i][j] e_j = 0.
struct FPModule
{
    FieldPtr k;
    std::size_t gens = 0;
    std::vector<std::vector<TwistedPoly>> rels;

    static FPModule cyclic(const TwistedPoly& d);
    static FPModule free(FieldPtr k, std::size_t rank);
    static FPModule diagonal(FieldPtr k, const std::vector<TwistedPoly>& d, std::size_t free_rank);
};

struct NormalForm
{
    std::vector<TwistedPoly> diag;  // nonzero diagonal entries, M = (+) k{xi}/k{xi}d (+) free
    std::size_t free_rank = 0;
};

NormalForm module_normal_form(const FPModule& m);

struct TorsionQuotient
{
    std::size_t kernel_dim = 0;    // dim_k ker(xi^r)
    std::size_t quotient_dim = 0;  // dim_k M / xi^r M
};

TorsionQuotient torsion_and_quotient(const FPModule& m, int r);
TorsionQuotient torsion_and_quotient(const NormalForm& nf, int r);

// dim_k M / xi^n M by linear algebra on the raw presentation.
std::size_t truncated_quotient_dim(const FPModule& m, int n);

struct CompletionResult
{
    std::size_t free_rank = 0;            // rank of L0 over k{{xi}}
    std::vector<int> torsion;             // exponents r of summands k{xi}/xi^r in L0
    std::size_t l1_dim = 0;
    int stable_level = 0;                 // N*
    std::vector<std::size_t> quotient_dims;  // dim L0 / xi^n L0 for n = 1..N
    std::vector<std::size_t> kernel_dims;    // kernels of the truncated relation map
    std::vector<std::size_t> kernel_image_dims;  // images of level-N kernels at level n
};

CompletionResult derived_completion(const FPModule& m, int N);
bool is_derived_complete(const FPModule& m);
// Truncation at level N of L0 as a finitely presented module (free summands become k{xi}/xi^N).
FPModule completion_truncation(const CompletionResult& r, FieldPtr k, int N);

struct CompletionError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

}  // namespace rla
