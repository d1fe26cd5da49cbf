#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rla {

using Elt = std::uint32_t;

// F_q for q = p^n. Elements are coded as sum c_i p^i over the coefficients of the
// residue polynomial, so the prime subfield is {0, ..., p-1} with the obvious codes.
class Field
{
public:
    explicit Field(int p);
    // modulus: coefficients of a monic (or not) degree-n polynomial, low degree first.
    Field(int p, int n, std::vector<int> modulus);

    int p() const { return p_; }
    int degree() const { return n_; }
    std::uint32_t order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(long long c) const;
    Elt from_coeffs(const std::vector<int>& c) const;
    std::vector<int> coeffs(Elt a) const;

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, long long e) const;
    // a^(p^s); s may be negative.
    Elt frobenius(Elt a, int s) const;

    std::string str(Elt a) const;
    bool operator==(const Field& o) const { return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_; }

private:
    int p_;
    int n_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> log_, exp_;
    std::vector<std::uint32_t> pw_;  // p^i
    void build_tables();
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int p);
// Exhaustive search for a factor of degree <= n/2.
bool is_irreducible(int p, const std::vector<int>& poly);
FieldPtr make_field(int p, int n = 1, std::vector<int> modulus = {});

}  // namespace rla
