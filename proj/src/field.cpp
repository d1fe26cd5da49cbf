#include "rla/field.hpp"

#include <algorithm>

namespace rla {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

int modp(long long a, int p)
{
    a %= p;
    return int(a < 0 ? a + p : a);
}

void trim(std::vector<int>& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo b over F_p.
std::vector<int> poly_rem(std::vector<int> a, std::vector<int> b, int p)
{
    trim(a);
    trim(b);
    int lead_inv = 1;
    while ((lead_inv * b.back()) % p != 1)
        ++lead_inv;
    while (a.size() >= b.size()) {
        int c = modp(1LL * a.back() * lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = modp(a[i + shift] - 1LL * c * b[i], p);
        trim(a);
    }
    return a;
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& poly)
{
    std::vector<int> f;
    for (int c : poly)
        f.push_back(modp(c, p));
    trim(f);
    int n = int(f.size()) - 1;
    if (n < 1)
        return false;
    for (int d = 1; 2 * d <= n; ++d) {
        // all monic polynomials of degree d
        long long count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> g(d + 1);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = int(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty())
                return false;
        }
    }
    return true;
}

Field::Field(int p) : Field(p, 1, {}) {}

Field::Field(int p, int n, std::vector<int> modulus) : p_(p), n_(n), modulus_(std::move(modulus))
{
    if (!is_prime(p))
        throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
    if (n < 1)
        throw std::invalid_argument("field: extension degree must be >= 1");
    if (n == 1) {
        modulus_.clear();
    } else {
        for (int& c : modulus_)
            c = modp(c, p);
        trim(modulus_);
        if (int(modulus_.size()) != n + 1)
            throw std::invalid_argument("field: modulus must have degree " + std::to_string(n));
        if (!is_irreducible(p, modulus_))
            throw std::invalid_argument("field: modulus is reducible over F_" + std::to_string(p));
        // normalize to monic
        int lead = modulus_.back(), inv = 1;
        while ((inv * lead) % p != 1)
            ++inv;
        for (int& c : modulus_)
            c = modp(1LL * c * inv, p);
    }
    q_ = 1;
    for (int i = 0; i < n; ++i) {
        pw_.push_back(q_);
        q_ *= std::uint32_t(p);
    }
    pw_.push_back(q_);
    build_tables();
}

void Field::build_tables()
{
    // multiplication of codes by polynomial arithmetic, used only to build log tables
    auto polymul = [&](Elt a, Elt b) {
        std::vector<int> x = coeffs(a), y = coeffs(b), z(2 * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
        if (n_ > 1)
            z = poly_rem(z, modulus_, p_);
        z.resize(n_, 0);
        return from_coeffs(z);
    };
    log_.assign(q_, 0);
    exp_.assign(2 * q_, 0);
    for (Elt g = 1; g < q_; ++g) {
        std::vector<bool> seen(q_, false);
        Elt x = 1;
        std::uint32_t k = 0;
        bool ok = true;
        for (; k < q_ - 1; ++k) {
            if (seen[x]) {
                ok = false;
                break;
            }
            seen[x] = true;
            exp_[k] = x;
            log_[x] = k;
            x = polymul(x, g);
        }
        if (ok && x == 1)
            break;
    }
    for (std::uint32_t k = q_ - 1; k < 2 * q_; ++k)
        exp_[k] = exp_[k - (q_ - 1)];
}

Elt Field::from_int(long long c) const
{
    return Elt(modp(c, p_));
}

Elt Field::from_coeffs(const std::vector<int>& c) const
{
    if (int(c.size()) > n_)
        throw std::invalid_argument("field: too many coefficients for element");
    Elt v = 0;
    for (size_t i = 0; i < c.size(); ++i)
        v += Elt(modp(c[i], p_)) * pw_[i];
    return v;
}

std::vector<int> Field::coeffs(Elt a) const
{
    std::vector<int> c(n_);
    for (int i = 0; i < n_; ++i) {
        c[i] = int(a % Elt(p_));
        a /= Elt(p_);
    }
    return c;
}

Elt Field::add(Elt a, Elt b) const
{
    if (n_ == 1)
        return (a + b) % Elt(p_);
    Elt r = 0;
    for (int i = 0; i < n_; ++i) {
        r += ((a % p_ + b % p_) % p_) * pw_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Elt Field::neg(Elt a) const
{
    if (n_ == 1)
        return a == 0 ? 0 : Elt(p_) - a;
    Elt r = 0;
    for (int i = 0; i < n_; ++i) {
        Elt c = a % p_;
        r += (c == 0 ? 0 : p_ - c) * pw_[i];
        a /= p_;
    }
    return r;
}

Elt Field::sub(Elt a, Elt b) const
{
    return add(a, neg(b));
}

Elt Field::mul(Elt a, Elt b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (n_ == 1)
        return Elt((1ULL * a * b) % p_);
    return exp_[log_[a] + log_[b]];
}

Elt Field::inv(Elt a) const
{
    if (a == 0)
        throw std::domain_error("field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elt Field::pow(Elt a, long long e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    long long m = q_ - 1;
    long long k = ((1LL * log_[a] * (e % m)) % m + m) % m;
    return exp_[k];
}

Elt Field::frobenius(Elt a, int s) const
{
    if (n_ == 1 || a == 0)
        return a;
    int r = ((s % n_) + n_) % n_;
    Elt x = a;
    for (int i = 0; i < r; ++i)
        x = pow(x, p_);
    return x;
}

std::string Field::str(Elt a) const
{
    if (n_ == 1)
        return std::to_string(a);
    std::vector<int> c = coeffs(a);
    std::string s;
    for (int i = n_ - 1; i >= 0; --i) {
        if (c[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0 || c[i] != 1)
            s += std::to_string(c[i]);
        if (i >= 1)
            s += "g";
        if (i > 1)
            s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

FieldPtr make_field(int p, int n, std::vector<int> modulus)
{
    return std::make_shared<const Field>(p, n, std::move(modulus));
}

}  // namespace rla
