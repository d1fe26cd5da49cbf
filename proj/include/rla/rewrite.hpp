#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rla {

using Word = std::vector<int>;
// Linear combination over F_p with coefficients in 0..p-1; zero terms are never stored.
using Comb = std::map<Word, int>;

enum class Strategy { leftmost, rightmost };

// C(m, n) mod p by Lucas, with C(m, n) = 0 unless 0 <= n <= m.
int binom_mod(long long m, long long n, int p);
int mod_p(long long a, int p);

void comb_add(Comb& into, const Word& w, long long c, int p);
void comb_axpy(Comb& into, const Comb& x, long long c, int p);

// Rewrites an inadmissible pair (x, y) into a combination of pairs, or returns nullopt
// when the pair is already in normal form.
using PairRule = std::function<std::optional<Comb>(int, int)>;

struct RewriteCycle : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Repeatedly rewrites the leftmost (or rightmost) non-normal pair. Each step must move
// the word strictly up in lexicographic order; anything else is reported as a cycle.
Comb normalize_words(const Comb& input, int p, const PairRule& rule, Strategy strategy);

}  // namespace rla
