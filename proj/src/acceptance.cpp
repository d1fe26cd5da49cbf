#include "rla/acceptance.hpp"

#include "rla/freelie.hpp"
#include "rla/hopf.hpp"
#include "rla/koszul.hpp"
#include "rla/lambda.hpp"
#include "rla/steenrod.hpp"
#include "rla/twisted.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <unistd.h>

namespace rla {

namespace {

using Check = std::function<bool(std::string&)>;

CriterionResult timed(int id, const std::string& name, double limit, const Check& body)
{
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.limit = limit;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.ok = body(r.detail);
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

TwistedPoly random_poly(const FieldPtr& k, std::mt19937& rng, int max_deg, bool nonzero)
{
    while (true) {
        int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        std::vector<Elt> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c)
            x = static_cast<Elt>(rng() % static_cast<unsigned>(k->order()));
        TwistedPoly f(k, c);
        if (!nonzero || !f.is_zero())
            return f;
    }
}

bool euclidean_roundtrip(std::string& detail)
{
    std::mt19937 rng(20240501);
    int checked = 0;
    for (const auto& k : {make_field(2), make_field(2, 2, {1, 1, 1}), make_field(3, 2, {1, 0, 1})})
        for (int trial = 0; trial < 1000; ++trial) {
            TwistedPoly f = random_poly(k, rng, 8, false);
            TwistedPoly g = random_poly(k, rng, 8, true);
            for (Side side : {Side::left, Side::right}) {
                auto [q, r] = tp_divmod(f, g, side);
                TwistedPoly back = tp_add(side == Side::left ? tp_mul(q, g) : tp_mul(g, q), r);
                if (!(back == f) || (!r.is_zero() && r.deg() >= g.deg())) {
                    detail = "failed for f=" + f.str() + " g=" + g.str();
                    return false;
                }
                ++checked;
            }
        }
    detail = std::to_string(checked) + " divisions over F_2, F_4, F_9";
    return true;
}

bool derived_completion_check(std::string& detail)
{
    std::mt19937 rng(777);
    std::vector<FieldPtr> fields{make_field(2), make_field(3), make_field(2, 2, {1, 1, 1})};
    const int N = 12;
    for (int trial = 0; trial < 50; ++trial) {
        FieldPtr k = fields[static_cast<std::size_t>(trial) % fields.size()];
        FPModule m;
        m.k = k;
        m.gens = 1 + rng() % 3;
        std::size_t nrels = 1 + rng() % 3;
        for (std::size_t i = 0; i < nrels; ++i) {
            std::vector<TwistedPoly> row;
            for (std::size_t j = 0; j < m.gens; ++j)
                row.push_back(rng() % 3 == 0 ? TwistedPoly(k) : random_poly(k, rng, 4, false));
            m.rels.push_back(row);
        }
        std::string tag = "module #" + std::to_string(trial);
        CompletionResult r = derived_completion(m, N);
        if (r.l1_dim != 0) {
            detail = tag + ": L1 != 0";
            return false;
        }
        for (int n = 1; n <= N; ++n)
            if (r.quotient_dims[static_cast<std::size_t>(n) - 1] != truncated_quotient_dim(m, n)) {
                detail = tag + ": L0 / xi^" + std::to_string(n) + " disagrees with the inverse-limit truncation";
                return false;
            }
        // L0 applied again: no L1 and the same tower.
        FPModule t = completion_truncation(r, k, N);
        CompletionResult r2 = derived_completion(t, N + 2);
        if (r2.l1_dim != 0) {
            detail = tag + ": L1 L0 != 0";
            return false;
        }
        for (int n = 1; n <= N; ++n)
            if (r2.quotient_dims[static_cast<std::size_t>(n) - 1] != r.quotient_dims[static_cast<std::size_t>(n) - 1]) {
                detail = tag + ": L0 L0 differs from L0";
                return false;
            }
    }
    detail = "50 modules, N = 12";
    return true;
}

bool confluence_check(std::string& detail)
{
    long long words = 0;
    for (int p : {2, 3, 5}) {
        std::vector<int> st, lam;
        for (int i = 0; i <= 12; ++i) {
            if (st_valid(p, i))
                st.push_back(i);
            if (lambda_valid(p, i))
                lam.push_back(i);
        }
        for (const auto* codes : {&st, &lam})
            for (int a : *codes)
                for (int b : *codes)
                    for (int c : *codes) {
                        Word w{a, b, c};
                        bool steenrod = codes == &st;
                        Comb l = steenrod ? adem_normalize(p, w, Strategy::leftmost) : lambda_normalize(p, w, Strategy::leftmost);
                        Comb r = steenrod ? adem_normalize(p, w, Strategy::rightmost) : lambda_normalize(p, w, Strategy::rightmost);
                        if (l != r) {
                            detail = std::string(steenrod ? "Steenrod " : "lambda ") + "word " +
                                     (steenrod ? st_word_name(p, w) : lambda_word_name(p, w)) + " at p=" + std::to_string(p);
                            return false;
                        }
                        ++words;
                    }
    }
    // Sq1 Sq1 = 0 and lambda_0 lambda_1 = 0 at p = 2.
    if (!adem_normalize(2, {1, 1}).empty() || !lambda_normalize(2, {lambda_encode(2, {LambdaKind::lambda, 0}), lambda_encode(2, {LambdaKind::lambda, 1})}).empty()) {
        detail = "Sq1 Sq1 or l0 l1 is nonzero";
        return false;
    }
    detail = std::to_string(words) + " words, both strategies agree; Sq1Sq1 = l0l1 = 0";
    return true;
}

bool duality_check(std::string& detail)
{
    for (int p : {2, 3}) {
        DualityReport r = quadratic_duality_check(p, 12);
        if (!r.pass) {
            detail = "p=" + std::to_string(p) + " fails";
            return false;
        }
    }
    detail = "p = 2, 3, internal degrees <= 12";
    return true;
}

struct BuiltComplexes
{
    std::vector<KoszulComplex> complexes;
};

bool koszul_check(BuiltComplexes& built, std::string& detail)
{
    int n = 0;
    for (int p : {2, 3})
        for (int l = 1; l <= 4; ++l)
            for (Flavor f : {Flavor::module, Flavor::strong}) {
                // Degree s = 5 is built so that resolution counts are available for s <= 4.
                KoszulComplex k = build_koszul_complex(p, {{l, 1}}, f, 5, 14);
                VerifyReport rep = verify_complex(k);
                if (!rep.pass()) {
                    detail = "p=" + std::to_string(p) + " l=" + std::to_string(l) + " " + flavor_name(f) + ": " +
                             (rep.witnesses.empty() ? "" : rep.witnesses.front());
                    return false;
                }
                built.complexes.push_back(std::move(k));
                ++n;
            }
    detail = std::to_string(n) + " complexes, d^2 = 0, H_0 = W, acyclic for 1 <= s <= 4, t <= 14";
    return true;
}

bool ext_agreement(const BuiltComplexes& built, std::string& detail)
{
    if (built.complexes.empty()) {
        detail = "no complexes were built";
        return false;
    }
    int cells = 0;
    for (const auto& k : built.complexes)
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; t <= 14; ++t) {
                long long a = ext_dims_closed(k.p, k.w, k.flavor, s, t).dim;
                long long b = ext_dims_resolution(k, s, t).dim;
                if (a != b) {
                    detail = "p=" + std::to_string(k.p) + " s=" + std::to_string(s) + " t=" + std::to_string(t) + ": closed " +
                             std::to_string(a) + " vs resolution " + std::to_string(b);
                    return false;
                }
                ++cells;
            }
    detail = std::to_string(cells) + " (s, t) cells agree";
    return true;
}

bool pbw_corpus(std::string& detail)
{
    int n = 0;
    for (int p : {2, 3}) {
        FieldPtr k = make_field(p);
        std::vector<std::pair<std::string, RestrictedLie>> corpus{
            {"p-abelian weights (1)", abelian_lie(k, {1})},
            {"p-abelian weights (1,1,2)", abelian_lie(k, {1, 1, 2})},
            {"abelian trivxi(k{xi})", free_module_lie(k, 1, 12)},
            {"abelian trivxi(k{xi}^2)", free_module_lie(k, 2, 12)},
            {"Heisenberg", heisenberg_lie(k)},
        };
        if (p == 2) {
            RestrictedLie h = heisenberg_lie(k);
            h.xi[0][2] = 1;
            corpus.emplace_back("Heisenberg with xi(x) = z", h);
        }
        for (const auto& [name, l] : corpus) {
            LieValidation v = validate_restricted_lie(l);
            if (!v.ok) {
                detail = name + " is not a restricted Lie algebra: " + v.failure;
                return false;
            }
            if (!pbw_check(l, 12).pass()) {
                detail = name + " at p=" + std::to_string(p) + ": U^r and Sym^tr dims differ";
                return false;
            }
            ++n;
        }
    }
    detail = std::to_string(n) + " validated algebras, weights <= 12";
    return true;
}

bool abelian_homology(std::string& detail)
{
    for (int p : {2, 3}) {
        FieldPtr k = make_field(p);
        AbelianHomologyReport one = abelian_homology_check(FPModule::free(k, 1), 4, 10);
        if (!one.matches) {
            detail = "rank 1 at p=" + std::to_string(p) + " is not exterior";
            return false;
        }
        AbelianHomologyReport two = abelian_homology_check(FPModule::free(k, 2), 4, 10);
        if (!two.matches || two.tor != kunneth(one.tor, one.tor, 4, 10)) {
            detail = "rank 2 at p=" + std::to_string(p) + " fails exterior or Kunneth";
            return false;
        }
        AbelianHomologyReport neg = abelian_homology_check(FPModule::cyclic(TwistedPoly::monomial(k, 1, 1)), 4, 10);
        if (neg.matches) {
            detail = "negative control k[x]/x^p matched the exterior formula at p=" + std::to_string(p);
            return false;
        }
    }
    detail = "p = 2, 3: rank 1 exterior, rank 2 Kunneth, p-abelian control fails as expected";
    return true;
}

bool oracle_vs_closed_form(std::string& detail)
{
    struct Case
    {
        int p, l;
    };
    int compared = 0;
    std::string skipped;
    for (Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
        SimplicialVectorSpace v = dold_kan(make_field(c.p), {{c.l, 1}}, 5);
        for (int n = 1; n <= c.p * c.p; ++n) {
            std::vector<long long> pi;
            try {
                pi = homotopy_oracle(v, n, 4);
            } catch (const SizeError&) {
                skipped += " (p=" + std::to_string(c.p) + ",l=" + std::to_string(c.l) + ",n=" + std::to_string(n) + ")";
                continue;
            }
            for (int stem = 0; stem <= 4; ++stem) {
                long long want = closed_form_dim(c.p, c.l, stem, n);
                if (pi[static_cast<std::size_t>(stem)] != want) {
                    detail = "p=" + std::to_string(c.p) + " l=" + std::to_string(c.l) + " n=" + std::to_string(n) +
                             " stem " + std::to_string(stem) + ": oracle " + std::to_string(pi[static_cast<std::size_t>(stem)]) +
                             " vs closed form " + std::to_string(want);
                    return false;
                }
                ++compared;
            }
        }
    }
    detail = std::to_string(compared) + " (stem, n) cells agree";
    if (!skipped.empty())
        detail += "; beyond the size budget:" + skipped;
    return true;
}

bool curtis(std::string& detail)
{
    int n = 0;
    for (int p : {2, 3})
        for (int l = 0; l <= 2; ++l) {
            CurtisReport r = curtis_split_check(dold_kan(make_field(p), {{l, 1}}, 6), 1, 5);
            if (!r.pass()) {
                detail = "p=" + std::to_string(p) + " l=" + std::to_string(l) + (r.identity_holds ? ": connectivity" : ": dimension identity");
                return false;
            }
            ++n;
        }
    detail = std::to_string(n) + " cases (p = 2, 3; l = 0, 1, 2), q <= 5";
    return true;
}

bool hilton_milnor(std::string& detail)
{
    HMReport r = hilton_milnor_dims(2, {{1, 1}}, {{1, 1}}, 3, 6);
    detail = std::to_string(r.hall_words.size()) + " Hall words, " + std::to_string(r.cells.size()) + " cells compared";
    return r.pass;
}

bool determinism(const std::string& tool, std::string& detail)
{
    if (tool.empty() || !std::filesystem::exists(tool)) {
        detail = "CLI binary not found: " + tool;
        return false;
    }
    auto dir = std::filesystem::temp_directory_path();
    std::string stem = "rla_determinism_" + std::to_string(getpid());
    std::vector<std::string> files{(dir / (stem + "_a.json")).string(), (dir / (stem + "_b.json")).string()};
    for (const auto& out : files) {
        std::string cmd = "\"" + tool + "\" ext chart --p 2 --l 1 --flavor hat --max-s 4 --max-t 10 --method both --format json --output \"" +
                          out + "\"";
        if (std::system(cmd.c_str()) != 0) {
            detail = "command failed: " + cmd;
            return false;
        }
    }
    auto slurp = [](const std::string& f) {
        std::ifstream in(f, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(files[0]), b = slurp(files[1]);
    for (const auto& f : files)
        std::filesystem::remove(f);
    detail = std::to_string(a.size()) + " bytes";
    return !a.empty() && a == b;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    std::vector<CriterionResult> out;
    auto skip = [&](int id, const std::string& name) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.skipped = true;
        r.detail = "skipped in quick mode";
        out.push_back(r);
    };
    out.push_back(timed(1, "Euclidean roundtrip", 1, euclidean_roundtrip));
    out.push_back(timed(2, "Derived completion", 5, derived_completion_check));
    out.push_back(timed(3, "Adem/lambda confluence", 30, confluence_check));
    out.push_back(timed(4, "Quadratic duality", 10, duality_check));
    BuiltComplexes built;
    if (opt.quick) {
        skip(5, "Koszul complexes");
        skip(6, "Ext method agreement");
    } else {
        out.push_back(timed(5, "Koszul complexes", 120, [&](std::string& d) { return koszul_check(built, d); }));
        out.push_back(timed(6, "Ext method agreement", 10, [&](std::string& d) { return ext_agreement(built, d); }));
    }
    out.push_back(timed(7, "PBW", 10, pbw_corpus));
    out.push_back(timed(8, "Abelian homology", 30, abelian_homology));
    if (opt.quick)
        skip(9, "Free-Lie oracle vs degeneration");
    else
        out.push_back(timed(9, "Free-Lie oracle vs degeneration", 300, oracle_vs_closed_form));
    out.push_back(timed(10, "Curtis splitting and connectivity", 60, curtis));
    out.push_back(timed(11, "Hilton-Milnor", 30, hilton_milnor));
    out.push_back(timed(12, "Determinism", 60, [&](std::string& d) { return determinism(opt.tool_path, d); }));
    return out;
}

std::string format_result(const CriterionResult& r)
{
    char buf[96];
    const char* status = r.skipped ? "SKIP" : (r.pass() ? "PASS" : "FAIL");
    std::snprintf(buf, sizeof buf, "%s %2d %-36s %8.2fs / %gs  ", status, r.id, r.name.c_str(), r.seconds, r.limit);
    std::string s = buf;
    if (!r.skipped && r.ok && r.seconds > r.limit)
        s += "over time; ";
    return s + r.detail;
}

}  // namespace rla
