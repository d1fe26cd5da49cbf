#include "cli.hpp"

#include "rla/acceptance.hpp"
#include "rla/errors.hpp"
#include "rla/freelie.hpp"
#include "rla/hopf.hpp"
#include "rla/koszul.hpp"
#include "rla/lambda.hpp"
#include "rla/rewrite.hpp"
#include "rla/steenrod.hpp"
#include "rla/twisted.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace rla {

namespace {

using json = nlohmann::json;

constexpr const char* version = "1.0.0";

struct InvariantFailure : std::runtime_error
{
    std::string witness;
    InvariantFailure(const std::string& what, std::string w) : std::runtime_error(what), witness(std::move(w)) {}
};

struct RunConfig
{
    int p = 2;
    int ext_degree = 1;
    std::string ext_modulus;
    int max_s = 4;
    int max_t = 10;
    std::string format = "json";
    std::string output;
    int threads = 1;
};

std::string config_hash(const std::string& command, const json& params)
{
    std::string text = command + "\n" + params.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json document(const std::string& command, const json& params)
{
    json doc;
    doc["metadata"] = {{"command", command}, {"config_hash", config_hash(command, params)}, {"version", version}};
    doc["params"] = params;
    return doc;
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file " + cfg.output);
    out << text;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

// "deg:dim,deg:dim"
std::map<int, int> parse_dims(const std::string& s)
{
    std::map<int, int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected degree:dimension, got " + item);
        out[std::stoi(item.substr(0, colon))] += std::stoi(item.substr(colon + 1));
    }
    return out;
}

FieldPtr field_of(const RunConfig& cfg)
{
    return make_field(cfg.p, cfg.ext_degree, parse_ints(cfg.ext_modulus));
}

Flavor parse_flavor(const std::string& f)
{
    if (f == "hat" || f == "module")
        return Flavor::module;
    if (f == "tilde" || f == "strong" || f == "strong-module")
        return Flavor::strong;
    throw std::invalid_argument("unknown flavor " + f);
}

json elt_json(const Field& k, Elt a)
{
    return k.coeffs(a);
}

Elt elt_from_json(const Field& k, const json& j)
{
    if (j.is_number_integer())
        return k.from_int(j.get<long long>());
    return k.from_coeffs(j.get<std::vector<int>>());
}

json poly_json(const TwistedPoly& f)
{
    json arr = json::array();
    for (Elt c : f.c)
        arr.push_back(elt_json(*f.k, c));
    return arr;
}

TwistedPoly poly_from_json(const FieldPtr& k, const json& j)
{
    std::vector<Elt> c;
    for (const auto& e : j)
        c.push_back(elt_from_json(*k, e));
    TwistedPoly f(k, c);
    f.trim();
    return f;
}

json read_json_arg(const std::string& arg)
{
    std::string text = arg;
    std::ifstream in(arg);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

FPModule module_from_json(const FieldPtr& k, const json& j)
{
    FPModule m;
    m.k = k;
    m.gens = j.at("gens").get<std::size_t>();
    for (const auto& row : j.at("rels")) {
        std::vector<TwistedPoly> r;
        for (const auto& e : row)
            r.push_back(poly_from_json(k, e));
        if (r.size() != m.gens)
            throw std::invalid_argument("relation row length differs from the number of generators");
        m.rels.push_back(r);
    }
    return m;
}

// Chart entries: (s, t, stem, dim, basis, extra fields).
std::string chart_csv(const json& entries)
{
    std::string out = "s,t,stem,dim,basis\n";
    for (const auto& e : entries) {
        std::string basis;
        for (const auto& b : e.at("basis"))
            basis += (basis.empty() ? "" : ";") + b.get<std::string>();
        out += std::to_string(e.at("s").get<int>()) + "," + std::to_string(e.at("t").get<int>()) + "," +
               std::to_string(e.at("stem").get<int>()) + "," + std::to_string(e.at("dim").get<long long>()) + ",\"" + basis + "\"\n";
    }
    return out;
}

std::string chart_svg(const json& entries, const std::string& title, int max_s, int max_stem)
{
    const int cell = 40, margin = 40;
    std::map<std::pair<int, int>, long long> dots;  // (stem, s) -> total dim
    for (const auto& e : entries)
        dots[{e.at("stem").get<int>(), e.at("s").get<int>()}] += e.at("dim").get<long long>();
    int w = margin * 2 + cell * (max_stem + 1), h = margin * 2 + cell * (max_s + 1);
    auto x = [&](int stem) { return margin + cell * stem + cell / 2; };
    auto y = [&](int s) { return h - margin - cell * s - cell / 2; };
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    o << "<title>" << title << "</title>\n";
    o << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    for (int stem = 0; stem <= max_stem; ++stem)
        o << "<text x=\"" << x(stem) << "\" y=\"" << h - margin / 2 << "\" font-size=\"10\" text-anchor=\"middle\">" << stem
          << "</text>\n";
    for (int s = 0; s <= max_s; ++s)
        o << "<text x=\"" << margin / 2 << "\" y=\"" << y(s) + 3 << "\" font-size=\"10\" text-anchor=\"middle\">" << s
          << "</text>\n";
    o << "<line x1=\"" << margin << "\" y1=\"" << h - margin << "\" x2=\"" << w - margin << "\" y2=\"" << h - margin
      << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << h - margin
      << "\" stroke=\"black\"/>\n";
    for (const auto& [pos, dim] : dots) {
        if (pos.first > max_stem || pos.second > max_s)
            continue;
        o << "<circle cx=\"" << x(pos.first) << "\" cy=\"" << y(pos.second) << "\" r=\"4\" fill=\"black\"/>\n";
        if (dim > 1)
            o << "<text x=\"" << x(pos.first) + 7 << "\" y=\"" << y(pos.second) - 5 << "\" font-size=\"9\">" << dim << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

void emit_chart(const RunConfig& cfg, json doc, int max_s, int max_stem)
{
    if (cfg.format == "json")
        emit(cfg, doc.dump(2) + "\n");
    else if (cfg.format == "csv")
        emit(cfg, chart_csv(doc.at("entries")));
    else if (cfg.format == "svg")
        emit(cfg, chart_svg(doc.at("entries"), doc.at("metadata").at("command").get<std::string>(), max_s, max_stem));
    else
        throw std::invalid_argument("format must be json, csv or svg");
}

json word_entries(const Field& k, const std::map<Word, Elt>& x, const std::function<std::string(const Word&)>& name)
{
    json entries = json::array();
    for (const auto& [w, c] : x)
        entries.push_back({{"monomial", w}, {"name", name(w)}, {"coeff", elt_json(k, c)}});
    return entries;
}

Strategy parse_strategy(const std::string& s)
{
    if (s == "leftmost")
        return Strategy::leftmost;
    if (s == "rightmost")
        return Strategy::rightmost;
    throw std::invalid_argument("strategy must be leftmost or rightmost");
}

RestrictedLie lie_from_json(const json& j)
{
    FieldPtr k = make_field(j.at("p").get<int>(), j.value("ext_degree", 1), j.value("ext_modulus", std::vector<int>{}));
    RestrictedLie l;
    l.k = k;
    l.labels = j.at("labels").get<std::vector<std::string>>();
    l.weights = j.value("weights", std::vector<int>{});
    std::size_t n = l.labels.size();
    auto vec = [&](const json& v) {
        if (v.size() != n)
            throw std::invalid_argument("structure constant vectors must have one entry per basis vector");
        Vec out;
        for (const auto& e : v)
            out.push_back(elt_from_json(*k, e));
        return out;
    };
    for (const auto& row : j.at("bracket")) {
        std::vector<Vec> r;
        for (const auto& v : row)
            r.push_back(vec(v));
        l.bracket.push_back(r);
    }
    for (const auto& v : j.at("xi"))
        l.xi.push_back(vec(v));
    return l;
}

RestrictedLie lie_example(const FieldPtr& k, const std::string& name, int bound)
{
    if (name == "p-abelian")
        return abelian_lie(k, {1});
    if (name == "abelian")
        return free_module_lie(k, 1, bound);
    if (name == "abelian2")
        return free_module_lie(k, 2, bound);
    if (name == "heisenberg")
        return heisenberg_lie(k);
    if (name == "sl2")
        return sl2_lie(k, true);
    if (name == "sl2-broken")
        return sl2_lie(k, false);
    throw std::invalid_argument("unknown example " + name + " (p-abelian, abelian, abelian2, heisenberg, sl2, sl2-broken)");
}

json bigraded_json(const BigradedDims& b)
{
    json arr = json::array();
    for (const auto& [st, d] : b)
        arr.push_back({{"s", st.first}, {"t", st.second}, {"dim", d}});
    return arr;
}

}  // namespace

int run_cli(int argc, char** argv)
{
    CLI::App app{"Exact computations with restricted Lie algebras, Steenrod and lambda algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version);
    app.set_config("--config", "", "INI/TOML configuration file")->envname("RLATOOL_CONFIG");
    RunConfig cfg;
    app.add_option("--p", cfg.p, "Prime");
    app.add_option("--ext-degree,--ext_degree", cfg.ext_degree, "Degree n of the field F_{p^n}");
    app.add_option("--ext-modulus,--ext_modulus", cfg.ext_modulus, "Monic modulus coefficients, low degree first");
    app.add_option("--max-s,--max_s", cfg.max_s, "Homological degree bound");
    app.add_option("--max-t,--max_t", cfg.max_t, "Internal degree bound");
    app.add_option("--format", cfg.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--output", cfg.output, "Output file (default stdout)");
    app.add_option("--threads", cfg.threads, "Parallelism width")->check(CLI::PositiveNumber);

    std::function<void()> action;

    // steenrod
    auto* st = app.add_subcommand("steenrod", "Homogenized Steenrod algebra");
    st->require_subcommand(1);
    std::string word, strategy = "leftmost";
    auto* st_norm = st->add_subcommand("normalize", "Adem normal form of a word");
    st_norm->add_option("--word", word, "Comma-separated indices")->required();
    st_norm->add_option("--strategy", strategy, "leftmost or rightmost");
    st_norm->callback([&] {
        action = [&] {
            Word w = parse_ints(word);
            for (int i : w)
                if (!st_valid(cfg.p, i))
                    throw std::invalid_argument("invalid Steenrod index " + std::to_string(i));
            FieldPtr k = make_field(cfg.p);
            json params{{"p", cfg.p}, {"word", w}, {"strategy", strategy}};
            json doc = document("steenrod normalize", params);
            doc["p"] = cfg.p;
            doc["entries"] = word_entries(*k, adem_normalize(*k, w, 1, parse_strategy(strategy)),
                                          [&](const Word& x) { return st_word_name(cfg.p, x); });
            emit(cfg, doc.dump(2) + "\n");
        };
    });
    int deg_t = 0, len_s = 1;
    auto* st_basis = st->add_subcommand("basis", "Admissible basis in degree t and length s");
    st_basis->add_option("--t", deg_t)->required();
    st_basis->add_option("--s", len_s)->required();
    st_basis->callback([&] {
        action = [&] {
            json params{{"p", cfg.p}, {"t", deg_t}, {"s", len_s}};
            json doc = document("steenrod basis", params);
            doc["p"] = cfg.p;
            doc["entries"] = json::array();
            for (const Word& w : admissible_basis(cfg.p, deg_t, len_s))
                doc["entries"].push_back({{"monomial", w}, {"name", st_word_name(cfg.p, w)}, {"excess", excess(cfg.p, w)}});
            emit(cfg, doc.dump(2) + "\n");
        };
    });

    // lambda
    auto* lam = app.add_subcommand("lambda", "Lambda algebra");
    lam->require_subcommand(1);
    auto* lam_norm = lam->add_subcommand("normalize", "Normal form of a word of generator codes");
    lam_norm->add_option("--word", word, "Comma-separated generator codes")->required();
    lam_norm->add_option("--strategy", strategy, "leftmost or rightmost");
    lam_norm->callback([&] {
        action = [&] {
            Word w = parse_ints(word);
            for (int c : w)
                if (!lambda_valid(cfg.p, c))
                    throw std::invalid_argument("invalid lambda generator code " + std::to_string(c));
            FieldPtr k = make_field(cfg.p);
            json params{{"p", cfg.p}, {"word", w}, {"strategy", strategy}};
            json doc = document("lambda normalize", params);
            doc["p"] = cfg.p;
            doc["entries"] = word_entries(*k, lambda_normalize(*k, w, 1, parse_strategy(strategy)),
                                          [&](const Word& x) { return lambda_word_name(cfg.p, x); });
            emit(cfg, doc.dump(2) + "\n");
        };
    });
    auto* lam_basis = lam->add_subcommand("basis", "Admissible monomials of internal degree m and length s");
    lam_basis->add_option("--t", deg_t, "Internal degree")->required();
    lam_basis->add_option("--s", len_s)->required();
    lam_basis->callback([&] {
        action = [&] {
            json params{{"p", cfg.p}, {"t", deg_t}, {"s", len_s}};
            json doc = document("lambda basis", params);
            doc["p"] = cfg.p;
            doc["entries"] = json::array();
            for (const Word& w : lambda_admissible_basis(cfg.p, deg_t, len_s))
                doc["entries"].push_back({{"monomial", w}, {"name", lambda_word_name(cfg.p, w)}});
            emit(cfg, doc.dump(2) + "\n");
        };
    });
    int lval = 1;
    auto* lam_filt = lam->add_subcommand("filtration", "Basis of Lambda(l) up to the degree and weight bounds");
    lam_filt->add_option("--l", lval)->required();
    lam_filt->callback([&] {
        action = [&] {
            json params{{"p", cfg.p}, {"l", lval}, {"max_t", cfg.max_t}, {"max_s", cfg.max_s}};
            json doc = document("lambda filtration", params);
            doc["p"] = cfg.p;
            doc["entries"] = json::array();
            for (const Word& w : lambda_l_basis(cfg.p, lval, cfg.max_t, cfg.max_s))
                doc["entries"].push_back({{"monomial", w}, {"name", lambda_word_name(cfg.p, w)}, {"degree", lambda_degree(w)}});
            emit(cfg, doc.dump(2) + "\n");
        };
    });

    // ext
    auto* ext = app.add_subcommand("ext", "Unstable Ext charts");
    ext->require_subcommand(1);
    std::string flavor = "hat", method = "both", wdims;
    auto* ext_chart_cmd = ext->add_subcommand("chart", "Ext^{s,t} chart of a trivial module W");
    ext_chart_cmd->add_option("--l", lval, "W = Sigma^l k");
    ext_chart_cmd->add_option("--w", wdims, "W as degree:dim,... (overrides --l)");
    ext_chart_cmd->add_option("--flavor", flavor, "hat (unstable) or tilde (strongly unstable)");
    ext_chart_cmd->add_option("--method", method, "closed, resolution or both")->check(CLI::IsMember({"closed", "resolution", "both"}));
    ext_chart_cmd->callback([&] {
        action = [&] {
            std::map<int, int> w = wdims.empty() ? std::map<int, int>{{lval, 1}} : parse_dims(wdims);
            Flavor f = parse_flavor(flavor);
            json wj = json::array();
            for (const auto& [d, n] : w)
                wj.push_back({{"degree", d}, {"dim", n}});
            json params{{"p", cfg.p}, {"W", wj}, {"flavor", flavor}, {"method", method}, {"max_s", cfg.max_s}, {"max_t", cfg.max_t}};
            std::vector<ExtEntry> entries;
            bool agree = true;
            if (method == "closed") {
                // Fan out over cells; assembly stays in (s, t) order.
                std::vector<std::pair<int, int>> cells;
                for (int s = 0; s <= cfg.max_s; ++s)
                    for (int t = 0; t <= cfg.max_t; ++t)
                        cells.emplace_back(s, t);
                std::vector<ExtEntry> results(cells.size());
                std::atomic<std::size_t> next{0};
                std::vector<std::string> errors(static_cast<std::size_t>(cfg.threads));
                auto worker = [&](std::size_t id) {
                    try {
                        for (std::size_t i; (i = next++) < cells.size();)
                            results[i] = ext_dims_closed(cfg.p, w, f, cells[i].first, cells[i].second);
                    } catch (const std::exception& e) {
                        errors[id] = e.what();
                    }
                };
                std::vector<std::thread> pool;
                for (int i = 1; i < cfg.threads; ++i)
                    pool.emplace_back(worker, static_cast<std::size_t>(i));
                worker(0);
                for (auto& t : pool)
                    t.join();
                for (const auto& e : errors)
                    if (!e.empty())
                        throw InvariantFailure("closed-form count failed", e);
                for (auto& e : results)
                    if (e.dim > 0)
                        entries.push_back(std::move(e));
            } else if (method == "both") {
                ExtChart c = ext_chart(cfg.p, w, f, cfg.max_s, cfg.max_t, true);
                agree = c.methods_agree;
                entries = std::move(c.entries);
            } else {
                KoszulComplex k = build_koszul_complex(cfg.p, w, f, cfg.max_s + 1, cfg.max_t);
                VerifyReport v = verify_complex(k);
                if (!v.pass())
                    throw InvariantFailure("Koszul complex failed verification", v.witnesses.front());
                for (int s = 0; s <= cfg.max_s; ++s)
                    for (int t = 0; t <= cfg.max_t; ++t) {
                        ExtEntry e = ext_dims_resolution(k, s, t);
                        if (e.dim > 0)
                            entries.push_back(std::move(e));
                    }
            }
            if (!agree)
                throw InvariantFailure("closed-form and resolution counts differ", "p=" + std::to_string(cfg.p));
            json doc = document("ext chart", params);
            doc["p"] = cfg.p;
            doc["W"] = wj;
            doc["flavor"] = flavor;
            doc["methods_agree"] = agree;
            doc["entries"] = json::array();
            for (const auto& e : entries)
                doc["entries"].push_back({{"s", e.s}, {"t", e.t}, {"stem", e.t - e.s}, {"dim", e.dim}, {"basis", e.basis}});
            emit_chart(cfg, doc, cfg.max_s, cfg.max_t);
        };
    });

    // freelie
    auto* fl = app.add_subcommand("freelie", "Free simplicial restricted Lie algebras");
    fl->require_subcommand(1);
    int nval = 1, max_stem = 4, weight_bound = 3;
    bool unrestricted = false;
    auto* fl_oracle = fl->add_subcommand("oracle", "Homotopy of L^r_n(Gamma(Sigma^l k)) from normalized chains");
    fl_oracle->add_option("--l", lval)->required();
    fl_oracle->add_option("--n", nval)->required();
    fl_oracle->add_option("--max-stem,--max_stem", max_stem);
    fl_oracle->add_flag("--unrestricted", unrestricted, "Free Lie power L_n instead of L^r_n");
    fl_oracle->callback([&] {
        action = [&] {
            if (lval < 0 || max_stem < 0)
                throw std::invalid_argument("l and max-stem must be nonnegative");
            SimplicialVectorSpace v = dold_kan(make_field(cfg.p), {{lval, 1}}, max_stem + 1);
            OracleOptions opt;
            opt.restricted = !unrestricted;
            std::vector<long long> pi = homotopy_oracle(v, nval, max_stem, opt);
            json params{{"p", cfg.p}, {"l", lval}, {"n", nval}, {"max_stem", max_stem}, {"restricted", !unrestricted}};
            json doc = document("freelie oracle", params);
            doc["p"] = cfg.p;
            doc["entries"] = json::array();
            for (std::size_t q = 0; q < pi.size(); ++q)
                doc["entries"].push_back({{"stem", q}, {"n", nval}, {"dim", pi[q]}});
            emit(cfg, doc.dump(2) + "\n");
        };
    });
    auto* fl_chart = fl->add_subcommand("chart", "Closed-form homotopy chart pi_{stem, n}");
    fl_chart->add_option("--l", lval)->required();
    fl_chart->add_option("--max-stem,--max_stem", max_stem);
    fl_chart->callback([&] {
        action = [&] {
            HomotopyChart c = homotopy_closed_form(cfg.p, lval, cfg.max_s, max_stem);
            json params{{"p", cfg.p}, {"l", lval}, {"max_s", cfg.max_s}, {"max_stem", max_stem}};
            json doc = document("freelie chart", params);
            doc["p"] = cfg.p;
            doc["W"] = json::array({{{"degree", lval}, {"dim", 1}}});
            doc["flavor"] = "homotopy";
            std::vector<std::tuple<int, int, long long, long long>> rows;  // s, stem, n, dim
            for (const auto& [key, d] : c.dims) {
                auto [stem, n] = key;
                int s = 0;
                long long m = 1;
                while (m < n && m * cfg.p <= n) {
                    m *= cfg.p;
                    ++s;
                }
                if (m != n)  // n = 2 p^(s-1)
                    ++s;
                rows.emplace_back(s, stem, n, d);
            }
            std::sort(rows.begin(), rows.end());
            doc["entries"] = json::array();
            for (const auto& [s, stem, n, d] : rows)
                doc["entries"].push_back({{"s", s}, {"t", stem + s}, {"stem", stem}, {"n", n}, {"dim", d}, {"basis", json::array()}});
            emit_chart(cfg, doc, cfg.max_s, max_stem);
        };
    });
    std::string v1 = "1:1", v2 = "1:1";
    auto* fl_hm = fl->add_subcommand("hilton-milnor", "Hilton-Milnor dimension identity");
    fl_hm->add_option("--v1", v1, "degree:dim,...");
    fl_hm->add_option("--v2", v2, "degree:dim,... (empty for zero)");
    fl_hm->add_option("--weight", weight_bound, "Hall word weight bound");
    fl_hm->callback([&] {
        action = [&] {
            HMReport r = hilton_milnor_dims(cfg.p, parse_dims(v1), v2.empty() ? std::map<int, int>{} : parse_dims(v2), weight_bound, cfg.max_t);
            json params{{"p", cfg.p}, {"v1", v1}, {"v2", v2}, {"weight", weight_bound}, {"max_t", cfg.max_t}};
            json doc = document("freelie hilton-milnor", params);
            doc["hall_words"] = r.hall_words;
            doc["pass"] = r.pass;
            doc["cells"] = json::array();
            for (const auto& c : r.cells)
                doc["cells"].push_back({{"degree", c.degree}, {"weight", c.weight}, {"hall_sum", c.lhs}, {"free", c.rhs}});
            emit(cfg, doc.dump(2) + "\n");
            if (!r.pass)
                throw InvariantFailure("Hilton-Milnor dimensions differ", doc["cells"].dump());
        };
    });

    // twisted
    auto* tw = app.add_subcommand("twisted", "Twisted polynomial ring k{xi}");
    tw->require_subcommand(1);
    std::string fj, gj, side = "left", mj;
    int level = 12;
    auto* tw_div = tw->add_subcommand("div", "Division with remainder");
    tw_div->add_option("--f", fj, "JSON array of coefficients")->required();
    tw_div->add_option("--g", gj, "JSON array of coefficients")->required();
    tw_div->add_option("--side", side, "left (f = q g + r) or right (f = g q + r)")->check(CLI::IsMember({"left", "right"}));
    tw_div->callback([&] {
        action = [&] {
            FieldPtr k = field_of(cfg);
            TwistedPoly f = poly_from_json(k, read_json_arg(fj)), g = poly_from_json(k, read_json_arg(gj));
            if (g.is_zero())
                throw std::invalid_argument("division by zero");
            auto [q, r] = tp_divmod(f, g, side == "left" ? Side::left : Side::right);
            json params{{"p", cfg.p}, {"ext_degree", cfg.ext_degree}, {"ext_modulus", cfg.ext_modulus}, {"f", poly_json(f)},
                        {"g", poly_json(g)}, {"side", side}};
            json doc = document("twisted div", params);
            doc["q"] = poly_json(q);
            doc["r"] = poly_json(r);
            emit(cfg, doc.dump(2) + "\n");
        };
    });
    auto* tw_nf = tw->add_subcommand("nf", "Diagonal normal form of a finitely presented module");
    tw_nf->add_option("--module", mj, "JSON {gens, rels} or a file containing it")->required();
    tw_nf->callback([&] {
        action = [&] {
            FieldPtr k = field_of(cfg);
            json mjson = read_json_arg(mj);
            NormalForm nf = module_normal_form(module_from_json(k, mjson));
            json params{{"p", cfg.p}, {"ext_degree", cfg.ext_degree}, {"ext_modulus", cfg.ext_modulus}, {"module", mjson}};
            json doc = document("twisted nf", params);
            doc["diag"] = json::array();
            for (const auto& d : nf.diag)
                doc["diag"].push_back(poly_json(d));
            doc["free_rank"] = nf.free_rank;
            emit(cfg, doc.dump(2) + "\n");
        };
    });
    auto* tw_comp = tw->add_subcommand("complete", "Derived xi-adic completion L0, L1");
    tw_comp->add_option("--module", mj, "JSON {gens, rels} or a file containing it")->required();
    tw_comp->add_option("--N", level, "Truncation level");
    tw_comp->callback([&] {
        action = [&] {
            FieldPtr k = field_of(cfg);
            json mjson = read_json_arg(mj);
            CompletionResult r = derived_completion(module_from_json(k, mjson), level);
            json params{{"p", cfg.p}, {"ext_degree", cfg.ext_degree}, {"ext_modulus", cfg.ext_modulus}, {"module", mjson}, {"N", level}};
            json doc = document("twisted complete", params);
            doc["free_rank"] = r.free_rank;
            doc["torsion"] = r.torsion;
            doc["l1_dim"] = r.l1_dim;
            doc["stable_level"] = r.stable_level;
            doc["quotient_dims"] = r.quotient_dims;
            emit(cfg, doc.dump(2) + "\n");
        };
    });

    // hopf
    auto* hp = app.add_subcommand("hopf", "Restricted Lie algebras, U^r and bar-complex Tor");
    hp->require_subcommand(1);
    std::string lie_arg, example;
    int bound = 12;
    auto load_lie = [&]() {
        if (!lie_arg.empty())
            return lie_from_json(read_json_arg(lie_arg));
        if (!example.empty())
            return lie_example(make_field(cfg.p), example, bound);
        throw std::invalid_argument("give --lie or --example");
    };
    auto add_lie_opts = [&](CLI::App* c) {
        c->add_option("--lie", lie_arg, "JSON {p, labels, weights, bracket, xi} or a file containing it");
        c->add_option("--example", example, "p-abelian, abelian, abelian2, heisenberg, sl2, sl2-broken");
        c->add_option("--bound", bound, "Weight bound");
    };
    auto* hp_val = hp->add_subcommand("validate", "Check the restricted Lie algebra axioms");
    add_lie_opts(hp_val);
    hp_val->callback([&] {
        action = [&] {
            RestrictedLie l = load_lie();
            LieValidation v = validate_restricted_lie(l);
            json params{{"lie", lie_arg}, {"example", example}, {"p", l.k->p()}, {"bound", bound}};
            json doc = document("hopf validate", params);
            doc["ok"] = v.ok;
            doc["failure"] = v.failure;
            doc["witness"] = v.witness_str;
            emit(cfg, doc.dump(2) + "\n");
            if (!v.ok)
                throw InvariantFailure(v.failure, v.witness_str);
        };
    });
    auto* hp_pbw = hp->add_subcommand("pbw", "Compare U^r and Sym^tr dimensions");
    add_lie_opts(hp_pbw);
    hp_pbw->callback([&] {
        action = [&] {
            RestrictedLie l = load_lie();
            PBWReport r = pbw_check(l, bound);
            json params{{"lie", lie_arg}, {"example", example}, {"p", l.k->p()}, {"bound", bound}};
            json doc = document("hopf pbw", params);
            doc["ur_dims"] = r.ur;
            doc["symtr_dims"] = r.symtr;
            doc["pass"] = r.pass();
            emit(cfg, doc.dump(2) + "\n");
            if (!r.pass())
                throw InvariantFailure("U^r and Sym^tr dimensions differ", doc.dump());
        };
    });
    std::string algebra = "lie";
    int gen_weight = 1, height = 0;
    auto* hp_bar = hp->add_subcommand("bartor", "Tor^A(k, k) from the normalized bar complex");
    add_lie_opts(hp_bar);
    hp_bar->add_option("--algebra", algebra, "lie (U^r of --lie/--example), poly or truncated")
        ->check(CLI::IsMember({"lie", "poly", "truncated"}));
    hp_bar->add_option("--weight", gen_weight, "Generator weight for poly/truncated");
    hp_bar->add_option("--height", height, "Truncation height for truncated (default p)");
    hp_bar->callback([&] {
        action = [&] {
            GradedAlgebraPresentation a;
            if (algebra == "poly")
                a = polynomial_presentation(make_field(cfg.p), gen_weight);
            else if (algebra == "truncated")
                a = truncated_presentation(make_field(cfg.p), gen_weight, height > 0 ? height : cfg.p);
            else {
                a = ur_presentation(load_lie());
                check_confluence(a);
            }
            json params{{"p", a.k->p()}, {"algebra", algebra}, {"lie", lie_arg}, {"example", example}, {"bound", bound},
                        {"weight", gen_weight}, {"height", height}, {"max_s", cfg.max_s}, {"max_t", cfg.max_t}};
            json doc = document("hopf bartor", params);
            doc["entries"] = bigraded_json(bar_tor(a, cfg.max_s, cfg.max_t));
            emit(cfg, doc.dump(2) + "\n");
        };
    });

    // selftest
    bool quick = false;
    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
    self->add_flag("--quick", quick, "Skip the slow criteria");
    int self_code = 0;
    self->callback([&] {
        action = [&] {
            AcceptanceOptions opt;
            opt.quick = quick;
            opt.tool_path = "/proc/self/exe";
            std::error_code ec;
            auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
            if (!ec)
                opt.tool_path = exe.string();
            bool all = true;
            for (const auto& r : run_acceptance(opt)) {
                std::cout << format_result(r) << "\n";
                all = all && r.pass();
            }
            std::cout << (all ? "selftest: PASS" : "selftest: FAIL") << "\n";
            self_code = all ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (!is_prime(cfg.p))
            throw std::invalid_argument("p must be prime");
        if (cfg.max_s < 0 || cfg.max_t < 0)
            throw std::invalid_argument("bounds must be nonnegative");
        if (action)
            action();
        return self_code;
    } catch (const SizeError& e) {
        std::cerr << "size budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InvariantFailure& e) {
        std::cerr << "invariant failure: " << e.what() << "\nwitness: " << e.witness << "\n";
        return 1;
    } catch (const NonConfluent& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const RewriteCycle& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const CompletionError& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rla
