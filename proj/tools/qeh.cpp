#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "qehrhart/corpus.hpp"
#include "qehrhart/suites.hpp"

using namespace qeh;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kInternal = 3 };

struct RunConfig {
    std::optional<int> T;
    std::optional<int> M;
    std::optional<int> bMax, aMax, nuMax, tDegMax;
    std::vector<std::uint64_t> primes;
    std::optional<std::string> cache;
    std::uint64_t seed = 0;
    std::optional<int> trials;
    int jobs = 1;
    std::string out;
    bool full = false;

    int t_or(int dflt) const { return T.value_or(dflt); }
    SearchBounds bounds(SearchBounds b) const {
        if (bMax) b.bMax = *bMax;
        if (aMax) b.aMax = *aMax;
        if (nuMax) b.nuMax = *nuMax;
        if (tDegMax) b.tDegMax = *tDegMax;
        return b;
    }
    Json bounds_json(const SearchBounds& b) const {
        return Json{{"bMax", b.bMax}, {"aMax", b.aMax}, {"nuMax", b.nuMax}, {"tDegMax", b.tDegMax ? Json(*b.tDegMax) : Json()},
                    {"tDegSlack", b.tDegSlack}};
    }
};

// one top-level key per line, values compact
std::string format(const Json& j) {
    if (!j.is_object() || j.empty()) return j.dump();
    std::string s = "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
        s += " " + Json(k).dump() + ": ";
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            s += "[\n";
            for (std::size_t r = 0; r < v.size(); ++r) s += "  " + v[r].dump() + (r + 1 < v.size() ? ",\n" : "\n");
            s += " ]";
        } else {
            s += v.dump();
        }
        s += ++i < j.size() ? ",\n" : "\n";
    }
    return s + "}";
}

void emit(const RunConfig& cfg, const Json& j) {
    const auto text = format(j);
    if (cfg.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(cfg.out);
    f << text << "\n";
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
}

Json canonical_polytope(const LatticePolytope& p) {
    auto vs = p.vertices();
    std::sort(vs.begin(), vs.end());
    return vs;
}

// Looks up the cache, otherwise computes and stores.
template <class F>
Json cached(const RunConfig& cfg, const Json& input, F compute) {
    const auto cache = RecordCache::from_env(cfg.cache);
    const auto key = RecordCache::key(input);
    if (cache)
        if (auto hit = cache->load(key)) return *hit;
    Json j = compute();
    if (cache) cache->store(key, j);
    return j;
}

int cmd_compute(const RunConfig& cfg, const std::string& file, bool interiorOnly) {
    const auto P = parse_polytope(read_json_file(file));
    const int T = cfg.t_or(8);
    Json input{{"command", interiorOnly ? "interior" : "compute"}, {"vertices", canonical_polytope(P)}, {"T", T}};
    emit(cfg, cached(cfg, input, [&] {
             const auto rec = compute_record(P, T, cfg.jobs);
             auto j = record_json(rec);
             if (interiorOnly) j.erase("iq");
             return j;
         }));
    return kOk;
}

int cmd_guess(const RunConfig& cfg, const std::string& file) {
    const auto P = parse_polytope(read_json_file(file));
    const int T = cfg.t_or(10);
    const auto b = cfg.bounds(default_bounds(P));
    Json input{{"command", "guess"}, {"vertices", canonical_polytope(P)}, {"T", T}, {"bounds", cfg.bounds_json(b)}};
    const auto j = cached(cfg, input, [&] {
        auto rec = guess(P, T, b, cfg.jobs);
        auto r = record_json(rec);
        if (!rec.guessed_E) r["guess"] = nullptr;
        return r;
    });
    emit(cfg, j);
    return j["guess"].is_null() ? kMismatch : kOk;
}

struct RowResult {
    Json json;
    bool ok = true;
};

RowResult table_row(const RunConfig& cfg, const CorpusRow& row) {
    const auto P = row.polytope();
    const int d = P.dim();
    RowResult r;
    r.json["id"] = row.id;
    r.json["provenance"] = row.provenance;
    if (row.provenance == "paper-guess") {
        // compared at truncation level only
        const int T = cfg.t_or(3);
        const auto s = series_E(P, T, cfg.jobs);
        r.json["T"] = T;
        if (row.form) {
            r.ok = expand(parse_ratfun(*row.form), T) == s;
            r.json["status"] = r.ok ? "truncation-consistent" : "mismatch";
        } else if (row.denominator) {
            int sumB = 0;
            for (auto [bb, aa] : *row.denominator) sumB += bb;
            const int tdeg = T - sumB - 2;
            if (tdeg < 0) {
                r.json["status"] = "denominator only; needs T >= " + std::to_string(sumB + 2) + " to test a numerator";
            } else {
                const bool fits = fit_numerator(s, *row.denominator, tdeg).has_value();
                r.json["status"] = fits ? "numerator found" : "no numerator of t-degree <= " + std::to_string(tdeg);
            }
        }
        return r;
    }
    const auto printed = parse_ratfun(*row.form);
    // smallest box holding the stored form, never below b<=2, a<=6, nu<=4, T=10
    SearchBounds base;
    base.bMax = 2;
    base.aMax = 6;
    base.nuMax = std::max<int>(4, printed.nu());
    int need = 10;
    {
        int sumB = 0, tdeg = 0;
        for (auto [bb, aa] : printed.den) {
            base.bMax = std::max(base.bMax, bb);
            base.aMax = std::max(base.aMax, aa);
            sumB += bb;
        }
        tdeg = std::max(0, printed.num.t_degree());
        need = std::max(need, sumB + tdeg + 2);
    }
    const int T = std::max(cfg.t_or(10), need);
    r.json["T"] = T;
    const auto s = series_E(P, T, cfg.jobs);
    const bool seriesOk = expand(printed, T) == s;
    const auto g = guess_series(s, cfg.bounds(base));
    const bool guessOk = g && expand(*g, T) == expand(printed, T);
    r.ok = seriesOk && guessOk;
    r.json["seriesMatches"] = seriesOk;
    r.json["guess"] = g ? Json(g->to_string()) : Json();
    r.json["stored"] = *row.form;
    if (!seriesOk) {
        const auto e = expand(printed, T);
        for (int m = 0; m <= T; ++m)
            if (e[m] != s[m]) {
                r.json["diff"] = Json{{"m", m}, {"stored", qpoly_json(e[m])}, {"computed", qpoly_json(s[m])}};
                break;
            }
    }
    r.json["status"] = r.ok ? "match" : "mismatch";
    return r;
}

int cmd_table(const RunConfig& cfg, const std::string& name) {
    const auto names = corpus_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw ParseError("unknown corpus " + name);
    Json rows = Json::array();
    bool ok = true;
    for (const auto& row : corpus(name)) {
        auto r = table_row(cfg, row);
        ok = ok && r.ok;
        rows.push_back(r.json);
    }
    emit(cfg, Json{{"corpus", name}, {"passed", ok}, {"rows", rows}});
    return ok ? kOk : kMismatch;
}

int cmd_verify(const RunConfig& cfg, const std::string& what, int posetSize) {
    SuiteConfig sc;
    sc.seed = cfg.seed;
    sc.jobs = cfg.jobs;
    SuiteReport rep;
    if (what == "closure") {
        sc.trials = cfg.trials.value_or(200);
        rep = suite_closure(sc);
    } else if (what == "modp") {
        sc.trials = cfg.trials.value_or(100);
        if (!cfg.primes.empty()) sc.primes = cfg.primes;
        rep = suite_modp(sc);
    } else if (what == "identities") {
        auto ps = identity_corpus();
        if (!cfg.full)
            ps = {{"unit-square", cube(2)}, {"simplex-1", standard_simplex(2)}};
        rep = suite_identities(ps, cfg.t_or(8));
    } else if (what == "chainorder") {
        rep = suite_chainorder(posetSize, cfg.M.value_or(3), posetSize >= 4);
    } else if (what == "equivariant") {
        rep = suite_equivariant(cfg.t_or(4));
    } else if (what == "classical") {
        rep = suite_classical();
    } else {
        throw ParseError("unknown suite " + what);
    }
    auto j = rep.to_json();
    j["seed"] = cfg.seed;
    emit(cfg, j);
    return rep.passed ? kOk : kMismatch;
}

int cmd_equivariant(const RunConfig& cfg, const std::string& polyFile, const std::string& groupFile, const std::string& tableFile) {
    const auto P = parse_polytope(read_json_file(polyFile));
    const auto G = parse_group(read_json_file(groupFile));
    std::optional<CharacterTable> table;
    if (!tableFile.empty()) table = parse_table(read_json_file(tableFile));
    try {
        verify_group(G);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
    const int T = cfg.t_or(4);
    GradedCharacter ch;
    try {
        ch = equivariant_series(P, G, T, cfg.jobs);
    } catch (const NotASymmetry& e) {
        throw ParseError(e.what());
    }
    auto j = character_json(ch);
    j["T"] = T;
    if (table) {
        Json dec = Json::array();
        for (int m = 0; m <= T; ++m) {
            std::vector<QPoly> vals;
            for (const auto& cls : table->classes) {
                if (!ch.per_element.count(cls)) throw ParseError("no group element with id " + cls);
                vals.push_back(ch.per_element.at(cls)[m]);
            }
            Json row = Json::object();
            const auto mult = decompose(vals, *table);
            for (std::size_t i = 0; i < mult.size(); ++i) row[table->irreps[i]] = qpoly_json(mult[i]);
            dec.push_back(row);
        }
        j["multiplicities"] = dec;
    }
    emit(cfg, j);
    return kOk;
}

Json vertices_json(const LatticePolytope& p) { return Json{{"name", p.name()}, {"vertices", p.vertices()}}; }

int cmd_poset(const RunConfig& cfg, const std::string& sub, const std::string& file) {
    const auto poset = parse_poset(read_json_file(file));
    if (sub == "order") {
        emit(cfg, vertices_json(order_polytope(poset)));
    } else if (sub == "chain") {
        emit(cfg, vertices_json(chain_polytope(poset)));
    } else {
        const int M = cfg.M.value_or(2);
        const auto O = order_polytope(poset);
        Json pairs = Json::array();
        for (const auto& g : O.lattice_points(M).points) pairs.push_back(Json::array({g, stanley_transfer(poset, g)}));
        const bool eq = chain_order_equality(poset, M);
        emit(cfg, Json{{"M", M}, {"harmonicSpacesAgree", eq}, {"transfer", pairs}});
        return eq ? kOk : kMismatch;
    }
    return kOk;
}

int cmd_modp(const RunConfig& cfg, const std::string& sub, const std::vector<std::string>& args) {
    if (cfg.primes.size() > 1) throw ParseError("modp takes a single --prime");
    const std::uint64_t p = cfg.primes.empty() ? 2 : cfg.primes[0];
    if (sub == "beta") {
        if (args.size() != 2) throw ParseError("beta needs r and r'");
        long r1, r2;
        try {
            r1 = std::stol(args[0]);
            r2 = std::stol(args[1]);
        } catch (const std::exception&) {
            throw ParseError("beta: r and r' must be integers");
        }
        if (r1 < 1 || r2 < 1) throw ParseError("beta: r and r' must be positive");
        emit(cfg, Json{{"r", r1}, {"r2", r2}, {"p", p}, {"beta", beta_bound(r1, r2, p)}});
        return kOk;
    }
    if (args.size() != 2) throw ParseError("closure needs two locus files");
    const auto a = parse_locus(read_json_file(args[0])), b = parse_locus(read_json_file(args[1]));
    ModpClosureResult res;
    try {
        res = closure_check_modp(a, b, p);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    emit(cfg, Json{{"p", p}, {"holds", res.holds}, {"witness", res.witness ? Json(res.witness->to_string()) : Json()}});
    return res.holds ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Ehrhart series of lattice polytopes via harmonic spaces"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--max-t", cfg.T, "truncation order in t")->check(CLI::NonNegativeNumber);
        c->add_option("--max-m", cfg.M, "largest dilate")->check(CLI::NonNegativeNumber);
        c->add_option("--den-b-max", cfg.bMax, "largest t-exponent in a denominator factor")->check(CLI::PositiveNumber);
        c->add_option("--den-a-max", cfg.aMax, "largest q-exponent in a denominator factor")->check(CLI::NonNegativeNumber);
        c->add_option("--nu-max", cfg.nuMax, "largest number of denominator factors")->check(CLI::PositiveNumber);
        c->add_option("--t-deg-max", cfg.tDegMax, "numerator t-degree cap")->check(CLI::NonNegativeNumber);
        c->add_option("--prime", cfg.primes, "prime(s) for modular suites");
        c->add_option("--seed", cfg.seed, "random seed");
        c->add_option("--trials", cfg.trials, "number of random trials")->check(CLI::PositiveNumber);
        c->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        c->add_option("--cache", cfg.cache, "cache directory (default $QEH_CACHE_DIR)");
        c->add_option("--out", cfg.out, "write JSON here instead of standard output");
    };

    std::string file, file2, file3, name, sub;
    std::vector<std::string> rest;
    int posetSize = 4;

    auto* compute = app.add_subcommand("compute", "i_P(m;q) for m <= T");
    compute->add_option("polytope", file, "polytope JSON")->required();
    auto* interior = app.add_subcommand("interior", "interior series for m <= T");
    interior->add_option("polytope", file, "polytope JSON")->required();
    auto* guessCmd = app.add_subcommand("guess", "guess rational forms for E and its interior series");
    guessCmd->add_option("polytope", file, "polytope JSON")->required();
    auto* table = app.add_subcommand("table", "reproduce a stored table");
    table->add_option("corpus", name, "fig1|fig2|fig3|closedforms|extradata")->required();
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", name, "closure|identities|chainorder|modp|equivariant|classical")->required();
    verify->add_option("--poset-size", posetSize, "chainorder: largest poset size")->check(CLI::Range(1, 5));
    verify->add_flag("--full", cfg.full, "identities: the whole polytope list");
    auto* equiv = app.add_subcommand("equivariant", "graded characters of a symmetry group");
    equiv->add_option("polytope", file, "polytope JSON")->required();
    equiv->add_option("group", file2, "group JSON")->required();
    equiv->add_option("--table", file3, "character table JSON");
    auto* poset = app.add_subcommand("poset", "order and chain polytopes");
    poset->add_option("which", sub, "order|chain|transfer")->required()->check(CLI::IsMember({"order", "chain", "transfer"}));
    poset->add_option("poset", file, "poset JSON")->required();
    auto* modp = app.add_subcommand("modp", "characteristic p");
    modp->add_option("which", sub, "closure|beta")->required()->check(CLI::IsMember({"closure", "beta"}));
    modp->add_option("args", rest, "two locus files, or r r'");
    for (auto* c : {compute, interior, guessCmd, table, verify, equiv, poset, modp}) add_common(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }
    if (cfg.T && cfg.M && *cfg.T < *cfg.M) {
        std::cerr << "error: --max-t must be at least --max-m\n";
        return kParse;
    }

    try {
        if (*compute) return cmd_compute(cfg, file, false);
        if (*interior) return cmd_compute(cfg, file, true);
        if (*guessCmd) return cmd_guess(cfg, file);
        if (*table) return cmd_table(cfg, name);
        if (*verify) return cmd_verify(cfg, name, posetSize);
        if (*equiv) return cmd_equivariant(cfg, file, file2, file3);
        if (*poset) return cmd_poset(cfg, sub, file);
        if (*modp) return cmd_modp(cfg, sub, rest);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return kParse;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
