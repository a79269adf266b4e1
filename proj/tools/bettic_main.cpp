// bettic: exact Betti / bigraded-Betti calculator and extremal-search tool
// for finite simplicial complexes.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bettic/canonical.hpp"
#include "bettic/classifier.hpp"
#include "bettic/extremal.hpp"
#include "bettic/generators.hpp"
#include "bettic/hochster.hpp"
#include "bettic/homology.hpp"
#include "bettic/io.hpp"
#include "bettic/search.hpp"

using nlohmann::json;
using namespace bettic;

namespace {

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& f) {
    if (f == "table") return Format::Table;
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    throw CLI::ValidationError("--format", "expected table, json, or csv");
}

struct Global {
    std::string field = "f2";
    std::string format = "table";
    int threads = 0;
    std::uint64_t seed = 0;

    FieldSpec field_spec() const { return FieldSpec::parse(field); }
    Format fmt() const { return parse_format(format); }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// betti / bigraded / dtotal / tau / classify
// ---------------------------------------------------------------------------

int cmd_betti(const Global& g, const std::string& path) {
    const Complex K = read_complex_file(path);
    const BettiTable t = reduced_betti(K, g.field_spec());
    switch (g.fmt()) {
        case Format::Json: {
            json by;
            for (int d = -1; d <= t.max_degree(); ++d) by[std::to_string(d)] = t.betti(d);
            emit(json{{"field", t.field.name()}, {"m", K.m()}, {"betti", by}, {"tb_reduced", t.total()}});
            break;
        }
        case Format::Csv:
            std::cout << "degree,betti\n";
            for (int d = -1; d <= t.max_degree(); ++d)
                std::cout << d << "," << t.betti(d) << "\n";
            break;
        case Format::Table:
            std::cout << "field " << t.field.name() << "\n";
            for (int d = -1; d <= t.max_degree(); ++d)
                std::cout << "betti[" << d << "] = " << t.betti(d) << "\n";
            std::cout << "tb_reduced = " << t.total() << "\n";
            break;
    }
    return 0;
}

int cmd_bigraded(const Global& g, const std::string& path) {
    const Complex K = read_complex_file(path);
    const BigradedTable t = bigraded(K, g.field_spec(), g.threads);
    const auto cells = t.nonzero();
    switch (g.fmt()) {
        case Format::Json: {
            json entries = json::array();
            for (const auto& [ij, v] : cells)
                entries.push_back(json{{"i", ij.first}, {"j", ij.second}, {"value", v}});
            emit(json{{"field", t.field().name()}, {"m", t.m()}, {"entries", entries}, {"total", t.total()}});
            break;
        }
        case Format::Csv:
            std::cout << "i,j,value\n";
            for (const auto& [ij, v] : cells) std::cout << ij.first << "," << ij.second << "," << v << "\n";
            break;
        case Format::Table:
            std::cout << "field " << t.field().name() << ", m = " << t.m() << "\n";
            for (const auto& [ij, v] : cells)
                std::cout << "beta(-" << ij.first << "," << 2 * ij.second << ") = " << v << "\n";
            std::cout << "total = " << t.total() << "\n";
            break;
    }
    return 0;
}

int cmd_dtotal(const Global& g, const std::string& path) {
    const Complex K = read_complex_file(path);
    const long long value = d_total(K, g.field_spec(), g.threads);
    switch (g.fmt()) {
        case Format::Json:
            emit(json{{"field", g.field_spec().name()}, {"m", K.m()}, {"d_total", value}});
            break;
        case Format::Csv:
            std::cout << "d_total\n" << value << "\n";
            break;
        case Format::Table:
            std::cout << value << "\n";
            break;
    }
    return 0;
}

int cmd_tau(const Global& g, const std::string& path, int degree) {
    const Complex K = read_complex_file(path);
    const mpq_class value = tau(K, g.field_spec(), degree, g.threads);
    switch (g.fmt()) {
        case Format::Json:
            emit(json{{"field", g.field_spec().name()}, {"i", degree}, {"m", K.m()}, {"tau", value.get_str()}});
            break;
        case Format::Csv:
            std::cout << "i,tau\n" << degree << "," << value.get_str() << "\n";
            break;
        case Format::Table:
            std::cout << value.get_str() << "\n";
            break;
    }
    return 0;
}

int cmd_classify(const Global& g, const std::string& path) {
    const Complex K = read_complex_file(path);
    const JoinDecomposition dec = decompose(K);
    const bool structural = !dec.residual;
    const bool numeric = is_tight_numeric(K, g.field_spec(), g.threads);
    const long long dval = d_total(K, g.field_spec(), g.threads);
    const mpz_class bound = tight_bound(K.m(), K.dim());
    switch (g.fmt()) {
        case Format::Json: {
            json factors = json::array();
            for (Simplex f : dec.sphere_factors) factors.push_back(simplex_vertices(f));
            emit(json{{"m", K.m()},
                      {"dim", K.dim()},
                      {"field", g.field_spec().name()},
                      {"d_total", dval},
                      {"tight_bound", bound.get_str()},
                      {"tight_numeric", numeric},
                      {"tight_structural", structural},
                      {"residual", dec.residual},
                      {"cone_vertices", simplex_vertices(dec.cone_vertices)},
                      {"sphere_factors", factors}});
            break;
        }
        case Format::Csv:
            std::cout << "m,dim,d_total,tight_bound,tight_numeric,tight_structural\n"
                      << K.m() << "," << K.dim() << "," << dval << "," << bound.get_str() << ","
                      << (numeric ? 1 : 0) << "," << (structural ? 1 : 0) << "\n";
            break;
        case Format::Table: {
            std::cout << "m = " << K.m() << ", dim = " << K.dim() << "\n";
            std::cout << "d_total = " << dval << " (tight bound " << bound.get_str() << ")\n";
            std::cout << "tight (numeric, " << g.field_spec().name() << "): " << (numeric ? "yes" : "no") << "\n";
            std::cout << "tight (structural): " << (structural ? "yes" : "no") << "\n";
            if (!dec.residual) {
                std::cout << "decomposition: cone {";
                bool first = true;
                for (int v : simplex_vertices(dec.cone_vertices)) {
                    std::cout << (first ? "" : ",") << v;
                    first = false;
                }
                std::cout << "}";
                for (Simplex f : dec.sphere_factors) {
                    std::cout << " * boundary{";
                    first = true;
                    for (int v : simplex_vertices(f)) {
                        std::cout << (first ? "" : ",") << v;
                        first = false;
                    }
                    std::cout << "}";
                }
                std::cout << "\n";
            } else {
                std::cout << "decomposition: none (minimal non-faces overlap)\n";
            }
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// gen / scan / verify / gtable / bounds / witnesses
// ---------------------------------------------------------------------------

int cmd_gen(const std::string& kind, GeneratorParams p, const std::string& out_path) {
    if (p.n < 0 && p.ns.size() == 1) p.n = p.ns.front(); // boundary takes a single --n
    const Complex K = generate(kind, p);
    if (out_path.empty())
        std::cout << complex_to_string(K) << "\n";
    else
        write_complex_file(K, out_path);
    return 0;
}

json witness_json(const Complex& K) {
    json facets = json::array();
    for (Simplex f : K.facets()) facets.push_back(simplex_vertices(f));
    return json{{"m", K.m()}, {"facets", facets}};
}

int cmd_scan(const Global& g, int m, const std::string& d_text, const std::string& objective,
             bool allow_long, bool progress) {
    std::optional<int> d;
    if (d_text != "all") d = std::stoi(d_text);
    ProgressFn prog = nullptr;
    if (progress)
        prog = [](long long n) { std::fprintf(stderr, "scan: %lld classes...\n", n); };
    const ScanReport rep = scan(m, d, parse_objective(objective), g.field_spec(), g.threads, allow_long, prog);
    switch (g.fmt()) {
        case Format::Json: {
            json ws = json::array();
            for (const Complex& W : rep.witnesses) ws.push_back(witness_json(W));
            emit(json{{"m", rep.m},
                      {"d", d ? json(*d) : json("all")},
                      {"objective", objective_name(rep.objective)},
                      {"field", rep.field.name()},
                      {"extremal_value", rep.extremal_value},
                      {"enumerated", rep.enumerated},
                      {"witnesses", ws}});
            break;
        }
        case Format::Csv:
            std::cout << "m,d,objective,field,extremal_value,enumerated,witness\n";
            for (const auto& key : rep.witness_keys)
                std::cout << rep.m << "," << (d ? std::to_string(*d) : "all") << ","
                          << objective_name(rep.objective) << "," << rep.field.name() << ","
                          << rep.extremal_value << "," << rep.enumerated << ",\"" << key << "\"\n";
            break;
        case Format::Table:
            std::cout << "objective " << objective_name(rep.objective) << " over m=" << rep.m
                      << " d=" << (d ? std::to_string(*d) : "all") << " field=" << rep.field.name() << "\n";
            std::cout << "classes enumerated: " << rep.enumerated << "\n";
            std::cout << "extremal value: " << rep.extremal_value << "\n";
            std::cout << "witnesses (" << rep.witnesses.size() << "):\n";
            for (const auto& key : rep.witness_keys) std::cout << "  " << key << "\n";
            std::printf("elapsed: %.2fs\n", rep.elapsed_seconds);
            break;
    }
    return 0;
}

int cmd_verify(const Global& g, const std::string& id, VerifyParams p) {
    p.field = g.field_spec();
    p.threads = g.threads;
    p.seed = g.seed;
    const VerifyReport rep = verify(id, p);
    switch (g.fmt()) {
        case Format::Json:
            emit(json{{"theorem", rep.id},
                      {"pass", rep.pass},
                      {"checked", rep.checked},
                      {"counterexamples", rep.counterexamples},
                      {"notes", rep.notes}});
            break;
        case Format::Csv:
            std::cout << "theorem,pass,checked\n"
                      << rep.id << "," << (rep.pass ? 1 : 0) << "," << rep.checked << "\n";
            break;
        case Format::Table:
            std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.id << " (" << rep.checked << " checks)\n";
            for (const auto& n : rep.notes) std::cout << "  " << n << "\n";
            for (const auto& c : rep.counterexamples) std::cout << "  counterexample: " << c << "\n";
            break;
    }
    return rep.pass ? 0 : 1;
}

int cmd_gtable(const Global& g, int m_max) {
    if (m_max < 1) throw std::range_error("gtable: need --m-max >= 1");
    switch (g.fmt()) {
        case Format::Json: {
            json rows = json::array();
            for (int m = 1; m <= m_max; ++m) {
                json vals = json::array();
                for (int d = 0; d < m; ++d) vals.push_back(g_value(m, d).get_str());
                rows.push_back(json{{"m", m}, {"argmax", g_argmax(m)}, {"g", vals}});
            }
            emit(rows);
            break;
        }
        case Format::Csv:
            std::cout << "m,d,g,argmax\n";
            for (int m = 1; m <= m_max; ++m) {
                const int am = g_argmax(m);
                for (int d = 0; d < m; ++d)
                    std::cout << m << "," << d << "," << g_value(m, d).get_str() << ","
                              << (d == am ? 1 : 0) << "\n";
            }
            break;
        case Format::Table:
            for (int m = 1; m <= m_max; ++m) {
                std::cout << "m=" << m << " argmax=" << g_argmax(m) << ":";
                for (int d = 0; d < m; ++d) std::cout << " " << g_value(m, d).get_str();
                std::cout << "\n";
            }
            break;
    }
    return 0;
}

int cmd_bounds(const Global& g, int m, int d) {
    const mpz_class tb_bound = tb_upper_bound(m, d);
    const mpz_class dt_bound = tight_bound(m, d);
    const mpz_class skel = d_skeleton_value(m, d);
    switch (g.fmt()) {
        case Format::Json:
            emit(json{{"m", m},
                      {"d", d},
                      {"tb_upper_bound", tb_bound.get_str()},
                      {"d_total_lower_bound", dt_bound.get_str()},
                      {"d_total_of_skeleton", skel.get_str()}});
            break;
        case Format::Csv:
            std::cout << "m,d,tb_upper_bound,d_total_lower_bound,d_total_of_skeleton\n"
                      << m << "," << d << "," << tb_bound.get_str() << "," << dt_bound.get_str() << ","
                      << skel.get_str() << "\n";
            break;
        case Format::Table:
            std::cout << "max reduced total Betti number in dimension " << d << ": " << tb_bound.get_str() << "\n";
            std::cout << "universal lower bound for the total bigraded Betti number: " << dt_bound.get_str() << "\n";
            std::cout << "total bigraded Betti number of the " << d << "-skeleton: " << skel.get_str() << "\n";
            break;
    }
    return 0;
}

int cmd_witnesses(const Global& g, int m, const std::string& d_text) {
    const ExtremalAnswer ans = (d_text == "all") ? sigma_tb_global(m)
                                                 : sigma_tb_witnesses(m, std::stoi(d_text));
    switch (g.fmt()) {
        case Format::Json: {
            json ws = json::array();
            for (const Complex& W : ans.witnesses) ws.push_back(witness_json(W));
            emit(json{{"m", m},
                      {"d", d_text == "all" ? json("all") : json(std::stoi(d_text))},
                      {"value", ans.value.get_str()},
                      {"witnesses", ws}});
            break;
        }
        case Format::Csv:
            std::cout << "m,d,value,witness\n";
            for (const Complex& W : ans.witnesses)
                std::cout << m << "," << d_text << "," << ans.value.get_str() << ",\""
                          << facet_list_string(W) << "\"\n";
            break;
        case Format::Table:
            std::cout << "max reduced total Betti number: " << ans.value.get_str() << "\n";
            for (const Complex& W : ans.witnesses)
                std::cout << "  m=" << W.m() << ";facets=" << facet_list_string(W) << "\n";
            break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Betti numbers, bigraded Betti numbers, and extremal classifications "
                 "of finite simplicial complexes"};
    app.require_subcommand(1);

    Global g;
    app.add_option("--field", g.field, "coefficient field: f2, f<p>, or q")->capture_default_str();
    app.add_option("--format", g.format, "output format: table, json, or csv")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for sampled verifiers")->capture_default_str();

    std::string path;
    int tau_i = 0;

    auto* betti = app.add_subcommand("betti", "reduced Betti numbers of a complex file");
    betti->add_option("file", path, "complex JSON file")->required();

    auto* bigr = app.add_subcommand("bigraded", "bigraded Betti numbers via the Hochster sweep");
    bigr->add_option("file", path, "complex JSON file")->required();

    auto* dtot = app.add_subcommand("dtotal", "total bigraded Betti number");
    dtot->add_option("file", path, "complex JSON file")->required();

    auto* tauc = app.add_subcommand("tau", "weighted Betti average of the full subcomplexes");
    tauc->add_option("file", path, "complex JSON file")->required();
    tauc->add_option("--i", tau_i, "homology degree")->required();

    auto* classify = app.add_subcommand("classify", "tightness and sphere-join decomposition");
    classify->add_option("file", path, "complex JSON file")->required();

    std::string gen_kind, gen_out;
    GeneratorParams gp;
    auto* gen = app.add_subcommand("gen", "generate a named complex");
    gen->add_option("kind", gen_kind,
                    "simplex | skeleton | skeleton_ext | boundary | sphere_join | "
                    "simplex_sphere_join | cycle | complete_bipartite")
        ->required();
    gen->add_option("--m", gp.m, "vertex count");
    gen->add_option("--k", gp.k, "skeleton dimension");
    gen->add_option("--d", gp.d, "target dimension");
    gen->add_option("--n", gp.ns, "boundary factor sizes (repeatable)");
    gen->add_option("--r", gp.r, "simplex factor size");
    gen->add_option("--a", gp.a, "first part size");
    gen->add_option("--b", gp.b, "second part size");
    gen->add_option("-o,--output", gen_out, "write to file instead of stdout");

    int scan_m = 0;
    std::string scan_d = "all", scan_obj;
    bool allow_long = false, progress = false;
    auto* scanc = app.add_subcommand("scan", "exhaustive isomorphism-reduced extremal scan");
    scanc->add_option("--m", scan_m, "vertex count")->required();
    scanc->add_option("--d", scan_d, "dimension, or 'all'")->capture_default_str();
    scanc->add_option("--objective", scan_obj, "tb_max | d_min | d_max | tight_all")->required();
    scanc->add_flag("--allow-long", allow_long, "permit the long-running m=6 enumeration");
    scanc->add_flag("--progress", progress, "status line per 10^4 classes on stderr");

    std::string verify_id;
    VerifyParams vp;
    int v_m = -1, v_mmax = -1, v_nmax = -1, v_d = -1;
    auto* verifyc = app.add_subcommand("verify", "check a classified statement exhaustively or by sampling");
    verifyc->add_option("--theorem", verify_id, "BK-1.2 TB-2.2 MV-2.1 SPERNER-2.8 SIGMA-2.9 "
                                                "BOUNDS-2.10 TIGHT-3.12 LINKS-3.10 MV-4.1 DMAX-4.2 G-5.1")
        ->required();
    verifyc->add_option("--m", v_m, "vertex count");
    verifyc->add_option("--m-max", v_mmax, "largest vertex count");
    verifyc->add_option("--n-max", v_nmax, "largest ground-set size");
    verifyc->add_option("--d", v_d, "dimension");
    verifyc->add_option("--samples", vp.samples, "sample count for the sampled verifiers")->capture_default_str();
    verifyc->add_flag("--allow-long", vp.allow_long, "permit the long-running m=6 enumeration");

    int gt_mmax = 0;
    auto* gtable = app.add_subcommand("gtable", "table of g(m,d) values with the maximizing dimension");
    gtable->add_option("--m-max", gt_mmax, "largest m")->required();

    int b_m = 0, b_d = 0;
    auto* bounds = app.add_subcommand("bounds", "closed-form bounds for (m,d)");
    bounds->add_option("--m", b_m, "vertex count")->required();
    bounds->add_option("--d", b_d, "dimension")->required();

    int w_m = 0;
    std::string w_d = "all";
    auto* witnesses = app.add_subcommand("witnesses", "complexes attaining the maximum reduced total Betti number");
    witnesses->add_option("--m", w_m, "vertex count")->required();
    witnesses->add_option("--d", w_d, "dimension, or 'all' for the global maximum")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

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
        if (betti->parsed()) return cmd_betti(g, path);
        if (bigr->parsed()) return cmd_bigraded(g, path);
        if (dtot->parsed()) return cmd_dtotal(g, path);
        if (tauc->parsed()) return cmd_tau(g, path, tau_i);
        if (classify->parsed()) return cmd_classify(g, path);
        if (gen->parsed()) return cmd_gen(gen_kind, gp, gen_out);
        if (scanc->parsed()) return cmd_scan(g, scan_m, scan_d, scan_obj, allow_long, progress);
        if (verifyc->parsed()) {
            if (v_m >= 0) vp.m = v_m;
            if (v_mmax >= 0) vp.m_max = v_mmax;
            if (v_nmax >= 0) vp.n_max = v_nmax;
            if (v_d >= 0) vp.d = v_d;
            return cmd_verify(g, verify_id, vp);
        }
        if (gtable->parsed()) return cmd_gtable(g, gt_mmax);
        if (bounds->parsed()) return cmd_bounds(g, b_m, b_d);
        if (witnesses->parsed()) return cmd_witnesses(g, w_m, w_d);
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
