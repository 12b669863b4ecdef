// ac-lab: command line front end for the transformation-graph toolkit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aclab/graphs.hpp"
#include "aclab/spec_parse.hpp"
#include "aclab/suite.hpp"
#include "aclab/unit_rings.hpp"
#include "aclab/wreath.hpp"

namespace {

using namespace aclab;

struct GlobalOpts {
    bool json = false;
    int jobs = 1;
    long long state_cap = 10000000;
    std::string cache_dir;
};

GraphOptions graph_opts(const GlobalOpts& g, bool diameters = true) {
    GraphOptions o;
    o.state_cap = g.state_cap;
    o.diameters = diameters;
    return o;
}

// result cache: one JSON file per (code version, operation, arguments) key
std::optional<Json> cache_get(const GlobalOpts& g, const std::string& key) {
    if (g.cache_dir.empty()) return std::nullopt;
    auto path = std::filesystem::path(g.cache_dir) / (fnv1a_hex(key) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Json j;
    in >> j;
    if (j.value("key", "") != key) return std::nullopt;  // hash collision guard
    return j.at("value");
}

void cache_put(const GlobalOpts& g, const std::string& key, const Json& value) {
    if (g.cache_dir.empty()) return;
    std::filesystem::create_directories(g.cache_dir);
    auto path = std::filesystem::path(g.cache_dir) / (fnv1a_hex(key) + ".json");
    Json j;
    j["key"] = key;
    j["value"] = value;
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

std::string make_key(const GlobalOpts& g, const std::string& op, const std::string& args) {
    std::ostringstream key;
    key << kCodeVersion << "|" << op << "|cap=" << g.state_cap << "|" << args;
    return key.str();
}

Tuple read_tuple(const GroupTable& g, const std::string& ids, const std::string& perms) {
    if (!perms.empty()) return parse_tuple_perms(g, perms);
    return parse_tuple(g, ids);
}

void emit(const GlobalOpts& g, const Json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string describe_components(const GraphAnalysis& a) {
    std::ostringstream out;
    out << "vertices: " << a.vertices.size() << "\ncomponents: " << a.component_count() << "\n";
    for (int c = 0; c < a.component_count(); ++c) {
        out << "  #" << c << " size " << a.component_size[c] << " rep (";
        const Tuple& rep = a.vertices[a.representative[c]];
        for (size_t i = 0; i < rep.size(); ++i) out << (i ? "," : "") << rep[i];
        out << ")";
        if (!a.diameter.empty() && a.diameter[c] >= 0)
            out << " diameter " << a.diameter[c] << (a.diameter_exact[c] ? "" : " (lower bound)");
        out << "\n";
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"finite-scale lab for tuple transformation graphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("AC_LAB_CACHE")) g.cache_dir = env;
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--jobs", g.jobs, "worker count (reserved; all ops are deterministic)");
    app.add_option("--state-cap", g.state_cap, "max enumerated tuples per graph");
    app.add_option("--cache-dir", g.cache_dir, "result cache directory (env AC_LAB_CACHE)");

    std::string group_spec, tuple_ids, tuple_perms, catalog_path, out_dir;
    int n = 2;

    auto add_group = [&](CLI::App* cmd, bool with_n = true) {
        cmd->add_option("--group", group_spec, "group spec, e.g. 'builtin: dihedral(6)'")
            ->required();
        if (with_n) cmd->add_option("-n,--n", n, "tuple length");
    };
    auto add_tuple = [&](CLI::App* cmd) {
        cmd->add_option("--tuple", tuple_ids, "tuple of element ids, e.g. '3,4'");
        cmd->add_option("--tuple-perm", tuple_perms, "tuple of cycle strings, e.g. '(0 1)|(0 1 2)'");
    };

    // group info
    auto* group_cmd = app.add_subcommand("group", "group constructions");
    auto* info = group_cmd->add_subcommand("info", "orders, series, rank, weight");
    add_group(info, false);

    // nielsen classes
    auto* nielsen_cmd = app.add_subcommand("nielsen", "abelian classification");
    auto* classes = nielsen_cmd->add_subcommand("classes", "class count and labels");
    add_group(classes);
    add_tuple(classes);

    // graph <components|diameter|rec|gacc1|w1>
    auto* graph_cmd = app.add_subcommand("graph", "transformation graph analyses");
    std::string moves_name = "ac";
    auto* components = graph_cmd->add_subcommand("components", "BFS components");
    add_group(components);
    components->add_option("--moves", moves_name, "nielsen | ac | m | m-inv");
    auto* diameter = graph_cmd->add_subcommand("diameter", "component diameters and d_n");
    add_group(diameter);
    diameter->add_option("--moves", moves_name, "nielsen | ac | m | m-inv");
    auto* rec = graph_cmd->add_subcommand("rec", "recalcitrance");
    add_group(rec);
    add_tuple(rec);
    auto* gacc1 = graph_cmd->add_subcommand("gacc1", "component bijection with the abelianization");
    add_group(gacc1);
    auto* w1 = graph_cmd->add_subcommand("w1", "weight-one element classes");
    add_group(w1, false);

    // bs-coessential
    long long bs_n = 0;
    std::string bs_range;
    auto* bs = app.add_subcommand("bs-coessential", "unit-image certificates for BS(1, n)");
    bs->add_option("n", bs_n, "the parameter n >= 2");
    bs->add_option("--range", bs_range, "scan a range, e.g. 2..100");

    // cyclotomic xi
    auto* cyc = app.add_subcommand("cyclotomic", "cyclotomic unit checks");
    int cyc_n = 0;
    long long cyc_a = 0;
    auto* xi = cyc->add_subcommand("xi", "check that xi_a is a unit mod Phi_n");
    xi->add_option("n", cyc_n, "prime power n")->required();
    xi->add_option("a", cyc_a, "exponent a coprime to n")->required();

    // wreath verify
    auto* wreath_cmd = app.add_subcommand("wreath", "iterated wreath products");
    std::vector<int> wreath_orders;
    auto* verify = wreath_cmd->add_subcommand("verify", "distinguished-element properties");
    verify->add_option("orders", wreath_orders, "pairwise coprime stage orders")->required();

    // suite run
    auto* suite_cmd = app.add_subcommand("suite", "standing check suite");
    auto* suite_run = suite_cmd->add_subcommand("run", "run the acceptance checks");
    suite_run->add_option("--catalog", catalog_path, "catalog JSON (default: built-in)");
    suite_run->add_option("--out", out_dir, "directory for per-check reports");

    CLI11_PARSE(app, argc, argv);

    auto moves_of = [&]() {
        if (moves_name == "nielsen") return MoveSet::Nielsen;
        if (moves_name == "ac") return MoveSet::AC;
        if (moves_name == "m") return MoveSet::MOnly;
        if (moves_name == "m-inv") return MoveSet::MPlusInversion;
        throw CLI::ValidationError("--moves", "unknown move set '" + moves_name + "'");
    };

    if (info->parsed()) {
        GroupTable gt = parse_group_spec(group_spec);
        Json j;
        j["order"] = gt.order();
        j["abelian"] = gt.is_abelian();
        j["soluble"] = is_soluble(gt);
        j["rank"] = rank(gt);
        j["weight"] = weight(gt);
        j["abelianization_order"] = abelianization(gt).table.order();
        j["w_subgroup_order"] = w_subgroup(gt).size();
        std::vector<int> series;
        for (const auto& s : derived_series(gt)) series.push_back(s.size());
        j["derived_series_orders"] = series;
        std::ostringstream text;
        text << "order " << j["order"] << ", rank " << j["rank"] << ", weight " << j["weight"]
             << (j["abelian"].get<bool>() ? ", abelian" : "")
             << (j["soluble"].get<bool>() ? ", soluble" : ", not soluble") << "\n"
             << "abelianization order " << j["abelianization_order"] << ", W(G) order "
             << j["w_subgroup_order"] << "\n";
        emit(g, j, text.str());
        return 0;
    }

    if (classes->parsed()) {
        GroupTable a = parse_group_spec(group_spec);
        AbelianBasis basis = invariant_factors(a);
        Json j;
        j["invariant_factors"] = basis.invariants.factors;
        j["n"] = n;
        j["class_count"] = class_count(basis.invariants, n);
        std::ostringstream text;
        text << "invariant factors:";
        for (long long d : basis.invariants.factors) text << " " << d;
        text << "\nclasses at n=" << n << ": " << j["class_count"] << "\n";
        if (!tuple_ids.empty() || !tuple_perms.empty()) {
            Tuple t = read_tuple(a, tuple_ids, tuple_perms);
            NielsenClass c = nielsen_class(a, basis, t);
            if (c.delta) {
                j["delta"] = *c.delta;
                text << "tuple class delta: " << *c.delta << "\n";
            } else {
                j["delta"] = nullptr;
                text << "tuple class: single-class\n";
            }
        }
        emit(g, j, text.str());
        return 0;
    }

    if (components->parsed() || diameter->parsed()) {
        bool want_diam = diameter->parsed();
        std::string key =
            make_key(g, want_diam ? "diameter" : "components",
                     group_spec + "|n=" + std::to_string(n) + "|moves=" + moves_name);
        Json j;
        if (auto hit = cache_get(g, key)) {
            j = *hit;
        } else {
            GroupTable gt = parse_group_spec(group_spec);
            GraphAnalysis a = analyze_graph(gt, n, moves_of(), graph_opts(g, want_diam));
            j = to_json(a, group_spec, n, moves_of());
            cache_put(g, key, j);
        }
        std::ostringstream text;
        text << "vertices: " << j["vertex_count"] << "\ncomponents: " << j["component_count"]
             << "\n";
        if (want_diam && j.contains("d_n"))
            text << "d_n: " << j["d_n"]
                 << (j["d_n_exact"].get<bool>() ? "" : " (lower bound)") << "\n";
        emit(g, j, text.str());
        return 0;
    }

    if (rec->parsed()) {
        GroupTable gt = parse_group_spec(group_spec);
        Json j;
        std::ostringstream text;
        if (!tuple_ids.empty() || !tuple_perms.empty()) {
            Tuple t = read_tuple(gt, tuple_ids, tuple_perms);
            auto d = recalcitrance(gt, t, g.state_cap);
            if (d) {
                j["value"] = *d;
                text << "recalcitrance: " << *d << "\n";
            } else {
                j["value"] = nullptr;
                text << "recalcitrance: infinite (no generating vector reachable)\n";
            }
        } else {
            GroupRecalcitrance gr = recalcitrance_group(gt, n, g.state_cap);
            j = to_json(gr);
            if (gr.value)
                text << "group recalcitrance at n=" << n << ": " << *gr.value << "\n";
            else
                text << "group recalcitrance at n=" << n << ": infinite\n";
        }
        emit(g, j, text.str());
        return 0;
    }

    if (gacc1->parsed()) {
        GroupTable gt = parse_group_spec(group_spec);
        if (!is_soluble(gt))
            std::cerr << "warning: group is not soluble; the bijection statement does not apply\n";
        Gacc1Report rep = gacc1_check(gt, n, graph_opts(g, false));
        Json j = to_json(rep);
        std::ostringstream text;
        text << (rep.pass ? "bijection holds" : "bijection FAILS") << ": "
             << rep.ac_component_count << " components vs " << rep.nielsen_class_count
             << " classes\n";
        emit(g, j, text.str());
        return rep.pass ? 0 : 1;
    }

    if (w1->parsed()) {
        GroupTable gt = parse_group_spec(group_spec);
        WeightOneReport rep = weight_one_classes(gt);
        Json j = to_json(rep, gt);
        std::ostringstream text;
        text << "image classes: " << rep.image_classes.size() << ", conjugation classes: "
             << rep.ac_classes.size() << (rep.satisfies_gacc1_1 ? " (bijection)" : "") << "\n";
        emit(g, j, text.str());
        return 0;
    }

    if (bs->parsed()) {
        Json j;
        std::ostringstream text;
        if (!bs_range.empty()) {
            auto sep = bs_range.find("..");
            if (sep == std::string::npos)
                throw CLI::ValidationError("--range", "expected '<lo>..<hi>'");
            long long lo = std::stoll(bs_range.substr(0, sep));
            long long hi = std::stoll(bs_range.substr(sep + 2));
            Json rows = Json::array();
            for (long long v = lo; v <= hi; ++v) {
                CoessentialityCertificate c = bs_coessential(v);
                rows.push_back(to_json(c));
                text << "n=" << v << ": " << to_string(c.verdict);
                if (c.witness) text << " (witness " << *c.witness << ")";
                if (c.prime_power_range_divergence) text << " [flagged]";
                text << "\n";
            }
            j["certificates"] = std::move(rows);
        } else {
            if (bs_n < 2) throw CLI::ValidationError("n", "give n >= 2 or --range");
            CoessentialityCertificate c = bs_coessential(bs_n);
            j = to_json(c);
            text << "n=" << bs_n << ": " << to_string(c.verdict) << "\nimage mod " << c.modulus
                 << ":";
            for (long long u : c.image.members) text << " " << u;
            text << "\n";
            if (c.witness) text << "witness outside the image: " << *c.witness << "\n";
            if (c.prime_power_range_divergence)
                text << "note: prime power >= 11 but surjective by enumeration\n";
        }
        emit(g, j, text.str());
        return 0;
    }

    if (xi->parsed()) {
        XiUnitResult res = xi_unit_check(cyc_n, cyc_a);
        Json j;
        j["n"] = cyc_n;
        j["a"] = cyc_a;
        j["is_unit"] = res.is_unit;
        j["residue"] = res.residue;
        std::ostringstream text;
        text << "xi_" << cyc_a << " mod Phi_" << cyc_n << ": "
             << (res.is_unit ? "unit" : "not a unit") << ", residue " << res.residue << "\n";
        emit(g, j, text.str());
        return res.is_unit ? 0 : 1;
    }

    if (verify->parsed()) {
        WreathVerifyReport rep = wreath_weight_one_verify(WreathSpec{wreath_orders});
        Json j = to_json(rep);
        std::ostringstream text;
        text << (rep.pass ? "pass" : "FAIL") << ": order " << rep.group_order
             << ", distinguished element of order " << rep.distinguished_order
             << ", class size " << rep.conjugacy_class_size << "\n";
        emit(g, j, text.str());
        return rep.pass ? 0 : 1;
    }

    if (suite_run->parsed()) {
        SuiteSummary s = run_acceptance_suite(catalog_path, out_dir);
        Json j;
        j["total"] = s.total;
        j["passed"] = s.passed;
        j["failed"] = s.failed;
        j["skipped"] = s.skipped;
        j["digest"] = s.digest;
        std::ostringstream text;
        for (const auto& r : s.results) {
            text << (r.skipped ? "[skip]" : r.pass ? "[pass]" : "[FAIL]") << " " << r.name;
            if (!r.note.empty()) text << " — " << r.note;
            text << "\n";
        }
        text << s.passed << " passed, " << s.failed << " failed, " << s.skipped
             << " skipped\n";
        emit(g, j, text.str());
        return s.failed == 0 ? 0 : 1;
    }

    std::cerr << "no action selected\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const aclab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
