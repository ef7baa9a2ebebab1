#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "bmat/bmx.hpp"
#include "bmat/catalog.hpp"
#include "bmat/connectivity.hpp"
#include "bmat/decide.hpp"
#include "bmat/decomposition.hpp"
#include "bmat/extremal.hpp"
#include "bmat/facts.hpp"
#include "bmat/invariants.hpp"
#include "bmat/recognition.hpp"

using namespace bmat;
using nlohmann::ordered_json;

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitError = 1;
constexpr int kExitGuard = 2;

struct Globals {
    int max_elements = 24;
    int max_target = 12;
    int max_star_rank = 24;
    int max_invariant_elements = 26;
    int jobs = 1;
    bool verify = false;
};

MinorOptions minor_opts(const Globals& g) { return {g.max_elements, g.max_target}; }

std::string limits(const Globals& g) {
    return "max-elements=" + std::to_string(g.max_elements) + ", max-target=" + std::to_string(g.max_target) +
           ", max-invariant-elements=" + std::to_string(g.max_invariant_elements);
}

ordered_json labels_json(const std::vector<Label>& ls) { return ordered_json(ls); }

ordered_json certificate_json(const MinorCertificate& c) {
    ordered_json j;
    j["contract"] = labels_json(c.contract);
    j["delete"] = labels_json(c.del);
    ordered_json iso = ordered_json::object();
    for (const auto& [k, v] : c.iso) iso[k] = v;
    j["iso"] = iso;
    return j;
}

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = g.num_vertices;
    ordered_json es = ordered_json::array();
    for (const auto& e : g.edges) es.push_back({e.u, e.v, e.label});
    j["edges"] = es;
    return j;
}

ordered_json matroid_json(const BinaryMatroid& m) {
    ordered_json j;
    j["name"] = m.name;
    j["elements"] = m.size();
    j["rank"] = m.rank();
    return j;
}

Family parse_family(const std::string& list) {
    Family f;
    std::istringstream in(list);
    std::string k;
    while (std::getline(in, k, ',')) {
        auto t = parse_kuratowski(k);
        if (!t) throw CLI::ValidationError("family", "unknown family key '" + k + "' (expected K33, K5, K33d, K5d)");
        f.push_back(*t);
    }
    f = normalize_family(f);
    if (std::find(f.begin(), f.end(), Kuratowski::K33) == f.end() &&
        std::find(f.begin(), f.end(), Kuratowski::K33d) == f.end())
        throw CLI::ValidationError("family", "family must contain K33 or K33d");
    return f;
}

ordered_json family_json(const Family& f) {
    ordered_json j = ordered_json::array();
    for (auto k : f) j.push_back(to_string(k));
    return j;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_decide(const Globals& g, const std::string& file, const std::string& keys) {
    BinaryMatroid m = read_bmx(file);
    Family f = parse_family(keys);
    DecideOptions opt;
    opt.minor = minor_opts(g);
    opt.recognition.max_star_rank = g.max_star_rank;
    opt.jobs = g.jobs;
    Decision d = decide_minor_in(m, f, opt);
    ordered_json j;
    j["command"] = "decide";
    j["input"] = matroid_json(m);
    j["family"] = family_json(f);
    j["member"] = !d.has_minor;
    j["has_minor"] = d.has_minor;
    j["target"] = d.target ? ordered_json(to_string(*d.target)) : ordered_json(nullptr);
    j["certificate"] = d.certificate ? certificate_json(*d.certificate) : ordered_json(nullptr);
    j["dualized"] = d.dualized;
    j["pieces"] = d.pieces;
    j["leaves"] = d.leaves;
    j["reason"] = d.reason;
    if (g.verify) {
        ordered_json v;
        if (d.certificate && d.target) {
            v["certificate"] = verify_minor_certificate(m, kuratowski_matroid(*d.target), *d.certificate);
        } else {
            v["certificate"] = nullptr;
        }
        // Replay the answer against the direct search on each target.
        bool any = false;
        bool complete = true;
        for (auto k : f) {
            try {
                if (has_minor_reduced(m, kuratowski_matroid(k), minor_opts(g))) any = true;
            } catch (const GuardExceeded&) {
                complete = false;
            }
        }
        v["oracle"] = complete || any ? ordered_json(any == d.has_minor) : ordered_json("skipped: guard exceeded");
        j["verify"] = v;
    }
    print(j);
    return kExitDecided;
}

ordered_json tree_json(const DecompNode& t) {
    ordered_json j;
    j["elements"] = t.matroid.size();
    j["rank"] = t.matroid.rank();
    j["sum_triangle"] = t.sum_triangle ? labels_json(*t.sum_triangle) : ordered_json(nullptr);
    j["shifted"] = labels_json(t.shifted);
    ordered_json ch = ordered_json::array();
    for (const auto& c : t.children) ch.push_back(tree_json(c));
    j["children"] = ch;
    return j;
}

int cmd_decompose(const Globals& g, const std::string& file) {
    BinaryMatroid m = read_bmx(file);
    ordered_json j;
    j["command"] = "decompose";
    j["input"] = matroid_json(m);
    j["rank_one_flats"] = num_rank_one_flats(m);
    ordered_json pieces = ordered_json::array();
    bool all_ok = true;
    for (const auto& p : three_connected_pieces(m)) {
        ordered_json pj;
        pj["elements"] = p.size();
        pj["rank"] = p.rank();
        pj["labels"] = labels_json(p.labels());
        DecompNode tree = build_tree(p, {});
        ordered_json ls = ordered_json::array();
        for (const auto& leaf : leaves(tree)) {
            ordered_json lj;
            lj["elements"] = leaf.matroid.size();
            lj["rank"] = leaf.matroid.rank();
            lj["labels"] = labels_json(leaf.matroid.labels());
            ordered_json ts = ordered_json::array();
            for (const auto& t : leaf.triangles) ts.push_back(labels_json(t));
            lj["triangles"] = ts;
            ls.push_back(lj);
        }
        pj["leaf_count"] = ls.size();
        pj["leaves"] = ls;
        pj["tree"] = tree_json(tree);
        if (g.verify) {
            bool ok = recompose(tree).same_matroid(p);
            all_ok = all_ok && ok;
            pj["recomposes"] = ok;
        }
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    if (g.verify) j["verify"] = {{"recomposition", all_ok}};
    print(j);
    return kExitDecided;
}

int cmd_classify(const Globals& g, const std::string& file, const std::string& keys) {
    BinaryMatroid m = read_bmx(file);
    Family f = parse_family(keys);
    BinaryMatroid si = simplify(m).matroid;
    if (!is_internally_4connected(si))
        throw std::invalid_argument("classify expects a matroid whose simplification is internally 4-connected");
    RecognitionOptions ro;
    ro.max_star_rank = g.max_star_rank;
    ClassVerdict v = classify_i4c(si, f, ro, minor_opts(g));
    ordered_json j;
    j["command"] = "classify";
    j["input"] = matroid_json(m);
    j["family"] = family_json(f);
    j["member"] = v.member();
    j["verdict"] = to_string(v.kind);
    j["description"] = v.describe();
    j["rank"] = v.rank;
    j["key"] = v.key;
    j["graph"] = v.graph ? graph_json(*v.graph) : ordered_json(nullptr);
    ordered_json iso = ordered_json::object();
    for (const auto& [k, val] : v.iso) iso[k] = val;
    j["iso"] = iso;
    j["witness_target"] = v.witness_target ? ordered_json(to_string(*v.witness_target)) : ordered_json(nullptr);
    j["witness"] = v.witness ? certificate_json(*v.witness) : ordered_json(nullptr);
    if (g.verify) j["verify"] = {{"verdict", verify_verdict(si, v)}};
    print(j);
    return kExitDecided;
}

std::string word_bits(Word w, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += ((w >> i) & 1u) ? '1' : '0';
    return s;
}

int cmd_critical(const Globals& g, const std::string& file) {
    BinaryMatroid m = read_bmx(file);
    CriticalExponent c = critical_exponent(m);
    ordered_json j;
    j["command"] = "critical";
    j["input"] = matroid_json(m);
    j["exponent"] = c.exponent;
    ordered_json fs = ordered_json::array();
    for (Word w : c.functionals) fs.push_back(word_bits(w, m.rank()));
    j["functionals"] = fs;
    if (g.verify) {
        ordered_json v;
        v["functionals_separate"] = functionals_separate(m, c.functionals);
        try {
            IntPolynomial chi = characteristic_polynomial(m, {g.max_invariant_elements});
            v["matches_characteristic_polynomial"] = critical_exponent_from_chi(chi) == c.exponent;
        } catch (const GuardExceeded&) {
            v["matches_characteristic_polynomial"] = "skipped: guard exceeded";
        }
        j["verify"] = v;
    }
    print(j);
    return kExitDecided;
}

ordered_json poly_json(const IntPolynomial& p) {
    ordered_json cs = ordered_json::array();
    for (const auto& c : p.coeffs) cs.push_back(c.str());
    return cs;
}

int cmd_charpoly(const Globals& g, const std::string& file) {
    BinaryMatroid m = read_bmx(file);
    InvariantOptions io{g.max_invariant_elements};
    IntPolynomial chi = characteristic_polynomial(m, io);
    ordered_json j;
    j["command"] = "charpoly";
    j["input"] = matroid_json(m);
    j["polynomial"] = chi.str();
    j["coefficients"] = poly_json(chi);
    if (g.verify) {
        try {
            j["verify"] = {{"matches_tutte", characteristic_from_tutte(tutte_polynomial(m, io), m.rank()).coeffs == chi.coeffs}};
        } catch (const GuardExceeded&) {
            j["verify"] = {{"matches_tutte", "skipped: guard exceeded"}};
        }
    }
    print(j);
    return kExitDecided;
}

int cmd_catalog_list() {
    for (const auto& k : catalog_keys()) {
        if (k.find('<') != std::string::npos) {
            std::cout << k << "\tparametric\n";
            continue;
        }
        BinaryMatroid m = named(k);
        std::cout << k << "\trank " << m.rank() << "\telements " << m.size() << (is_sporadic_key(k) ? "\tsporadic" : "")
                  << "\n";
    }
    return kExitDecided;
}

int cmd_catalog_show(const std::string& key) {
    std::cout << emit_bmx(named(key));
    return kExitDecided;
}

int cmd_extremal(const Globals& g, int r) {
    if (r < 1 || r > 20) throw std::invalid_argument("extremal: rank must be in [1, 20]");
    BinaryMatroid p = build_pr(r);
    ordered_json j;
    j["command"] = "extremal";
    j["rank"] = r;
    j["f"] = f(r);
    j["alpha"] = alpha(r).str();
    j["pr_steps"] = pr_steps(r);
    j["pr_elements"] = p.size();
    j["pr_rank"] = p.rank();
    if (g.verify) {
        ordered_json v;
        v["size_matches"] = p.size() == f(r) && p.rank() == r;
        try {
            v["no_k33_minor"] = verify_no_k33_minor_pr(r, {}, minor_opts(g));
        } catch (const GuardExceeded&) {
            v["no_k33_minor"] = "skipped: guard exceeded";
        }
        j["verify"] = v;
    }
    print(j);
    return kExitDecided;
}

int cmd_verify_paper(const Globals& g) {
    auto rs = run_minor_facts(minor_opts(g));
    int passed = 0;
    for (const auto& r : rs) {
        std::ostringstream sec;
        sec.precision(2);
        sec << std::fixed << r.seconds;
        std::cout << "(" << r.id << ") " << (r.passed ? "PASS" : "FAIL") << "  " << r.statement << "  [" << r.observed
                  << "; " << sec.str() << "s]\n";
        passed += r.passed;
    }
    std::cout << passed << "/" << rs.size() << " checks pass\n";
    return passed == static_cast<int>(rs.size()) ? kExitDecided : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide and analyze excluded Kuratowski minors of binary matroids"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--max-elements", g.max_elements, "Guard on instance size for exact minor search (0 = off)");
    app.add_option("--max-target", g.max_target, "Guard on target size for exact minor search");
    app.add_option("--max-star-rank", g.max_star_rank, "Guard on cocycle enumeration in graph realization");
    app.add_option("--max-invariant-elements", g.max_invariant_elements, "Guard on polynomial invariant computation");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--verify", g.verify, "Replay every certificate in the output");

    std::string file;
    std::string family;

    auto* decide = app.add_subcommand("decide", "Decide whether FILE has a minor in the excluded family");
    decide->add_option("--exclude", family, "Comma-separated family keys")->required();
    decide->add_option("file", file, "Matroid in .bmx format")->required();

    auto* decompose = app.add_subcommand("decompose", "Split into 3-connected pieces and build decomposition trees");
    decompose->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "Classify an internally 4-connected matroid against a family");
    classify->add_option("--family", family, "Comma-separated family keys")->required();
    classify->add_option("file", file)->required();

    auto* critical = app.add_subcommand("critical", "Critical exponent over GF(2) with separating functionals");
    critical->add_option("file", file)->required();

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial");
    charpoly->add_option("file", file)->required();

    auto* catalog = app.add_subcommand("catalog", "Named matroids");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List catalog keys");
    std::string key;
    auto* show = catalog->add_subcommand("show", "Print a catalog member as .bmx");
    show->add_option("key", key)->required();

    int rank = 0;
    auto* extremal = app.add_subcommand("extremal", "Extremal size function and the P_r construction");
    extremal->add_option("--rank", rank)->required();

    auto* verify_paper = app.add_subcommand("verify-paper", "Run the seven excluded-minor facts and print a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*decide) return cmd_decide(g, file, family);
        if (*decompose) return cmd_decompose(g, file);
        if (*classify) return cmd_classify(g, file, family);
        if (*critical) return cmd_critical(g, file);
        if (*charpoly) return cmd_charpoly(g, file);
        if (*list) return cmd_catalog_list();
        if (*show) return cmd_catalog_show(key);
        if (*extremal) return cmd_extremal(g, rank);
        if (*verify_paper) return cmd_verify_paper(g);
    } catch (const ParseError& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return kExitError;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded (" << limits(g) << "): " << e.what() << "\n";
        return kExitGuard;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
