#include "bmat/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bmat/composition.hpp"

namespace bmat {

namespace {

struct SporadicEntry {
    const char* key;
    int rank;
    std::vector<const char*> rows;  // rows of A in [I_r | A]
    std::uint64_t checksum;         // FNV-1a over the concatenated rows
};

#include "sporadic_data.inc"

std::uint64_t fnv1a(const std::vector<const char*>& rows) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char* r : rows) {
        for (const char* p = r; *p; ++p) {
            h ^= static_cast<unsigned char>(*p);
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    }
    return h;
}

BinaryMatroid from_table(const SporadicEntry& e) {
    if (fnv1a(e.rows) != e.checksum) throw std::logic_error(std::string("catalog: checksum mismatch for ") + e.key);
    std::vector<std::string> rows(e.rows.begin(), e.rows.end());
    BitMatrix a = BitMatrix::from_rows(rows);
    if (static_cast<int>(a.rows()) != e.rank) throw std::logic_error(std::string("catalog: bad row count for ") + e.key);
    std::vector<Label> ls;
    for (std::size_t i = 0; i < a.rows() + a.cols(); ++i) ls.push_back("x" + std::to_string(i + 1));
    BinaryMatroid m = BinaryMatroid::standard_form(ls, a);
    m.name = e.key;
    return m;
}

BinaryMatroid with_name(BinaryMatroid m, const std::string& n) {
    m.name = n;
    return m;
}

BinaryMatroid t12() {
    // [I6 | A] with A the circulant having ones at i-1, i, i+1.
    BitMatrix a(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int d = -1; d <= 1; ++d) a.set(static_cast<std::size_t>(i), static_cast<std::size_t>((i + d + 6) % 6), true);
    std::vector<Label> ls;
    for (int i = 1; i <= 12; ++i) ls.push_back("x" + std::to_string(i));
    return with_name(BinaryMatroid::standard_form(ls, a), "T12");
}

BinaryMatroid r10() {
    // The ten weight-three vectors of GF(2)^5.
    std::vector<Word> cols;
    std::vector<Label> ls;
    for (Word v = 0; v < 32; ++v)
        if (popcount(v) == 3) {
            cols.push_back(v);
            ls.push_back("x" + std::to_string(cols.size()));
        }
    return with_name(BinaryMatroid::from_columns(ls, cols), "R10");
}

BinaryMatroid k5e() {
    Graph g = complete_graph(5);
    g.edges.pop_back();  // drops edge 34
    return with_name(cycle_matroid(g), "K5e");
}

}  // namespace

std::pair<BinaryMatroid, BinaryMatroid> r12_terms() {
    BinaryMatroid a = k5e();
    BinaryMatroid b = bond_matroid(complete_bipartite(3, 3, "b"));
    // vertex star of vertex 0 in K33 is a triangle of the bond matroid
    b = b.relabeled(std::map<Label, Label>{{"b03", "01"}, {"b04", "02"}, {"b05", "12"}});
    return {a, b};
}

namespace {

BinaryMatroid r12() {
    auto [a, b] = r12_terms();
    return with_name(k_sum(a, b, 3), "R12");
}

int parse_suffix(const std::string& key, const std::string& prefix) {
    if (key.rfind(prefix, 0) != 0 || key.size() == prefix.size()) return -1;
    std::string rest = key.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) || rest.size() > 3) return -1;
    return std::stoi(rest);
}

}  // namespace

BinaryMatroid mobius_triangular(int r) {
    if (r < 3 || r > 64) throw std::invalid_argument("mobius_triangular: rank must be in [3, 64]");
    std::vector<Label> ls;
    std::vector<Word> cs;
    Word er = bit(r - 1);
    for (int i = 1; i <= r; ++i) { ls.push_back("e" + std::to_string(i)); cs.push_back(bit(i - 1)); }
    for (int i = 1; i <= r - 1; ++i) { ls.push_back("a" + std::to_string(i)); cs.push_back(bit(i - 1) | er); }
    for (int i = 1; i <= r - 2; ++i) { ls.push_back("b" + std::to_string(i)); cs.push_back(bit(i - 1) | bit(i)); }
    ls.push_back("b" + std::to_string(r - 1));
    cs.push_back(bit(0) ^ bit(r - 2) ^ er);
    return with_name(BinaryMatroid::from_columns(ls, cs), "Delta" + std::to_string(r));
}

BinaryMatroid mobius_triadic(int r) {
    if (r < 4 || r % 2 || r > 64) throw std::invalid_argument("mobius_triadic: rank must be even and in [4, 64]");
    std::vector<Label> ls;
    std::vector<Word> cs;
    Word er = bit(r - 1);
    for (int i = 1; i <= r; ++i) { ls.push_back("e" + std::to_string(i)); cs.push_back(bit(i - 1)); }
    for (int i = 1; i <= r - 2; ++i) { ls.push_back("c" + std::to_string(i)); cs.push_back(bit(i - 1) | bit(i) | er); }
    ls.push_back("c" + std::to_string(r - 1));
    cs.push_back(bit(0) ^ bit(r - 2) ^ er);
    return with_name(BinaryMatroid::from_columns(ls, cs), "Upsilon" + std::to_string(r));
}

const char* to_string(LadderKind k) { return k == LadderKind::Cubic ? "cubic" : "quartic"; }

Graph mobius_ladder_graph(LadderKind kind, int n) {
    Graph g;
    g.num_vertices = n;
    if (kind == LadderKind::Cubic) {
        if (n < 4 || n % 2) throw std::invalid_argument("mobius_ladder_graph: cubic ladder needs an even vertex count >= 4");
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, "r" + std::to_string(i));
        for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2, "s" + std::to_string(i));
    } else {
        if (n < 5 || n % 2 == 0) throw std::invalid_argument("mobius_ladder_graph: quartic ladder needs an odd vertex count >= 5");
        int h = (n - 1) / 2;
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, "r" + std::to_string(i));
        // each vertex i joins i+h and i+h+1; listing the i -> i+h spokes covers every spoke once
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + h) % n, "s" + std::to_string(i));
    }
    return g;
}

BinaryMatroid pg(int rank) {
    if (rank < 1 || rank > 20) throw std::invalid_argument("pg: rank must be in [1, 20]");
    std::vector<Label> ls;
    std::vector<Word> cs;
    for (Word v = 1; v < (Word{1} << rank); ++v) {
        ls.push_back("p" + std::to_string(v));
        cs.push_back(v);
    }
    return with_name(BinaryMatroid::from_columns(ls, cs), "PG" + std::to_string(rank));
}

BinaryMatroid spike_nr(int r) {
    if (r < 3 || r > 64) throw std::invalid_argument("spike_nr: r must be in [3, 64]");
    std::vector<Label> ls;
    std::vector<Word> cs;
    Word d = r == 64 ? ~Word{0} : (Word{1} << r) - 1;
    for (int i = 1; i <= r; ++i) { ls.push_back("e" + std::to_string(i)); cs.push_back(bit(i - 1)); }
    for (int i = 1; i <= r; ++i) { ls.push_back("d" + std::to_string(i)); cs.push_back(d ^ bit(i - 1)); }
    return with_name(BinaryMatroid::from_columns(ls, cs), "N" + std::to_string(r));
}

const std::vector<std::string>& sporadic_keys() {
    static const std::vector<std::string> keys{
        "MK5", "C11", "M4_11", "C12", "D12", "M4_13", "M4_14", "PG32", "M5_11",
        "T12/e", "M5_12a", "M5_12b", "M5_13", "T12", "M6_13", "M7_15", "M9_18", "M11_21"};
    return keys;
}

bool is_sporadic_key(const std::string& key) {
    const auto& k = sporadic_keys();
    return std::find(k.begin(), k.end(), key) != k.end();
}

BinaryMatroid named(const std::string& key) {
    if (key == "K4") return with_name(cycle_matroid(complete_graph(4)), key);
    if (key == "F7") return with_name(pg(3), key);
    if (key == "F7*") return with_name(pg(3).dual(), key);
    if (key == "MK5") return with_name(cycle_matroid(complete_graph(5)), key);
    if (key == "MK5*") return with_name(bond_matroid(complete_graph(5)), key);
    if (key == "MK33") return with_name(cycle_matroid(complete_bipartite(3, 3)), key);
    if (key == "MK33*") return with_name(bond_matroid(complete_bipartite(3, 3)), key);
    if (key == "K5e") return k5e();
    if (key == "R10") return r10();
    if (key == "R12") return r12();
    if (key == "PG32") return with_name(pg(4), key);
    if (key == "T12") return t12();
    if (key == "T12\\e") return with_name(t12().delete_elements({0}), key);
    if (key == "T12/e") return with_name(t12().contract_elements({0}), key);
    for (const auto& e : kSporadicTable)
        if (key == e.key) return from_table(e);
    int r;
    if ((r = parse_suffix(key, "Delta")) >= 0) return mobius_triangular(r);
    if ((r = parse_suffix(key, "Upsilon")) >= 0) return mobius_triadic(r);
    if ((r = parse_suffix(key, "PG")) >= 0) return pg(r);
    if ((r = parse_suffix(key, "N")) >= 0) return spike_nr(r);
    if ((r = parse_suffix(key, "CML")) >= 0) return with_name(bond_matroid(mobius_ladder_graph(LadderKind::Cubic, r)), key);
    if ((r = parse_suffix(key, "QML")) >= 0) return with_name(bond_matroid(mobius_ladder_graph(LadderKind::Quartic, r)), key);
    throw std::out_of_range("unknown catalog key '" + key + "'");
}

std::vector<std::string> catalog_keys() {
    std::vector<std::string> out{"K4", "F7", "F7*", "MK5", "MK5*", "MK33", "MK33*", "K5e", "R10", "R12", "T12\\e"};
    for (const auto& k : sporadic_keys())
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    for (const char* p : {"Delta<r>", "Upsilon<r>", "PG<r>", "N<r>", "CML<n>", "QML<n>"}) out.push_back(p);
    return out;
}

}  // namespace bmat
