#include "bmat/bmx.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bmat {

namespace {

struct Line {
    int number;
    std::string text;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Column (1-based) where the keyword's argument starts.
int arg_column(const std::string& raw, const std::string& key) {
    auto p = raw.find(key);
    auto q = raw.find_first_not_of(" \t", p + key.size());
    return static_cast<int>((q == std::string::npos ? raw.size() : q) + 1);
}

}  // namespace

BinaryMatroid parse_bmx(const std::string& text) {
    std::vector<Line> lines;
    std::vector<std::string> raw;
    {
        std::istringstream in(text);
        std::string s;
        int n = 0;
        while (std::getline(in, s)) {
            ++n;
            raw.push_back(s);
            std::string t = trim(s);
            if (t.empty() || t[0] == '#') continue;
            lines.push_back({n, s});
        }
    }
    std::size_t at = 0;
    auto keyword = [&](const Line& l) {
        std::istringstream is(l.text);
        std::string k;
        is >> k;
        return k;
    };
    std::string name;
    if (at < lines.size() && keyword(lines[at]) == "name") {
        std::string t = trim(lines[at].text);
        name = trim(t.substr(4));
        ++at;
    }
    if (at >= lines.size()) throw ParseError(static_cast<int>(raw.size()) + 1, 1, "missing rank header");
    const Line& rl = lines[at];
    if (keyword(rl) != "rank") throw ParseError(rl.number, 1, "expected 'rank <r>'");
    int rank = -1;
    {
        std::istringstream is(trim(rl.text).substr(4));
        std::string tok, extra;
        is >> tok >> extra;
        bool digits = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos && tok.size() <= 2;
        if (!digits || !extra.empty()) throw ParseError(rl.number, arg_column(rl.text, "rank"), "rank must be an integer");
        rank = std::stoi(tok);
        if (rank > 64) throw ParseError(rl.number, arg_column(rl.text, "rank"), "rank exceeds 64");
    }
    ++at;
    if (at >= lines.size()) throw ParseError(rl.number + 1, 1, "missing labels line");
    const Line& ll = lines[at];
    if (keyword(ll) != "labels") throw ParseError(ll.number, 1, "expected 'labels ...'");
    std::vector<Label> labels;
    {
        std::istringstream is(trim(ll.text).substr(6));
        std::string tok;
        std::set<std::string> seen;
        while (is >> tok) {
            if (!seen.insert(tok).second) {
                auto p = ll.text.find(" " + tok);
                throw ParseError(ll.number, static_cast<int>(p == std::string::npos ? 1 : p + 2), "duplicate label '" + tok + "'");
            }
            labels.push_back(tok);
        }
    }
    ++at;
    const std::size_t n = labels.size();
    std::vector<Word> cols(n, 0);
    for (int i = 0; i < rank; ++i, ++at) {
        if (at >= lines.size())
            throw ParseError(static_cast<int>(raw.size()) + 1, 1,
                             "expected " + std::to_string(rank) + " matrix rows, found " + std::to_string(i));
        const Line& l = lines[at];
        std::size_t c = 0;
        for (std::size_t k = 0; k < l.text.size(); ++k) {
            char ch = l.text[k];
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch != '0' && ch != '1') throw ParseError(l.number, static_cast<int>(k + 1), std::string("unexpected character '") + ch + "'");
            if (c >= n) throw ParseError(l.number, static_cast<int>(k + 1), "row has more entries than labels");
            if (ch == '1') cols[c] |= bit(i);
            ++c;
        }
        if (c != n)
            throw ParseError(l.number, static_cast<int>(l.text.size() + 1),
                             "row has " + std::to_string(c) + " entries, expected " + std::to_string(n));
    }
    if (at < lines.size()) throw ParseError(lines[at].number, 1, "unexpected content after the matrix rows");
    BinaryMatroid m = BinaryMatroid::from_columns(labels, cols);
    if (m.rank() != rank)
        throw ParseError(rl.number, arg_column(rl.text, "rank"),
                         "declared rank " + std::to_string(rank) + " but the rows have rank " + std::to_string(m.rank()));
    m.name = name;
    return m;
}

BinaryMatroid read_bmx(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_bmx(ss.str());
}

std::string emit_bmx(const BinaryMatroid& m) {
    std::ostringstream os;
    if (!m.name.empty()) os << "name " << m.name << "\n";
    os << "rank " << m.rank() << "\nlabels";
    for (const auto& l : m.labels()) os << " " << l;
    os << "\n";
    for (int i = 0; i < m.rank(); ++i) {
        for (int e = 0; e < m.size(); ++e) os << ((m.column(e) >> i) & 1u ? '1' : '0');
        os << "\n";
    }
    return os.str();
}

}  // namespace bmat
