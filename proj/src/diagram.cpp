#include "shiarr/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shiarr {

namespace {

// Word shape checks; arc structure is validate_diagram's job.
void check_permutation_word(const std::vector<int>& word) {
    const int n = (int)word.size();
    if (n == 0) throw InvalidInput("empty word");
    std::vector<bool> seen(n + 1, false);
    for (int v : word) {
        if (v < 1 || v > n || seen[v]) throw InvalidInput("word is not a permutation of [n]");
        seen[v] = true;
    }
}

void check_multiset_word(const std::vector<int>& word, int n, int k) {
    std::vector<int> count(n + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n) throw InvalidInput("word value out of range");
        ++count[v];
    }
    for (int v = 1; v <= n; ++v)
        if (count[v] != k) throw InvalidInput("word must hold exactly k copies of each value");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool span_contains(std::pair<int, int> outer, std::pair<int, int> inner) {
    return outer.first <= inner.first && inner.second <= outer.second;
}

}  // namespace

Diagram::Diagram(std::vector<int> word_, std::set<std::pair<int, int>> arcs_)
    : n((int)word_.size()), word(std::move(word_)), arcs(std::move(arcs_)) {
    check_permutation_word(word);
    for (const auto& [i, j] : arcs) {
        if (i < 1 || j > n) throw InvalidInput("arc value out of range");
        if (i >= j) throw InvalidInput("arc values must satisfy i < j");
    }
}

int Diagram::position(int value) const {
    for (int p = 0; p < n; ++p)
        if (word[p] == value) return p + 1;
    throw InvalidInput("value not in word");
}

KDiagram::KDiagram(int k_, std::vector<int> word_, std::set<std::pair<int, int>> arcs_)
    : k(k_), word(std::move(word_)), arcs(std::move(arcs_)) {
    if (k < 1) throw InvalidInput("k must be positive");
    if (word.empty() || (int)word.size() % k != 0) throw InvalidInput("word length must be kn");
    n = (int)word.size() / k;
    check_multiset_word(word, n, k);
    for (const auto& [p, q] : arcs) {
        if (p < 1 || q > (int)word.size()) throw InvalidInput("arc position out of range");
        if (p >= q) throw InvalidInput("arc positions must satisfy p < q");
    }
}

std::optional<std::string> diagram_flaw(const Diagram& d) {
    std::map<int, int> pos;
    for (int p = 0; p < d.n; ++p) pos[d.word[p]] = p + 1;

    std::vector<std::pair<int, int>> spans;
    std::vector<int> out_deg(d.n + 1, 0), in_deg(d.n + 1, 0);
    for (const auto& [i, j] : d.arcs) {
        if (pos[i] >= pos[j]) return "arc (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") does not go rightwards";
        spans.push_back({pos[i], pos[j]});
        if (++out_deg[i] > 1) return "value " + std::to_string(i) + " has two outgoing arcs";
        if (++in_deg[j] > 1) return "value " + std::to_string(j) + " has two incoming arcs";
    }
    for (size_t a = 0; a < spans.size(); ++a)
        for (size_t b = 0; b < spans.size(); ++b)
            if (a != b && span_contains(spans[a], spans[b]))
                return "arc span [" + std::to_string(spans[a].first) + "," +
                       std::to_string(spans[a].second) + "] contains another arc";
    // Chains increase automatically: arcs join smaller to larger values and
    // every element carries at most one arc in each direction.
    return std::nullopt;
}

std::optional<std::string> diagram_flaw(const KDiagram& d) {
    const int len = (int)d.word.size();
    std::vector<std::pair<int, int>> spans(d.arcs.begin(), d.arcs.end());
    std::vector<int> out_deg(len + 1, 0), in_deg(len + 1, 0);
    for (const auto& [p, q] : d.arcs) {
        if (d.word[p - 1] > d.word[q - 1])
            return "chain decreases along arc (" + std::to_string(p) + "," + std::to_string(q) + ")";
        if (++out_deg[p] > 1) return "position " + std::to_string(p) + " has two outgoing arcs";
        if (++in_deg[q] > 1) return "position " + std::to_string(q) + " has two incoming arcs";
    }
    for (size_t a = 0; a < spans.size(); ++a)
        for (size_t b = 0; b < spans.size(); ++b)
            if (a != b && span_contains(spans[a], spans[b]))
                return "arc span [" + std::to_string(spans[a].first) + "," +
                       std::to_string(spans[a].second) + "] contains another arc";

    UnionFind uf(len);
    for (const auto& [p, q] : d.arcs) uf.unite(p - 1, q - 1);
    std::vector<int> value_chain(d.n + 1, -1);
    for (int p = 0; p < len; ++p) {
        const int v = d.word[p];
        const int root = uf.find(p);
        if (value_chain[v] == -1) value_chain[v] = root;
        else if (value_chain[v] != root)
            return "copies of value " + std::to_string(v) + " sit in different chains";
    }
    return std::nullopt;
}

bool validate_diagram(const Diagram& d) { return !diagram_flaw(d).has_value(); }
bool validate_diagram(const KDiagram& d) { return !diagram_flaw(d).has_value(); }

ChainPartition chain_partition(const Diagram& d) {
    if (auto flaw = diagram_flaw(d)) throw InvalidInput("invalid diagram: " + *flaw);
    UnionFind uf(d.n + 1);
    for (const auto& [i, j] : d.arcs) uf.unite(i, j);

    std::map<int, int> pos;
    for (int p = 0; p < d.n; ++p) pos[d.word[p]] = p + 1;

    std::map<int, std::vector<int>> by_root;
    for (int v = 1; v <= d.n; ++v) by_root[uf.find(v)].push_back(v);

    std::vector<std::pair<int, std::vector<int>>> ordered;
    for (auto& [root, values] : by_root) {
        std::sort(values.begin(), values.end());
        int leftmost = pos[values.front()];
        ordered.push_back({leftmost, values});
    }
    std::sort(ordered.begin(), ordered.end());

    ChainPartition cp;
    for (auto& [left, values] : ordered) cp.blocks.push_back(std::move(values));
    return cp;
}

ChainPartition chain_partition(const KDiagram& d) {
    if (auto flaw = diagram_flaw(d)) throw InvalidInput("invalid diagram: " + *flaw);
    const int len = (int)d.word.size();
    UnionFind uf(len);
    for (const auto& [p, q] : d.arcs) uf.unite(p - 1, q - 1);

    std::map<int, std::vector<int>> by_root;  // positions in increasing order
    for (int p = 0; p < len; ++p) by_root[uf.find(p)].push_back(p);

    std::vector<std::pair<int, std::vector<int>>> ordered;
    for (auto& [root, positions] : by_root) {
        std::vector<int> values;
        for (int p : positions) values.push_back(d.word[p]);
        ordered.push_back({positions.front() + 1, std::move(values)});
    }
    std::sort(ordered.begin(), ordered.end());

    ChainPartition cp;
    for (auto& [left, values] : ordered) cp.blocks.push_back(std::move(values));
    return cp;
}

std::vector<std::pair<int, int>> prune_spans(const std::vector<std::pair<int, int>>& spans) {
    std::vector<std::pair<int, int>> kept;
    for (size_t a = 0; a < spans.size(); ++a) {
        bool contains_other = false;
        for (size_t b = 0; b < spans.size() && !contains_other; ++b)
            if (a != b && span_contains(spans[a], spans[b])) contains_other = true;
        if (!contains_other) kept.push_back(spans[a]);
    }
    return kept;
}

Diagram prune_containments(std::vector<int> word,
                           const std::set<std::pair<int, int>>& raw_arcs) {
    check_permutation_word(word);
    std::map<int, int> pos;
    for (size_t p = 0; p < word.size(); ++p) pos[word[p]] = (int)p + 1;

    std::vector<std::pair<int, int>> spans;
    std::map<std::pair<int, int>, std::pair<int, int>> arc_of_span;
    for (const auto& [i, j] : raw_arcs) {
        if (i < 1 || j > (int)word.size() || i >= j) throw InvalidInput("bad raw arc");
        if (pos[i] >= pos[j]) throw InvalidInput("raw arc not rightward");
        spans.push_back({pos[i], pos[j]});
        arc_of_span[{pos[i], pos[j]}] = {i, j};
    }

    std::set<std::pair<int, int>> kept;
    for (const auto& span : prune_spans(spans)) kept.insert(arc_of_span[span]);
    return Diagram(std::move(word), std::move(kept));
}

namespace {

std::string render(const std::vector<int>& word, const std::vector<std::pair<int, int>>& spans) {
    std::vector<int> col(word.size() + 1, 0);
    std::string line;
    for (size_t p = 0; p < word.size(); ++p) {
        if (!line.empty()) line += ' ';
        col[p + 1] = (int)line.size();
        line += std::to_string(word[p]);
    }

    // Pack arcs into rows; arcs may share a column only at a common endpoint.
    std::vector<std::pair<int, int>> sorted = spans;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<std::pair<int, int>>> rows;
    std::vector<int> row_end;
    for (const auto& s : sorted) {
        size_t r = 0;
        while (r < rows.size() && row_end[r] > s.first) ++r;
        if (r == rows.size()) { rows.push_back({}); row_end.push_back(0); }
        rows[r].push_back(s);
        row_end[r] = s.second;
    }

    std::string out = line;
    for (const auto& row : rows) {
        std::string art(line.size(), ' ');
        for (const auto& [p, q] : row) {
            for (int c = col[p]; c <= col[q]; ++c) art[c] = '-';
            art[col[p]] = '+';
            art[col[q]] = '+';
        }
        while (!art.empty() && art.back() == ' ') art.pop_back();
        out += '\n' + art;
    }
    return out;
}

}  // namespace

std::string render_ascii(const Diagram& d) {
    std::map<int, int> pos;
    for (int p = 0; p < d.n; ++p) pos[d.word[p]] = p + 1;
    std::vector<std::pair<int, int>> spans;
    for (const auto& [i, j] : d.arcs) spans.push_back({pos[i], pos[j]});
    return render(d.word, spans);
}

std::string render_ascii(const KDiagram& d) {
    return render(d.word, {d.arcs.begin(), d.arcs.end()});
}

}  // namespace shiarr
