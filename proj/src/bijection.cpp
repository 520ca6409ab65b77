#include "shiarr/bijection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace shiarr {

namespace {

struct ChainUF {
    std::vector<int> parent;
    explicit ChainUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// --- shared insertion machinery ------------------------------------------
//
// Elements are ids into a flat table; chains are id sequences placed one at
// a time. Arcs join consecutive ids of a chain; containment is checked on
// the current left-to-right order, which later insertions cannot disturb
// (they never reorder already-placed ids).

using IdWord = std::vector<int>;
using IdArc = std::pair<int, int>;

bool containment_free(const IdWord& word, const std::vector<IdArc>& arcs) {
    std::map<int, int> pos;
    for (size_t p = 0; p < word.size(); ++p) pos[word[p]] = (int)p;
    std::vector<std::pair<int, int>> spans;
    spans.reserve(arcs.size());
    for (const auto& [a, b] : arcs) {
        auto ia = pos.find(a), ib = pos.find(b);
        if (ia == pos.end() || ib == pos.end()) continue;  // chain not placed yet
        spans.push_back({ia->second, ib->second});
    }
    for (size_t a = 0; a < spans.size(); ++a)
        for (size_t b = 0; b < spans.size(); ++b)
            if (a != b && spans[a].first <= spans[b].first && spans[b].second <= spans[a].second)
                return false;
    return true;
}

void extend_placements(const IdWord& word, const std::vector<int>& chain, size_t next,
                       int min_index, std::vector<IdWord>& out) {
    if (next == chain.size()) {
        out.push_back(word);
        return;
    }
    for (int at = min_index; at <= (int)word.size(); ++at) {
        IdWord extended = word;
        extended.insert(extended.begin() + at, chain[next]);
        extend_placements(extended, chain, next + 1, at + 1, out);
    }
}

// Insert each chain with its leftmost element at the given 1-based position
// and the rest to the right, keeping all arcs containment-free. The paper's
// construction promises a unique choice at every step.
IdWord place_chains(const std::vector<std::vector<int>>& chains,
                    const std::vector<int>& insert_at, std::vector<IdArc>& arcs_out) {
    IdWord word;
    std::vector<IdArc> arcs;
    for (size_t c = 0; c < chains.size(); ++c) {
        const auto& chain = chains[c];
        const int at = insert_at[c] - 1;
        if (at < 0 || at > (int)word.size())
            throw InternalInvariantError("chain insertion position out of range");
        IdWord seeded = word;
        seeded.insert(seeded.begin() + at, chain[0]);

        for (size_t t = 1; t < chain.size(); ++t) arcs.push_back({chain[t - 1], chain[t]});

        std::vector<IdWord> candidates;
        extend_placements(seeded, chain, 1, at + 1, candidates);
        std::vector<IdWord> valid;
        for (auto& cand : candidates)
            if (containment_free(cand, arcs)) valid.push_back(std::move(cand));
        if (valid.size() != 1)
            throw InternalInvariantError("trailing chain placement not unique: " +
                                         std::to_string(valid.size()) + " candidates survive");
        word = std::move(valid.front());
    }
    arcs_out = std::move(arcs);
    return word;
}

}  // namespace

ParkingFunction parking_from_diagram(const Diagram& d) {
    if (auto flaw = diagram_flaw(d)) throw InvalidInput("invalid diagram: " + *flaw);
    ChainUF uf(d.n + 1);
    for (const auto& [i, j] : d.arcs) uf.unite(i, j);

    std::vector<int> pos(d.n + 1, 0);
    for (int p = 0; p < d.n; ++p) pos[d.word[p]] = p + 1;
    std::vector<int> chain_min(d.n + 1, 0);
    for (int v = 1; v <= d.n; ++v) {
        int root = uf.find(v);
        if (chain_min[root] == 0) chain_min[root] = v;  // v ascending, first hit is the min
    }

    std::vector<int> values(d.n);
    for (int i = 1; i <= d.n; ++i) values[i - 1] = pos[chain_min[uf.find(i)]];
    return ParkingFunction(std::move(values));
}

Diagram diagram_from_parking(const ParkingFunction& f) {
    return diagram_from_parking(f, SimpleGraph::complete(f.n));
}

Diagram diagram_from_parking(const ParkingFunction& f, const SimpleGraph& g) {
    if (g.n != f.n) throw InvalidInput("graph order differs from sequence length");
    if (auto [i, j] = graph_condition_violation(f.values, g); i != 0)
        throw InvalidInput("parking function repeats value at non-edge {" + std::to_string(i) +
                           "," + std::to_string(j) + "}");

    // Value classes, visited in increasing f-value, become the chains.
    std::map<int, std::vector<int>> classes;
    for (int i = 1; i <= f.n; ++i) classes[f.values[i - 1]].push_back(i);

    std::vector<std::vector<int>> chains;
    std::vector<int> insert_at;
    for (const auto& [value, members] : classes) {
        chains.push_back(members);  // already increasing
        insert_at.push_back(value);
    }

    std::vector<IdArc> arcs;
    IdWord word = place_chains(chains, insert_at, arcs);
    return Diagram(word, {arcs.begin(), arcs.end()});
}

KParkingFunction parking_from_kdiagram(const KDiagram& d) {
    if (auto flaw = diagram_flaw(d)) throw InvalidInput("invalid diagram: " + *flaw);
    const int len = (int)d.word.size();
    ChainUF uf(len);
    for (const auto& [p, q] : d.arcs) uf.unite(p - 1, q - 1);

    std::vector<int> chain_leftmost(len, -1);
    for (int p = len - 1; p >= 0; --p) chain_leftmost[uf.find(p)] = p + 1;

    std::vector<int> values(d.n, 0);
    for (int p = 0; p < len; ++p) {
        const int v = d.word[p];
        values[v - 1] = chain_leftmost[uf.find(p)];
    }
    return KParkingFunction(d.k, std::move(values));
}

KDiagram kdiagram_from_parking(const KParkingFunction& f) {
    // Chain for value j holds k copies of every r with a_r = j, increasing.
    std::map<int, std::vector<int>> classes;
    for (int r = 1; r <= f.n; ++r) classes[f.values[r - 1]].push_back(r);

    // Ids encode (value r, copy index); value_of[] recovers r.
    std::vector<int> value_of(f.n * f.k + 1, 0);
    std::vector<std::vector<int>> chains;
    std::vector<int> insert_at;
    for (const auto& [value, members] : classes) {
        std::vector<int> chain;
        for (int r : members)
            for (int copy = 0; copy < f.k; ++copy) {
                int id = (r - 1) * f.k + copy + 1;
                value_of[id] = r;
                chain.push_back(id);
            }
        chains.push_back(std::move(chain));
        insert_at.push_back(value);
    }

    std::vector<IdArc> arcs;
    IdWord id_word = place_chains(chains, insert_at, arcs);

    std::map<int, int> pos;
    for (size_t p = 0; p < id_word.size(); ++p) pos[id_word[p]] = (int)p + 1;
    std::vector<int> word;
    word.reserve(id_word.size());
    for (int id : id_word) word.push_back(value_of[id]);
    std::set<std::pair<int, int>> position_arcs;
    for (const auto& [a, b] : arcs) position_arcs.insert({pos[a], pos[b]});
    return KDiagram(f.k, std::move(word), std::move(position_arcs));
}

}  // namespace shiarr
