#include "shiarr/pf.hpp"

#include <algorithm>
#include <string>

namespace shiarr {

SimpleGraph::SimpleGraph(int n_, std::set<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    if (n < 1) throw InvalidInput("graph needs at least one vertex");
    for (const auto& [i, j] : edges) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw InvalidInput("graph edge endpoint out of range");
        if (i >= j) throw InvalidInput("graph edges must be stored as i < j");
    }
}

SimpleGraph SimpleGraph::complete(int n) {
    std::set<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.insert({i, j});
    return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::empty_graph(int n) { return SimpleGraph(n, {}); }

SimpleGraph SimpleGraph::path(int n) {
    std::set<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.insert({i, i + 1});
    return SimpleGraph(n, std::move(e));
}

bool SimpleGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
}

bool is_k_parking(const std::vector<int>& values, int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    if (values.empty()) throw InvalidInput("empty sequence");
    for (int a : values)
        if (a < 1) throw InvalidInput("entries must be positive");
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] > 1 + k * (long long)i) return false;
    return true;
}

ParkingFunction::ParkingFunction(std::vector<int> values_)
    : n((int)values_.size()), values(std::move(values_)) {
    if (!is_k_parking(values, 1)) throw InvalidInput("not a parking function");
}

KParkingFunction::KParkingFunction(int k_, std::vector<int> values_)
    : n((int)values_.size()), k(k_), values(std::move(values_)) {
    if (!is_k_parking(values, k)) throw InvalidInput("not a k-parking function");
}

ParkingFunction KParkingFunction::as_parking() const {
    if (k != 1) throw InvalidInput("k-parking function with k != 1");
    return ParkingFunction(values);
}

std::vector<KParkingFunction> enumerate_k_parking(int n, int k) {
    if (n < 1 || k < 1) throw InvalidInput("n and k must be positive");
    // Values never exceed 1 + k(n-1); run an odometer over that box.
    const int vmax = 1 + k * (n - 1);
    std::vector<KParkingFunction> out;
    std::vector<int> cur(n, 1);
    while (true) {
        if (is_k_parking(cur, k)) out.emplace_back(k, cur);
        int pos = n - 1;
        while (pos >= 0 && cur[pos] == vmax) cur[pos--] = 1;
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

CosetVector::CosetVector(int k_, std::vector<int> entries_)
    : n((int)entries_.size()), k(k_), entries(std::move(entries_)) {
    if (n < 1 || k < 1) throw InvalidInput("coset vector needs n, k >= 1");
    const int m = modulus();
    for (int& e : entries) e = ((e % m) + m) % m;
}

KParkingFunction coset_representative(const CosetVector& v) {
    const int m = v.modulus();
    const int vmax = 1 + v.k * (v.n - 1);  // residue range of k-parking values
    std::vector<KParkingFunction> hits;
    std::vector<int> shifted(v.entries.size());
    for (int t = 0; t < m; ++t) {
        bool in_range = true;
        for (size_t i = 0; i < shifted.size(); ++i) {
            shifted[i] = (v.entries[i] + t) % m;
            if (shifted[i] < 1 || shifted[i] > vmax) in_range = false;
        }
        if (in_range && is_k_parking(shifted, v.k)) hits.emplace_back(v.k, shifted);
    }
    if (hits.size() != 1)
        throw InternalInvariantError("coset holds " + std::to_string(hits.size()) +
                                     " k-parking functions, expected exactly 1");
    return hits.front();
}

std::pair<int, int> graph_condition_violation(const std::vector<int>& values,
                                              const SimpleGraph& g) {
    if ((int)values.size() != g.n) throw InvalidInput("sequence length differs from graph order");
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = i + 1; j < values.size(); ++j) {
            if (values[j] != values[i]) continue;
            if (!g.has_edge((int)i + 1, (int)j + 1)) return {(int)i + 1, (int)j + 1};
            break;  // only the nearest later repeat matters
        }
    }
    return {0, 0};
}

bool satisfies_graph_condition(const std::vector<int>& values, const SimpleGraph& g) {
    return graph_condition_violation(values, g) == std::pair<int, int>{0, 0};
}

}  // namespace shiarr
