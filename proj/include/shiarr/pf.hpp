#pragma once

// Parking functions, k-parking functions, the cyclic coset structure on
// Z_{kn+1}^n, and the repeat-condition that characterizes which parking
// functions survive restriction to a graph.

#include <set>
#include <utility>
#include <vector>

#include "shiarr/errors.hpp"

namespace shiarr {

// Undirected simple graph on vertices 1..n, edges stored as pairs i < j.
struct SimpleGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;

    SimpleGraph() = default;
    SimpleGraph(int n_, std::set<std::pair<int, int>> edges_);

    static SimpleGraph complete(int n);
    static SimpleGraph empty_graph(int n);
    static SimpleGraph path(int n);  // edges {1,2},{2,3},...,{n-1,n}

    bool has_edge(int i, int j) const;
    bool operator==(const SimpleGraph&) const = default;
};

// Sequence (a_1..a_n) over [n] whose sorted rearrangement b satisfies b_i <= i.
struct ParkingFunction {
    int n = 0;
    std::vector<int> values;

    ParkingFunction() = default;
    explicit ParkingFunction(std::vector<int> values_);  // validates

    bool operator==(const ParkingFunction&) const = default;
    bool operator<(const ParkingFunction& o) const { return values < o.values; }
};

// Positive sequence whose sorted rearrangement satisfies b_i <= 1 + k(i-1).
// k = 1 is exactly ParkingFunction.
struct KParkingFunction {
    int n = 0;
    int k = 1;
    std::vector<int> values;

    KParkingFunction() = default;
    KParkingFunction(int k_, std::vector<int> values_);  // validates

    ParkingFunction as_parking() const;  // requires k == 1
    bool operator==(const KParkingFunction&) const = default;
    bool operator<(const KParkingFunction& o) const { return values < o.values; }
};

// Element of Z_{kn+1}^n, entries reduced to 0..kn.
struct CosetVector {
    int n = 0;
    int k = 1;
    std::vector<int> entries;

    CosetVector() = default;
    CosetVector(int k_, std::vector<int> entries_);  // reduces mod kn+1
    int modulus() const { return k * n + 1; }

    bool operator==(const CosetVector&) const = default;
};

// True iff the sorted rearrangement of values meets b_i <= 1 + k(i-1).
// Throws InvalidInput on an empty sequence or nonpositive entries.
bool is_k_parking(const std::vector<int>& values, int k);

// All k-parking functions on [n] in lexicographic order of the value sequence.
std::vector<KParkingFunction> enumerate_k_parking(int n, int k);

// The unique member of v + <(1,...,1)> whose entries, read through the
// residue range {1,...,k(n-1)+1}, form a k-parking function. Exactly one
// member qualifies; anything else is reported as an internal error.
KParkingFunction coset_representative(const CosetVector& v);

// For every i, the nearest later index j with a_j = a_i must be a g-edge.
bool satisfies_graph_condition(const std::vector<int>& values, const SimpleGraph& g);

// Same condition with the offending pair reported, for error messages.
// Returns {0,0} when the condition holds.
std::pair<int, int> graph_condition_violation(const std::vector<int>& values,
                                              const SimpleGraph& g);

}  // namespace shiarr
