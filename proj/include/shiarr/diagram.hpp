#pragma once

// Arc diagrams indexing arrangement regions: a permutation (or a multiset
// word) with rightward, containment-free arcs. Arc-connected positions
// form chains of increasing values; the chains partition [n] (or the
// multiset {1^k,...,n^k}).

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shiarr/errors.hpp"

namespace shiarr {

// Permutation word of [n]; arcs are value pairs (i,j) with i < j, drawn
// from the position of i to the position of j.
struct Diagram {
    int n = 0;
    std::vector<int> word;
    std::set<std::pair<int, int>> arcs;

    Diagram() = default;
    Diagram(std::vector<int> word_, std::set<std::pair<int, int>> arcs_);

    int position(int value) const;  // 1-based index of value in word
    bool operator==(const Diagram&) const = default;
};

// Word of length kn in which each of 1..n appears exactly k times; values
// repeat, so arcs are stored as 1-based position pairs (p,q) with p < q.
struct KDiagram {
    int n = 0;
    int k = 1;
    std::vector<int> word;
    std::set<std::pair<int, int>> arcs;

    KDiagram() = default;
    KDiagram(int k_, std::vector<int> word_, std::set<std::pair<int, int>> arcs_);

    bool operator==(const KDiagram&) const = default;
};

// Chain blocks listed by leftmost word position; each block lists its
// values left to right (strictly increasing for Diagram, weakly for KDiagram).
struct ChainPartition {
    std::vector<std::vector<int>> blocks;
    bool operator==(const ChainPartition&) const = default;
};

// Check all diagram invariants beyond word shape: arcs rightward,
// containment-free position spans, at most one incoming/outgoing arc per
// element, chains increasing (weakly for KDiagram, with all copies of a
// value in one chain). Word shape violations throw InvalidInput.
bool validate_diagram(const Diagram& d);
bool validate_diagram(const KDiagram& d);

// First broken invariant as text, or nullopt when valid. Same error
// behaviour as validate_diagram.
std::optional<std::string> diagram_flaw(const Diagram& d);
std::optional<std::string> diagram_flaw(const KDiagram& d);

ChainPartition chain_partition(const Diagram& d);
ChainPartition chain_partition(const KDiagram& d);

// Drop every raw arc whose position span contains another raw arc's span
// (shared endpoints count as containment). The survivors are the minimal
// spans, so the result does not depend on removal order.
Diagram prune_containments(std::vector<int> word, const std::set<std::pair<int, int>>& raw_arcs);

// Span-level pruning shared with the region extractor: keeps exactly the
// spans that contain no other listed span.
std::vector<std::pair<int, int>> prune_spans(const std::vector<std::pair<int, int>>& spans);

// Word on one line, arcs as bracket rows beneath.
std::string render_ascii(const Diagram& d);
std::string render_ascii(const KDiagram& d);

}  // namespace shiarr
