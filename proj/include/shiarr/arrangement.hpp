#pragma once

// Exact geometry for arrangements of hyperplanes x_i - x_j = c with
// integer c: strict-feasibility solving on difference-constraint graphs,
// region/face enumeration by sign-vector DFS, diagram extraction from
// regions, and characteristic-polynomial evaluation by point counting
// over finite fields.

#include <optional>
#include <string>
#include <vector>

#include "shiarr/diagram.hpp"
#include "shiarr/pf.hpp"
#include "shiarr/rational.hpp"

namespace shiarr {

// x_i - x_j = c with 1 <= i < j <= n.
struct Hyperplane {
    int i = 0;
    int j = 0;
    int c = 0;
    auto operator<=>(const Hyperplane&) const = default;
};

struct Arrangement {
    int n = 0;
    std::vector<Hyperplane> hyperplanes;  // sorted by (i, j, c), pairwise distinct
    bool operator==(const Arrangement&) const = default;
};

Arrangement braid_arrangement(int n);                         // x_i - x_j = 0
Arrangement shi_arrangement(int n);                           // offsets 0, 1
Arrangement graphical_shi_arrangement(const SimpleGraph& g);  // offset 1 only on edges
Arrangement extended_shi_arrangement(int n, int k);           // offsets -k+1 .. k

// Interpolating family: x_1 - x_j = 0..m for 2 <= j < k, 0..m+1 for
// k <= j <= n, and x_i - x_j = 0, 1 among the rest. Requires m >= 0 and
// 2 <= k <= n+1.
Arrangement family_arrangement(int n, int m, int k);

enum class Rel { Less, Greater, Equal };

// x_i - x_j REL c
struct Constraint {
    int i = 0;
    int j = 0;
    Rel rel = Rel::Less;
    int c = 0;
};

// Exact feasibility of a strict/equality difference system. Strict
// constraints become bounds c - epsilon with lexicographic (integer,
// epsilon) weights; a negative cycle under Bellman-Ford means infeasible.
// Otherwise the shortest-path potentials give a witness with epsilon
// instantiated as 1/(2*#constraints + 2); the witness is substituted back
// before being returned.
std::optional<std::vector<Rational>> solve_difference_constraints(
    int n, const std::vector<Constraint>& constraints);

// Sign vector over the hyperplane list ('+' where x_i - x_j > c) plus an
// exact interior point.
struct Region {
    std::string signs;
    std::vector<Rational> witness;
    bool operator==(const Region&) const = default;
};

// Face sign vectors allow '0'; dim counts equality-graph components.
struct Face {
    std::string signs;
    int dim = 0;
    std::vector<Rational> witness;
    bool operator==(const Face&) const = default;
};

// DFS over sign prefixes in hyperplane-list order ('+' branch first),
// pruning infeasible prefixes. Output order is deterministic.
std::vector<Region> enumerate_regions(const Arrangement& a);
std::vector<Face> enumerate_faces(const Arrangement& a);

// Classify a point against every hyperplane; the point must avoid all of
// them or this is reported as an internal error.
Region region_from_witness(const Arrangement& a, const std::vector<Rational>& x);

// Word = coordinates in decreasing order; arcs where the offset-1
// hyperplane of a pair is signed '+', pruned of containments. The
// arrangement must contain every x_i = x_j hyperplane and no offsets
// outside {0, 1}.
Diagram region_to_diagram(const Region& r, const Arrangement& a);

// Extended version: symbols x_i + m for 0 <= m < k ordered decreasingly,
// arcs x_i+m -> x_i+m-1 plus x_i -> x_j+k-1 where x_i - x_j > k, pruned.
// The arrangement must equal extended_shi_arrangement(n, k).
KDiagram region_to_kdiagram(const Region& r, const Arrangement& a, int k);

// #{x in (Z_q)^n : x_i - x_j != c mod q for every hyperplane}, the
// characteristic polynomial at q. Requires q prime and
// q > 2 * max|c| * n.
long long count_points_off_hyperplanes(const Arrangement& a, long long q);

// Smallest admissible primes for the finite-field method on a.
std::vector<long long> admissible_primes(const Arrangement& a, int count);

// Coefficients (ascending powers, degree n) interpolated from point
// counts at n+1 admissible primes and verified against one more prime.
std::vector<long long> characteristic_polynomial(const Arrangement& a);

// (-1)^n * chi(-1); must agree with enumerate_regions(a).size().
long long zaslavsky_region_count(const Arrangement& a);

}  // namespace shiarr
