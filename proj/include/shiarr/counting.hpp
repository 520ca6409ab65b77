#pragma once

// Closed-form region and face counts for the arrangements handled here.
// Every formula is cross-checked against the geometric enumerator in the
// test suites.

#include "shiarr/pf.hpp"

namespace shiarr {

// (kn+1)^(n-1): regions of the (extended) arrangement, and the number of
// k-parking functions on [n].
long long count_shi_regions(int n, int k = 1);

// The product hypothesis: whenever i < j < l and {i,j} is an edge, {i,l}
// must be one too.
bool graphical_product_hypothesis(const SimpleGraph& g);

// prod_{1 < j <= n} (n - d_j + 1) with d_j = #{i < j : {i,j} not an edge}.
// Only valid under the hypothesis above; rejected otherwise.
long long count_graphical_regions(const SimpleGraph& g);

// sum_{k=1}^{n} n!/k! * C(n-1, k-1): regions when the graph is the path.
long long count_path_regions(int n);

// (n+m)^(k-2) * (n+m+1)^(n-k+1) for the interpolating family; n >= 2,
// m >= 0, 2 <= k <= n+1.
long long count_family_regions(int n, int m, int k);

// The count-level deletion/restriction identity
//   family(n,m,k) = family(n,m,k+1) + family(n-1,m+1,k)
// over all triples with 3 <= n <= n_max, 0 <= m <= m_max, 2 <= k <= n
// (the k = n+1 boundary is the reparameterized m-1, k=2 case).
bool family_recursion_holds(int n_max, int m_max);

// Faces of dimension dim: C(n,dim) * #{f : [n-1] -> [n+1] with
// [n-dim] inside Im f}, by inclusion-exclusion over the required image.
long long shi_face_count(int n, int dim);

// Same cardinality by enumerating all (n+1)^(n-1) maps; the algebra-free
// cross-check (n <= 5).
long long shi_face_count_bruteforce(int n, int dim);

long long binomial(int n, int k);
long long factorial(int n);
long long ipow(long long base, int exp);

}  // namespace shiarr
