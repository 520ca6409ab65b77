#include "shiarr/counting.hpp"

#include <vector>

#include "shiarr/errors.hpp"

namespace shiarr {

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int t = 0; t < exp; ++t) r *= base;
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int t = 2; t <= n; ++t) r *= t;
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

long long count_shi_regions(int n, int k) {
    if (n < 1 || k < 1) throw InvalidInput("need n >= 1 and k >= 1");
    return ipow((long long)k * n + 1, n - 1);
}

bool graphical_product_hypothesis(const SimpleGraph& g) {
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (int l = j + 1; l <= g.n; ++l)
                if (!g.has_edge(i, l)) return false;
        }
    return true;
}

long long count_graphical_regions(const SimpleGraph& g) {
    if (!graphical_product_hypothesis(g))
        throw InvalidInput("graph violates the product-formula hypothesis");
    long long product = 1;
    for (int j = 2; j <= g.n; ++j) {
        int d = 0;
        for (int i = 1; i < j; ++i)
            if (!g.has_edge(i, j)) ++d;
        product *= g.n - d + 1;
    }
    return product;
}

long long count_path_regions(int n) {
    if (n < 1) throw InvalidInput("need n >= 1");
    long long sum = 0;
    for (int k = 1; k <= n; ++k) sum += factorial(n) / factorial(k) * binomial(n - 1, k - 1);
    return sum;
}

long long count_family_regions(int n, int m, int k) {
    if (n < 2 || m < 0 || k < 2 || k > n + 1)
        throw InvalidInput("family parameters out of range");
    return ipow(n + m, k - 2) * ipow(n + m + 1, n - k + 1);
}

bool family_recursion_holds(int n_max, int m_max) {
    if (n_max < 2 || m_max < 2) throw InvalidInput("bounds must be >= 2");
    for (int n = 3; n <= n_max; ++n)
        for (int m = 0; m <= m_max; ++m)
            for (int k = 2; k <= n; ++k)
                if (count_family_regions(n, m, k) !=
                    count_family_regions(n, m, k + 1) + count_family_regions(n - 1, m + 1, k))
                    return false;
    return true;
}

long long shi_face_count(int n, int dim) {
    if (dim < 1 || dim > n) throw InvalidInput("face dimension out of range");
    long long maps = 0;  // maps [n-1] -> [n+1] whose image covers [n-dim]
    for (int i = 0; i <= n - dim; ++i)
        maps += (i % 2 == 0 ? 1 : -1) * binomial(n - dim, i) * ipow(n + 1 - i, n - 1);
    return binomial(n, dim) * maps;
}

long long shi_face_count_bruteforce(int n, int dim) {
    if (dim < 1 || dim > n) throw InvalidInput("face dimension out of range");
    const int domain = n - 1, range = n + 1, required = n - dim;
    long long maps = 0;
    std::vector<int> f(domain, 1);
    while (true) {
        bool covers = true;
        for (int v = 1; v <= required && covers; ++v) {
            bool hit = false;
            for (int x : f) hit |= x == v;
            covers = hit;
        }
        maps += covers;
        int pos = domain - 1;
        while (pos >= 0 && f[pos] == range) f[pos--] = 1;
        if (pos < 0) break;
        ++f[pos];
    }
    return binomial(n, dim) * maps;
}

}  // namespace shiarr
