#include "shiarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shiarr {

namespace {

Arrangement finish(int n, std::vector<Hyperplane> planes) {
    std::sort(planes.begin(), planes.end());
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
    return Arrangement{n, std::move(planes)};
}

void check_dimension(int n) {
    if (n < 2) throw InvalidInput("arrangement needs n >= 2");
}

}  // namespace

Arrangement braid_arrangement(int n) {
    check_dimension(n);
    std::vector<Hyperplane> planes;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) planes.push_back({i, j, 0});
    return finish(n, std::move(planes));
}

Arrangement shi_arrangement(int n) {
    check_dimension(n);
    std::vector<Hyperplane> planes;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            planes.push_back({i, j, 0});
            planes.push_back({i, j, 1});
        }
    return finish(n, std::move(planes));
}

Arrangement graphical_shi_arrangement(const SimpleGraph& g) {
    check_dimension(g.n);
    std::vector<Hyperplane> planes;
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j) {
            planes.push_back({i, j, 0});
            if (g.has_edge(i, j)) planes.push_back({i, j, 1});
        }
    return finish(g.n, std::move(planes));
}

Arrangement extended_shi_arrangement(int n, int k) {
    check_dimension(n);
    if (k < 1) throw InvalidInput("extended arrangement needs k >= 1");
    std::vector<Hyperplane> planes;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int c = -k + 1; c <= k; ++c) planes.push_back({i, j, c});
    return finish(n, std::move(planes));
}

Arrangement family_arrangement(int n, int m, int k) {
    check_dimension(n);
    if (m < 0 || k < 2 || k > n + 1) throw InvalidInput("family needs m >= 0, 2 <= k <= n+1");
    std::vector<Hyperplane> planes;
    for (int j = 2; j <= n; ++j) {
        const int top = j < k ? m : m + 1;
        for (int c = 0; c <= top; ++c) planes.push_back({1, j, c});
    }
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            planes.push_back({i, j, 0});
            planes.push_back({i, j, 1});
        }
    return finish(n, std::move(planes));
}

// --- difference-constraint solver -----------------------------------------

namespace {

// Weight c + e*epsilon with infinitesimal epsilon > 0, compared lexicographically.
struct LexWeight {
    long long c = 0;
    long long e = 0;
    LexWeight operator+(const LexWeight& o) const { return {c + o.c, e + o.e}; }
    bool operator<(const LexWeight& o) const { return c != o.c ? c < o.c : e < o.e; }
};

struct Edge {
    int from = 0;  // constraint x_to - x_from <= weight
    int to = 0;
    LexWeight w;
};

}  // namespace

std::optional<std::vector<Rational>> solve_difference_constraints(
    int n, const std::vector<Constraint>& constraints) {
    if (n < 1) throw InvalidInput("need n >= 1");
    std::vector<Edge> edges;
    edges.reserve(2 * constraints.size());
    for (const auto& cst : constraints) {
        if (cst.i < 1 || cst.i > n || cst.j < 1 || cst.j > n)
            throw InvalidInput("constraint index out of range");
        const int i = cst.i - 1, j = cst.j - 1;
        switch (cst.rel) {
            case Rel::Less:  // x_i - x_j <= c - eps
                edges.push_back({j, i, {cst.c, -1}});
                break;
            case Rel::Greater:  // x_j - x_i <= -c - eps
                edges.push_back({i, j, {-cst.c, -1}});
                break;
            case Rel::Equal:
                edges.push_back({j, i, {cst.c, 0}});
                edges.push_back({i, j, {-cst.c, 0}});
                break;
        }
    }

    // Bellman-Ford from an implicit source adjacent to every vertex with
    // weight 0; one extra pass detects a negative cycle.
    std::vector<LexWeight> dist(n);
    for (int pass = 0; pass < n; ++pass) {
        bool changed = false;
        for (const auto& e : edges) {
            LexWeight candidate = dist[e.from] + e.w;
            if (candidate < dist[e.to]) {
                dist[e.to] = candidate;
                changed = true;
            }
        }
        if (!changed) break;
        if (pass == n - 1) return std::nullopt;  // still relaxing: negative cycle
    }

    const long long eps_den = 2 * (long long)constraints.size() + 2;
    std::vector<Rational> x;
    x.reserve(n);
    for (const auto& d : dist) x.push_back(Rational(d.c) + Rational(d.e, eps_den));

    for (const auto& cst : constraints) {
        const Rational diff = x[cst.i - 1] - x[cst.j - 1];
        const bool ok = cst.rel == Rel::Less      ? diff < Rational(cst.c)
                        : cst.rel == Rel::Greater ? diff > Rational(cst.c)
                                                  : diff == Rational(cst.c);
        if (!ok) throw InternalInvariantError("witness fails substitution check");
    }
    return x;
}

// --- region and face enumeration ------------------------------------------

namespace {

Constraint constraint_for(const Hyperplane& h, char sign) {
    switch (sign) {
        case '+': return {h.i, h.j, Rel::Greater, h.c};
        case '-': return {h.i, h.j, Rel::Less, h.c};
        default:  return {h.i, h.j, Rel::Equal, h.c};
    }
}

int equality_component_count(const Arrangement& a, const std::string& signs) {
    std::vector<int> parent(a.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t h = 0; h < signs.size(); ++h)
        if (signs[h] == '0') parent[find(a.hyperplanes[h].i - 1)] = find(a.hyperplanes[h].j - 1);
    int components = 0;
    for (int v = 0; v < a.n; ++v)
        if (find(v) == v) ++components;
    return components;
}

template <typename Emit>
void sign_dfs(const Arrangement& a, const char* alphabet, std::string& signs,
              std::vector<Constraint>& active, const Emit& emit) {
    const size_t depth = signs.size();
    if (depth == a.hyperplanes.size()) {
        auto witness = solve_difference_constraints(a.n, active);
        if (!witness) throw InternalInvariantError("feasible prefix became infeasible at leaf");
        emit(signs, std::move(*witness));
        return;
    }
    const Hyperplane& h = a.hyperplanes[depth];
    for (const char* s = alphabet; *s; ++s) {
        active.push_back(constraint_for(h, *s));
        if (solve_difference_constraints(a.n, active)) {
            signs.push_back(*s);
            sign_dfs(a, alphabet, signs, active, emit);
            signs.pop_back();
        }
        active.pop_back();
    }
}

}  // namespace

std::vector<Region> enumerate_regions(const Arrangement& a) {
    std::vector<Region> out;
    std::string signs;
    std::vector<Constraint> active;
    sign_dfs(a, "+-", signs, active, [&](const std::string& s, std::vector<Rational> w) {
        out.push_back({s, std::move(w)});
    });
    return out;
}

std::vector<Face> enumerate_faces(const Arrangement& a) {
    std::vector<Face> out;
    std::string signs;
    std::vector<Constraint> active;
    sign_dfs(a, "+0-", signs, active, [&](const std::string& s, std::vector<Rational> w) {
        out.push_back({s, equality_component_count(a, s), std::move(w)});
    });
    return out;
}

Region region_from_witness(const Arrangement& a, const std::vector<Rational>& x) {
    if ((int)x.size() != a.n) throw InvalidInput("witness dimension mismatch");
    std::string signs;
    for (const auto& h : a.hyperplanes) {
        const Rational diff = x[h.i - 1] - x[h.j - 1];
        if (diff == Rational(h.c))
            throw InternalInvariantError("point lies on a hyperplane, not in a region");
        signs.push_back(diff > Rational(h.c) ? '+' : '-');
    }
    return Region{std::move(signs), x};
}

// --- diagram extraction -----------------------------------------------------

Diagram region_to_diagram(const Region& r, const Arrangement& a) {
    if (r.signs.size() != a.hyperplanes.size()) throw InvalidInput("sign vector length mismatch");
    std::vector<std::vector<bool>> has_zero(a.n + 1, std::vector<bool>(a.n + 1, false));
    for (const auto& h : a.hyperplanes) {
        if (h.c < 0 || h.c > 1) throw InvalidInput("not a Shi-type arrangement");
        if (h.c == 0) has_zero[h.i][h.j] = true;
    }
    for (int i = 1; i <= a.n; ++i)
        for (int j = i + 1; j <= a.n; ++j)
            if (!has_zero[i][j]) throw InvalidInput("arrangement lacks an x_i = x_j hyperplane");

    // Coordinates are totally ordered inside a region of such an arrangement.
    std::vector<int> word(a.n);
    std::iota(word.begin(), word.end(), 1);
    std::sort(word.begin(), word.end(),
              [&](int u, int v) { return r.witness[v - 1] < r.witness[u - 1]; });
    for (size_t p = 0; p + 1 < word.size(); ++p)
        if (r.witness[word[p] - 1] == r.witness[word[p + 1] - 1])
            throw InternalInvariantError("tied witness coordinates inside a region");

    std::set<std::pair<int, int>> raw;
    for (size_t h = 0; h < a.hyperplanes.size(); ++h)
        if (a.hyperplanes[h].c == 1 && r.signs[h] == '+')
            raw.insert({a.hyperplanes[h].i, a.hyperplanes[h].j});
    return prune_containments(std::move(word), raw);
}

KDiagram region_to_kdiagram(const Region& r, const Arrangement& a, int k) {
    if (a != extended_shi_arrangement(a.n, k))
        throw InvalidInput("arrangement is not the extended arrangement for this k");
    if (r.signs.size() != a.hyperplanes.size()) throw InvalidInput("sign vector length mismatch");

    struct Symbol {
        int var;
        int shift;
        Rational value;
    };
    std::vector<Symbol> symbols;
    for (int i = 1; i <= a.n; ++i)
        for (int m = 0; m < k; ++m) symbols.push_back({i, m, r.witness[i - 1] + Rational(m)});
    std::sort(symbols.begin(), symbols.end(),
              [](const Symbol& s, const Symbol& t) { return t.value < s.value; });
    for (size_t p = 0; p + 1 < symbols.size(); ++p)
        if (symbols[p].value == symbols[p + 1].value)
            throw InternalInvariantError("tied symbols inside a region");

    auto position = [&](int var, int shift) {
        for (size_t p = 0; p < symbols.size(); ++p)
            if (symbols[p].var == var && symbols[p].shift == shift) return (int)p + 1;
        throw InternalInvariantError("symbol not found");
    };

    std::vector<std::pair<int, int>> raw;
    for (int i = 1; i <= a.n; ++i)
        for (int m = 1; m < k; ++m) raw.push_back({position(i, m), position(i, m - 1)});
    for (size_t h = 0; h < a.hyperplanes.size(); ++h)
        if (a.hyperplanes[h].c == k && r.signs[h] == '+')
            raw.push_back({position(a.hyperplanes[h].i, 0), position(a.hyperplanes[h].j, k - 1)});
    for (auto& [p, q] : raw)
        if (p >= q) throw InternalInvariantError("extended raw arc not rightward");

    std::vector<int> word;
    word.reserve(symbols.size());
    for (const auto& s : symbols) word.push_back(s.var);
    auto kept = prune_spans(raw);
    return KDiagram(k, std::move(word), {kept.begin(), kept.end()});
}

// --- finite-field point counting and Zaslavsky ------------------------------

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

long long prime_bound(const Arrangement& a) {
    long long cmax = 0;
    for (const auto& h : a.hyperplanes) cmax = std::max(cmax, (long long)std::abs(h.c));
    return 2 * cmax * a.n;
}

// Exact Lagrange interpolation through (points[i], values[i]).
std::vector<Rational> interpolate(const std::vector<long long>& points,
                                  const std::vector<long long>& values) {
    const size_t m = points.size();
    std::vector<Rational> coeffs(m, Rational(0));
    for (size_t i = 0; i < m; ++i) {
        std::vector<Rational> basis{Rational(1)};  // prod_{j != i} (x - q_j)
        Rational denom(1);
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            basis.insert(basis.begin(), Rational(0));
            for (size_t t = 0; t + 1 < basis.size(); ++t)
                basis[t] += basis[t + 1] * Rational(-points[j]);
            denom *= Rational(points[i] - points[j]);
        }
        const Rational scale = Rational(values[i]) / denom;
        for (size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * scale;
    }
    return coeffs;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (size_t t = coeffs.size(); t-- > 0;) acc = acc * x + coeffs[t];
    return acc;
}

}  // namespace

long long count_points_off_hyperplanes(const Arrangement& a, long long q) {
    if (!is_prime(q)) throw InvalidInput("q must be prime");
    if (q <= prime_bound(a)) throw InvalidInput("q below the admissible bound");
    std::vector<long long> x(a.n, 0);
    long long count = 0;
    while (true) {
        bool off = true;
        for (const auto& h : a.hyperplanes) {
            long long diff = (x[h.i - 1] - x[h.j - 1] - h.c) % q;
            if (diff == 0) { off = false; break; }
        }
        count += off;
        int pos = a.n - 1;
        while (pos >= 0 && x[pos] == q - 1) x[pos--] = 0;
        if (pos < 0) break;
        ++x[pos];
    }
    return count;
}

std::vector<long long> admissible_primes(const Arrangement& a, int count) {
    std::vector<long long> primes;
    for (long long q = prime_bound(a) + 1; (int)primes.size() < count; ++q)
        if (is_prime(q)) primes.push_back(q);
    return primes;
}

std::vector<long long> characteristic_polynomial(const Arrangement& a) {
    const auto primes = admissible_primes(a, a.n + 2);
    std::vector<long long> values;
    for (long long q : primes) values.push_back(count_points_off_hyperplanes(a, q));

    std::vector<long long> pts(primes.begin(), primes.end() - 1);
    std::vector<long long> vals(values.begin(), values.end() - 1);
    const auto coeffs = interpolate(pts, vals);

    // One extra prime guards against an insufficient bound.
    if (eval_poly(coeffs, Rational(primes.back())) != Rational(values.back()))
        throw InternalInvariantError("characteristic polynomial fails at validation prime");

    std::vector<long long> out;
    for (const auto& c : coeffs) {
        if (!c.is_integer())
            throw InternalInvariantError("characteristic polynomial has a non-integer coefficient");
        out.push_back(c.num());
    }
    return out;
}

long long zaslavsky_region_count(const Arrangement& a) {
    const auto coeffs = characteristic_polynomial(a);
    std::vector<Rational> rational_coeffs(coeffs.begin(), coeffs.end());
    const Rational at_minus_one = eval_poly(rational_coeffs, Rational(-1));
    const long long sign = a.n % 2 == 0 ? 1 : -1;
    return sign * at_minus_one.num();
}

}  // namespace shiarr
