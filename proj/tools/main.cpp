// Command-line front end: region/face enumeration, diagram <-> parking
// function conversion, closed-form counts, characteristic polynomials,
// and the cross-validation suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or invalid input,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <set>

#include "shiarr/arrangement.hpp"
#include "shiarr/bijection.hpp"
#include "shiarr/counting.hpp"
#include "shiarr/json_io.hpp"

using nlohmann::json;
using namespace shiarr;

namespace {

struct ArrangementSpec {
    int shi_n = 0, braid_n = 0, graphical_n = 0, extended_n = 0, family_n = 0;
    int k = 1, m = 0;
    std::string graph_json;

    std::string kind() const {
        if (shi_n) return "shi";
        if (braid_n) return "braid";
        if (graphical_n) return "graphical";
        if (extended_n) return "extended";
        if (family_n) return "family";
        return "";
    }
    int n() const { return shi_n + braid_n + graphical_n + extended_n + family_n; }

    SimpleGraph graph() const {
        if (graph_json.empty()) throw InvalidInput("--graphical requires --graph");
        return graph_from_json(json::parse(graph_json), graphical_n);
    }

    Arrangement build() const {
        if (shi_n) return shi_arrangement(shi_n);
        if (braid_n) return braid_arrangement(braid_n);
        if (graphical_n) return graphical_shi_arrangement(graph());
        if (extended_n) return extended_shi_arrangement(extended_n, k);
        if (family_n) return family_arrangement(family_n, m, k);
        throw InvalidInput("choose one of --shi/--braid/--graphical/--extended/--family");
    }
};

void add_kind_options(CLI::App* cmd, ArrangementSpec& spec) {
    auto* shi = cmd->add_option("--shi", spec.shi_n, "Shi arrangement on n coordinates");
    auto* braid = cmd->add_option("--braid", spec.braid_n, "braid arrangement");
    auto* graphical =
        cmd->add_option("--graphical", spec.graphical_n, "graphical arrangement (needs --graph)");
    auto* extended =
        cmd->add_option("--extended", spec.extended_n, "extended arrangement (offsets -k+1..k)");
    auto* family = cmd->add_option("--family", spec.family_n, "interpolating family (--m, --k)");
    for (auto* a : {shi, braid, graphical, extended, family})
        for (auto* b : {shi, braid, graphical, extended, family})
            if (a != b) a->excludes(b);
}

void add_spec_options(CLI::App* cmd, ArrangementSpec& spec) {
    add_kind_options(cmd, spec);
    cmd->add_option("--k", spec.k, "k parameter (extended offset range / family threshold)");
    cmd->add_option("--m", spec.m, "m parameter of the family");
    cmd->add_option("--graph", spec.graph_json, "edge list, e.g. '[[1,2],[2,3]]'");
}

json region_record(const Region& r, const Arrangement& a, const ArrangementSpec& spec) {
    json rec = region_to_json(r);
    if (spec.kind() == "extended") {
        KDiagram kd = region_to_kdiagram(r, a, spec.k);
        rec["diagram"] = kdiagram_to_json(kd);
        rec["parking_function"] = parking_from_kdiagram(kd).values;
    } else if (spec.kind() == "family") {
        rec["diagram"] = nullptr;
        rec["parking_function"] = nullptr;
    } else {
        Diagram d = region_to_diagram(r, a);
        rec["diagram"] = diagram_to_json(d);
        rec["parking_function"] = parking_from_diagram(d).values;
    }
    return rec;
}

int cmd_regions(const ArrangementSpec& spec, const std::string& format) {
    const Arrangement a = spec.build();
    for (const auto& r : enumerate_regions(a)) {
        json rec = region_record(r, a, spec);
        if (format == "ascii") {
            std::cout << rec["signs"].get<std::string>();
            if (rec["parking_function"].is_null()) {
                std::cout << "\n\n";
                continue;
            }
            std::cout << "  ->  " << rec["parking_function"].dump() << "\n";
            if (spec.kind() == "extended")
                std::cout << render_ascii(kdiagram_from_json(rec["diagram"])) << "\n\n";
            else
                std::cout << render_ascii(diagram_from_json(rec["diagram"])) << "\n\n";
        } else {
            std::cout << rec.dump() << "\n";
        }
    }
    return 0;
}

int cmd_faces(const ArrangementSpec& spec, const std::string& format) {
    const Arrangement a = spec.build();
    std::map<int, int> fvector;
    for (const auto& f : enumerate_faces(a)) {
        ++fvector[f.dim];
        if (format == "ascii")
            std::cout << f.signs << "  dim " << f.dim << "\n";
        else
            std::cout << face_to_json(f).dump() << "\n";
    }
    if (format == "ascii") {
        std::cout << "f-vector:";
        for (const auto& [dim, count] : fvector) std::cout << " f_" << dim << "=" << count;
        std::cout << "\n";
    }
    return 0;
}

int cmd_map(const std::string& to_region, const std::string& to_pf, int k,
            const std::string& graph_json, const std::string& render) {
    if (to_region.empty() == to_pf.empty())
        throw InvalidInput("need exactly one of --to-region / --to-pf");

    if (!to_region.empty()) {
        const std::vector<int> values = int_sequence_from_json(json::parse(to_region));
        if (!is_k_parking(values, k))
            throw InvalidInput(k == 1 ? "not a parking function" : "not a k-parking function");
        if (k == 1) {
            ParkingFunction f(values);
            const SimpleGraph g = graph_json.empty()
                                      ? SimpleGraph::complete(f.n)
                                      : graph_from_json(json::parse(graph_json), f.n);
            Diagram d = diagram_from_parking(f, g);
            std::cout << diagram_to_json(d).dump() << "\n";
            if (render == "ascii") std::cout << render_ascii(d) << "\n";
        } else {
            KDiagram d = kdiagram_from_parking(KParkingFunction(k, values));
            std::cout << kdiagram_to_json(d).dump() << "\n";
            if (render == "ascii") std::cout << render_ascii(d) << "\n";
        }
        return 0;
    }

    // A "k" field selects the multiset-word form with position arcs.
    const json j = json::parse(to_pf);
    if (j.contains("k")) {
        KDiagram d = kdiagram_from_json(j);
        std::cout << json(parking_from_kdiagram(d).values).dump() << "\n";
        if (render == "ascii") std::cout << render_ascii(d) << "\n";
    } else {
        Diagram d = diagram_from_json(j);
        std::cout << json(parking_from_diagram(d).values).dump() << "\n";
        if (render == "ascii") std::cout << render_ascii(d) << "\n";
    }
    return 0;
}

int cmd_count(const ArrangementSpec& spec, bool faces) {
    json out;
    const std::string kind = spec.kind();
    if (kind.empty())
        throw InvalidInput("choose one of --shi/--braid/--graphical/--extended/--family");
    out["kind"] = kind;
    out["n"] = spec.n();
    if (faces) {
        if (kind != "shi") throw InvalidInput("face counts are implemented for --shi only");
        json fv = json::array();
        for (int dim = 1; dim <= spec.n(); ++dim) fv.push_back(shi_face_count(spec.n(), dim));
        out["f"] = fv;
    } else if (kind == "shi") {
        out["regions"] = count_shi_regions(spec.shi_n, 1);
    } else if (kind == "braid") {
        out["regions"] = factorial(spec.braid_n);
    } else if (kind == "extended") {
        out["k"] = spec.k;
        out["regions"] = count_shi_regions(spec.extended_n, spec.k);
    } else if (kind == "family") {
        out["k"] = spec.k;
        out["m"] = spec.m;
        out["regions"] = count_family_regions(spec.family_n, spec.m, spec.k);
    } else {
        const SimpleGraph g = spec.graph();
        if (graphical_product_hypothesis(g)) {
            out["regions"] = count_graphical_regions(g);
            out["formula"] = "product";
        } else if (g == SimpleGraph::path(g.n)) {
            out["regions"] = count_path_regions(g.n);
            out["formula"] = "path";
        } else {
            throw InvalidInput("no closed form for this graph; use the regions subcommand");
        }
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_chi(const ArrangementSpec& spec, const std::string& format) {
    const Arrangement a = spec.build();
    const auto coeffs = characteristic_polynomial(a);
    const auto primes = admissible_primes(a, a.n + 2);
    json values = json::array();
    for (long long q : primes) values.push_back(count_points_off_hyperplanes(a, q));
    const long long regions = zaslavsky_region_count(a);

    if (format == "ascii") {
        std::cout << "chi(q) =";
        bool first = true;
        for (int t = (int)coeffs.size() - 1; t >= 0; --t) {
            if (coeffs[t] == 0) continue;
            std::cout << (coeffs[t] > 0 ? (first ? " " : " + ") : " - ") << std::abs(coeffs[t]);
            if (t == 1) std::cout << "*q";
            if (t > 1) std::cout << "*q^" << t;
            first = false;
        }
        std::cout << "\nprimes:";
        for (size_t t = 0; t < primes.size(); ++t)
            std::cout << " chi(" << primes[t] << ")=" << values[t];
        std::cout << "\nregions via Zaslavsky: " << regions << "\n";
        return 0;
    }
    json out{{"kind", spec.kind()},       {"n", a.n},         {"coefficients", coeffs},
             {"primes", primes},          {"values", values}, {"regions_zaslavsky", regions}};
    std::cout << out.dump() << "\n";
    return 0;
}

// --- verify ------------------------------------------------------------------

struct Verifier {
    int failures = 0;
    json first_counterexample;

    void check(const std::string& name, bool pass, const std::string& detail,
               const json& counterexample = nullptr) {
        std::cout << (pass ? "PASS  " : "FAIL  ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!pass && failures++ == 0) first_counterexample = counterexample;
    }

    int finish(const std::string& suite) {
        json out{{"suite", suite}, {"failures", failures}, {"pass", failures == 0}};
        if (failures > 0) out["counterexample"] = first_counterexample;
        std::cout << out.dump() << "\n";
        return failures == 0 ? 0 : 1;
    }
};

void verify_bijection(Verifier& v, int n, int k) {
    const Arrangement a = k == 1 ? shi_arrangement(n) : extended_shi_arrangement(n, k);
    const auto regions = enumerate_regions(a);
    std::set<std::vector<int>> images;
    bool roundtrips = true;
    json bad;
    for (const auto& r : regions) {
        std::vector<int> values;
        bool back;
        if (k == 1) {
            Diagram d = region_to_diagram(r, a);
            ParkingFunction f = parking_from_diagram(d);
            values = f.values;
            back = diagram_from_parking(f) == d;
        } else {
            KDiagram d = region_to_kdiagram(r, a, k);
            KParkingFunction f = parking_from_kdiagram(d);
            values = f.values;
            back = kdiagram_from_parking(f) == d;
        }
        if (!back && roundtrips) {
            roundtrips = false;
            bad = json{{"parking_function", values}};
        }
        images.insert(values);
    }
    std::set<std::vector<int>> all;
    for (const auto& f : enumerate_k_parking(n, k)) all.insert(f.values);

    const std::string label = "bijection n=" + std::to_string(n) + " k=" + std::to_string(k);
    v.check(label + " image", images == all && images.size() == regions.size(),
            std::to_string(regions.size()) + " regions <-> " + std::to_string(all.size()) +
                " parking functions");
    v.check(label + " roundtrip", roundtrips,
            std::to_string(regions.size()) + " regions round-tripped", bad);
}

std::vector<SimpleGraph> all_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    std::vector<SimpleGraph> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::set<std::pair<int, int>> edges;
        for (size_t t = 0; t < pairs.size(); ++t)
            if (mask & (1u << t)) edges.insert(pairs[t]);
        out.push_back(SimpleGraph(n, std::move(edges)));
    }
    return out;
}

// Cosets of <(1,..,1)> in Z_{n+1}^n correspond to vectors with first entry 0;
// the repeat condition only sees equalities, so any member decides it.
long long cosets_satisfying_condition(int n, const SimpleGraph& g) {
    const int m = n + 1;
    std::vector<int> entries(n, 0);
    long long count = 0;
    while (true) {
        if (satisfies_graph_condition(entries, g)) ++count;
        int pos = n - 1;
        while (pos >= 1 && entries[pos] == m - 1) entries[pos--] = 0;
        if (pos < 1) break;
        ++entries[pos];
    }
    return count;
}

void verify_cosets(Verifier& v, int n, const std::vector<SimpleGraph>& graphs) {
    for (const auto& g : graphs) {
        const long long oracle = (long long)enumerate_regions(graphical_shi_arrangement(g)).size();
        const long long cosets = cosets_satisfying_condition(n, g);
        v.check("cosets n=" + std::to_string(n) + " graph=" + graph_to_json(g).dump(),
                oracle == cosets,
                "regions=" + std::to_string(oracle) + " cosets=" + std::to_string(cosets),
                json{{"graph", graph_to_json(g)}});
    }
}

void verify_formulas(Verifier& v, int n_max, int m_max) {
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& g : all_graphs(n)) {
            if (!graphical_product_hypothesis(g)) continue;
            const long long oracle =
                (long long)enumerate_regions(graphical_shi_arrangement(g)).size();
            v.check("product n=" + std::to_string(n) + " graph=" + graph_to_json(g).dump(),
                    count_graphical_regions(g) == oracle, "regions=" + std::to_string(oracle),
                    json{{"graph", graph_to_json(g)}});
        }
        const long long path_oracle =
            (long long)enumerate_regions(graphical_shi_arrangement(SimpleGraph::path(n))).size();
        v.check("path n=" + std::to_string(n), count_path_regions(n) == path_oracle,
                "regions=" + std::to_string(path_oracle));
        for (int m = 0; m <= m_max; ++m)
            for (int k = 2; k <= n + 1; ++k) {
                const long long oracle =
                    (long long)enumerate_regions(family_arrangement(n, m, k)).size();
                v.check("family n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " k=" + std::to_string(k),
                        count_family_regions(n, m, k) == oracle,
                        "regions=" + std::to_string(oracle));
            }
    }
    v.check("family recursion n<=6 m<=4", family_recursion_holds(6, 4), "");
}

void verify_chi(Verifier& v, const ArrangementSpec& spec) {
    const Arrangement a = spec.build();
    const auto primes = admissible_primes(a, 4);
    if (spec.kind() == "shi") {
        for (long long q : primes) {
            const long long counted = count_points_off_hyperplanes(a, q);
            const long long formula = q * ipow(q - a.n, a.n - 1);
            v.check("chi shi(" + std::to_string(a.n) + ") q=" + std::to_string(q),
                    counted == formula,
                    "points=" + std::to_string(counted) + " formula=" + std::to_string(formula));
        }
    }
    const long long zas = zaslavsky_region_count(a);
    const long long oracle = (long long)enumerate_regions(a).size();
    v.check("zaslavsky " + spec.kind() + " n=" + std::to_string(a.n), zas == oracle,
            "interpolated=" + std::to_string(zas) + " oracle=" + std::to_string(oracle));
}

void verify_faces(Verifier& v, int n) {
    const auto faces = enumerate_faces(shi_arrangement(n));
    std::map<int, long long> fvector;
    bool dims_ok = true;
    for (const auto& f : faces) {
        ++fvector[f.dim];
        dims_ok &= f.dim >= 1 && f.dim <= n;
    }
    v.check("faces shi(" + std::to_string(n) + ") dims in [1,n]", dims_ok,
            std::to_string(faces.size()) + " faces");
    for (int dim = 1; dim <= n; ++dim)
        v.check("faces shi(" + std::to_string(n) + ") dim=" + std::to_string(dim),
                fvector[dim] == shi_face_count(n, dim) &&
                    fvector[dim] == shi_face_count_bruteforce(n, dim),
                "geometric=" + std::to_string(fvector[dim]) +
                    " formula=" + std::to_string(shi_face_count(n, dim)));
    long long euler = 0;
    for (int dim = 1; dim <= n; ++dim) euler += (dim % 2 == 0 ? 1 : -1) * fvector[dim];
    const long long expected = n % 2 == 0 ? 1 : -1;
    v.check("faces shi(" + std::to_string(n) + ") euler", euler == expected,
            "sum=" + std::to_string(euler));
}

void verify_pollack(Verifier& v, int n, int k) {
    const int m = k * n + 1;
    std::vector<int> entries(n, 0);
    std::set<std::vector<int>> reps;
    long long cosets = 0;
    bool unique_ok = true;
    while (true) {
        ++cosets;
        try {
            reps.insert(coset_representative(CosetVector(k, entries)).values);
        } catch (const InternalInvariantError&) {
            unique_ok = false;
            break;
        }
        int pos = n - 1;
        while (pos >= 1 && entries[pos] == m - 1) entries[pos--] = 0;
        if (pos < 1) break;
        ++entries[pos];
    }
    const long long expected = count_shi_regions(n, k);
    v.check("pollack n=" + std::to_string(n) + " k=" + std::to_string(k),
            unique_ok && (long long)reps.size() == cosets && cosets == expected,
            std::to_string(cosets) + " cosets, " + std::to_string(reps.size()) +
                " distinct representatives");
}

int cmd_verify(const std::string& suite, int n, int k, int m_max, bool all_graphs_flag,
               const std::string& graph_json, ArrangementSpec spec) {
    Verifier v;
    spec.k = k;
    spec.m = m_max;
    if (!graph_json.empty()) spec.graph_json = graph_json;

    if (suite == "bijection") verify_bijection(v, n, k);
    if (suite == "cosets") {
        std::vector<SimpleGraph> graphs;
        if (all_graphs_flag)
            graphs = all_graphs(n);
        else if (!graph_json.empty())
            graphs.push_back(graph_from_json(json::parse(graph_json), n));
        else
            graphs.push_back(SimpleGraph::complete(n));
        verify_cosets(v, n, graphs);
    }
    if (suite == "formulas") verify_formulas(v, n, m_max);
    if (suite == "chi") {
        if (spec.kind().empty()) spec.shi_n = n;
        verify_chi(v, spec);
    }
    if (suite == "faces") verify_faces(v, n);
    if (suite == "pollack") verify_pollack(v, n, k);

    if (suite == "all") {
        for (int nn = 2; nn <= 4; ++nn) verify_bijection(v, nn, 1);
        verify_bijection(v, 3, 2);
        verify_cosets(v, 3, all_graphs(3));
        verify_formulas(v, 3, 2);
        ArrangementSpec s;
        s.shi_n = 3;
        verify_chi(v, s);
        verify_faces(v, 3);
        verify_pollack(v, 4, 1);
        verify_pollack(v, 2, 2);
        verify_pollack(v, 3, 2);
    }
    return v.finish(suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration for Shi-type hyperplane arrangements"};
    app.require_subcommand(1);

    ArrangementSpec spec;
    std::string format = "json";

    auto* regions = app.add_subcommand("regions", "enumerate regions as JSON lines");
    add_spec_options(regions, spec);
    regions->add_option("--format", format)->check(CLI::IsMember({"json", "ascii"}));

    auto* faces = app.add_subcommand("faces", "enumerate faces as JSON lines");
    add_spec_options(faces, spec);
    faces->add_option("--format", format)->check(CLI::IsMember({"json", "ascii"}));

    std::string to_region, to_pf, render, map_graph;
    int map_k = 1;
    auto* map = app.add_subcommand("map", "convert parking function <-> diagram");
    map->add_option("--to-region", to_region, "parking function JSON array -> diagram");
    map->add_option("--to-pf", to_pf, "diagram JSON -> parking function");
    map->add_option("--k", map_k, "treat input as k-parking");
    map->add_option("--graph", map_graph, "restrict to a graphical arrangement");
    map->add_option("--render", render)->check(CLI::IsMember({"ascii"}));

    bool count_faces = false;
    auto* count = app.add_subcommand("count", "closed-form counts");
    add_spec_options(count, spec);
    count->add_flag("--faces", count_faces, "face vector instead of regions");

    auto* chi = app.add_subcommand("chi", "characteristic polynomial by point counting");
    add_spec_options(chi, spec);
    chi->add_option("--format", format)->check(CLI::IsMember({"json", "ascii"}));

    std::string suite;
    int verify_n = 3, verify_k = 1, verify_m = 2;
    bool verify_all_graphs = false;
    std::string verify_graph;
    auto* verify = app.add_subcommand("verify", "cross-validation suites");
    verify->add_option("suite", suite, "bijection|cosets|formulas|chi|faces|pollack|all")
        ->required()
        ->check(CLI::IsMember({"bijection", "cosets", "formulas", "chi", "faces", "pollack", "all"}));
    verify->add_option("--n", verify_n, "size bound");
    verify->add_option("--k", verify_k, "k-parking parameter");
    verify->add_option("--m", verify_m, "family m bound");
    verify->add_flag("--all-graphs", verify_all_graphs, "all graphs on [n]");
    verify->add_option("--graph", verify_graph, "a single graph");
    add_kind_options(verify, spec);

    try {
        app.parse(argc, argv);
        if (regions->parsed()) return cmd_regions(spec, format);
        if (faces->parsed()) return cmd_faces(spec, format);
        if (map->parsed()) return cmd_map(to_region, to_pf, map_k, map_graph, render);
        if (count->parsed()) return cmd_count(spec, count_faces);
        if (chi->parsed()) return cmd_chi(spec, format);
        if (verify->parsed())
            return cmd_verify(suite, verify_n, verify_k, verify_m, verify_all_graphs, verify_graph,
                              spec);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
