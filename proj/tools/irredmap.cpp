#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "irredmap/census.hpp"
#include "irredmap/identities.hpp"
#include "irredmap/maps.hpp"
#include "irredmap/trees.hpp"

using namespace irredmap;
using json = nlohmann::ordered_json;

namespace {

/// Bad user input; exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int b = 1;
    int order = 6;
    int weight_degree = -1;  // -1: 2 if weights are given, else 0
    std::string weights;
    std::string profile;
    std::string boundaries;
    int emax = 8;
    std::string format = "plain";
    std::string suite = "all";
    std::string family;
    std::string faces;
    long max = -1;
    bool slices = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + s + "'");
    }
    if (used != s.size()) throw UsageError("invalid " + what + ": '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    for (const auto& item : split(s, ',')) out.push_back(static_cast<int>(parse_long(item, what)));
    return out;
}

/// "m=3,q2=2,q3=1" plus an optional "mp=4"; q keys are half-degrees.
struct ParsedProfile {
    std::optional<int> m;
    std::optional<int> mp;
    std::map<int, long> q;
};

ParsedProfile parse_profile(const std::string& s) {
    ParsedProfile p;
    for (const auto& item : split(s, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("profile entry without '=': '" + item + "'");
        const std::string key = item.substr(0, eq);
        const long value = parse_long(item.substr(eq + 1), "profile value");
        if (value < 0) throw UsageError("negative profile value in '" + item + "'");
        if (key == "m") {
            p.m = static_cast<int>(value);
        } else if (key == "mp") {
            p.mp = static_cast<int>(value);
        } else if (key.size() > 1 && key[0] == 'q') {
            const long j = parse_long(key.substr(1), "profile key");
            if (j < 0) throw UsageError("negative face index in '" + item + "'");
            if (value > 0) p.q[static_cast<int>(j)] = value;
        } else {
            throw UsageError("unknown profile key '" + key + "'");
        }
    }
    return p;
}

FaceProfile face_profile(const RunConfig& c) {
    const auto p = parse_profile(c.profile);
    if (!p.m) throw UsageError("--profile needs m=<root half-degree>");
    return FaceProfile(*p.m, p.q);
}

/// "2..12" or "5".
std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const long v = parse_long(s, "--faces");
        return {v, v};
    }
    const long lo = parse_long(s.substr(0, dots), "--faces");
    const long hi = parse_long(s.substr(dots + 2), "--faces");
    if (lo > hi) throw UsageError("empty range '" + s + "'");
    return {lo, hi};
}

void check_config(const RunConfig& c) {
    if (c.b < 0) throw UsageError("--b must be nonnegative");
    if (c.order < 0) throw UsageError("--order must be nonnegative");
    if (c.emax < 0) throw UsageError("--emax must be nonnegative");
    if (c.format != "plain" && c.format != "json" && c.format != "csv") {
        throw UsageError("--format must be plain, json or csv");
    }
}

WeightSpace weight_space(const RunConfig& c) {
    const auto js = parse_int_list(c.weights, "weight index");
    int m = c.weight_degree;
    if (m < 0) m = js.empty() ? 0 : 2;
    return WeightSpace(js, m);
}

std::string str(const Integer& v) { return v.get_str(); }

// ---- solve -----------------------------------------------------------------

std::string monomial_name(const WeightSpace& space, const Monomial& mon) {
    std::string out;
    for (std::size_t i = 0; i < mon.size(); ++i) {
        if (mon[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(2 * space.half_degrees[i]);
        if (mon[i] > 1) out += "^" + std::to_string(mon[i]);
    }
    return out.empty() ? "1" : out;
}

int cmd_solve(const RunConfig& c) {
    const IrreducibilityOrder order(c.b);
    const WeightSpace space = weight_space(c);
    require_admissible_weights(order, space);

    std::vector<std::pair<std::string, WeightedSeries>> out;
    if (!c.boundaries.empty()) {
        const BoundarySpec spec(order, parse_int_list(c.boundaries, "boundary"));
        if (spec.r() < 1) throw UsageError("--boundaries needs at least one half-degree");
        if (spec.r() == 1) {
            out.emplace_back("P", pointing_series(order, spec.half_degrees()[0], space, c.order));
        } else {
            out.emplace_back("F", gf_multi_boundaries(spec, space, c.order));
        }
    } else if (c.slices) {
        const auto system = solve_slice_system(order, space, c.order);
        out.emplace_back("R", system.R);
        for (std::size_t k = 0; k < system.U.size(); ++k) out.emplace_back("U" + std::to_string(k), system.U[k]);
        for (const auto& [j, s] : system.Z) out.emplace_back("Z" + std::to_string(j), s);
    } else {
        out.emplace_back("R", solve_R(order, space, c.order));
    }

    if (c.format == "json") {
        json j;
        j["command"] = "solve";
        j["b"] = c.b;
        j["order"] = c.order;
        j["weights"] = space.half_degrees;
        j["weight_degree"] = space.max_degree;
        if (!c.boundaries.empty()) j["boundaries"] = parse_int_list(c.boundaries, "boundary");
        json series = json::object();
        for (const auto& [name, s] : out) series[name] = series_to_json(s);
        j["series"] = series;
        std::cout << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "series,n,monomial,value\n";
        for (const auto& [name, s] : out) {
            for (int n = 0; n <= s.order(); ++n) {
                for (const auto& [mon, v] : s[n].terms()) {
                    std::cout << name << "," << n << "," << monomial_name(space, mon) << "," << v.to_string() << "\n";
                }
            }
        }
    } else {
        for (const auto& [name, s] : out) std::cout << name << " = " << series_to_string(s) << "\n";
        if (space.arity() == 0 && out.size() == 1) {
            const auto& s = out.front().second;
            std::cout << "[";
            for (int n = 0; n <= s.order(); ++n) std::cout << (n ? "," : "") << s.coefficient(n).to_string();
            std::cout << "]\n";
        }
    }
    return 0;
}

// ---- count / sequence ------------------------------------------------------

FormulaRecord count_family(const RunConfig& c) {
    const std::string& f = c.family;
    json params;
    auto record = [&](Integer v) { return FormulaRecord{f, params, std::move(v)}; };
    if (f == "profile") {
        const auto p = face_profile(c);
        params = {{"b", c.b}, {"profile", p.to_string()}};
        return record(count_profile(IrreducibilityOrder(c.b), p));
    }
    if (f == "oracle") {
        const auto p = face_profile(c);
        if (p.edges() > c.emax) throw UsageError("profile has " + std::to_string(p.edges()) + " edges, above --emax");
        params = {{"b", c.b}, {"profile", p.to_string()}};
        return record(census_count(IrreducibilityOrder(c.b), p));
    }
    if (f == "simple-bipartite" || f == "4irr" || f == "4irr-hyp" || f == "girth6" || f == "tutte") {
        const auto p = face_profile(c);
        params = {{"profile", p.to_string()}};
        if (f == "simple-bipartite") return record(count_simple_bipartite(p));
        if (f == "4irr") return record(count_4irreducible(p));
        if (f == "4irr-hyp") return record(count_4irreducible_hypergeometric(p));
        if (f == "girth6") return record(count_girth6(p));
        return record(count_bipartite_tutte(p));
    }
    if (f == "4irr-two-large" || f == "4irr-two-hex") {
        const auto p = parse_profile(c.profile);
        const int m = f == "4irr-two-hex" ? 3 : p.m.value_or(-1);
        const int mp = f == "4irr-two-hex" ? 3 : p.mp.value_or(-1);
        if (m < 0 || mp < 0) throw UsageError("--profile needs m=<m>,mp=<m'>");
        const long q2 = p.q.count(2) ? p.q.at(2) : 0;
        params = {{"m", m}, {"mp", mp}, {"q2", q2}};
        return record(count_two_large_faces_4irr(m, mp, q2));
    }
    if (f == "quad-simple" || f == "hex-girth6") {
        if (c.faces.empty()) throw UsageError("--faces is required for " + f);
        const long faces = parse_long(c.faces, "--faces");
        params = {{"faces", faces}};
        return record(f == "quad-simple" ? count_quadrangulations_simple(faces) : count_hexangulations_girth6(faces));
    }
    throw UsageError("unknown family '" + f + "'");
}

void print_record(const RunConfig& c, const FormulaRecord& r) {
    if (c.format == "json") {
        std::cout << to_json(r).dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "family,value\n" << r.formula << "," << str(r.value) << "\n";
    } else {
        std::cout << str(r.value) << "\n";
    }
}

int cmd_count(const RunConfig& c) {
    print_record(c, count_family(c));
    return 0;
}

int cmd_sequence(const RunConfig& c) {
    const std::string& f = c.family;
    std::string parameter;
    std::vector<std::pair<long, Integer>> rows;
    if (f == "4irr-two-hex" || f == "4irr-two-large") {
        if (c.max < 0) throw UsageError("--max is required for " + f);
        int m = 3, mp = 3;
        if (f == "4irr-two-large") {
            const auto p = parse_profile(c.profile);
            if (!p.m || !p.mp) throw UsageError("--profile needs m=<m>,mp=<m'>");
            m = *p.m;
            mp = *p.mp;
        }
        parameter = "q2";
        for (long q2 = 0; q2 <= c.max; ++q2) rows.emplace_back(q2, count_two_large_faces_4irr(m, mp, q2));
    } else if (f == "quad-simple" || f == "hex-girth6") {
        if (c.faces.empty()) throw UsageError("--faces is required for " + f);
        const auto [lo, hi] = parse_range(c.faces);
        parameter = "faces";
        for (long F = lo; F <= hi; ++F) {
            rows.emplace_back(F, f == "quad-simple" ? count_quadrangulations_simple(F) : count_hexangulations_girth6(F));
        }
    } else if (f == "tutte") {
        if (c.max < 0) throw UsageError("--max is required for tutte");
        parameter = "edges";
        for (long E = 1; E <= c.max; ++E) {
            Integer total = 0;
            // Sum over profiles: root half-degree m and a partition of E - m.
            for (int m = 1; m <= E; ++m) {
                std::map<int, long> q;
                std::function<void(int, long)> rec = [&](int j, long left) {
                    if (left == 0) {
                        total += count_bipartite_tutte(FaceProfile(m, q));
                        return;
                    }
                    if (j > left) return;
                    for (long k = 0; k * j <= left; ++k) {
                        if (k) q[j] = k;
                        rec(j + 1, left - k * j);
                    }
                    q.erase(j);
                };
                rec(1, E - m);
            }
            rows.emplace_back(E, total);
        }
    } else {
        throw UsageError("family '" + f + "' has no sequence preset");
    }

    if (c.format == "json") {
        json j;
        j["family"] = f;
        j["parameter"] = parameter;
        json values = json::array();
        for (const auto& [k, v] : rows) values.push_back({{parameter, k}, {"value", str(v)}});
        j["values"] = values;
        std::cout << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << parameter << ",value\n";
        for (const auto& [k, v] : rows) std::cout << k << "," << str(v) << "\n";
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) std::cout << (i ? ", " : "") << str(rows[i].second);
        std::cout << "\n";
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct Outcome {
    std::string name;
    bool passed;
    std::string detail;
};

void verify_identity_suite(const RunConfig& c, std::vector<Outcome>& out) {
    const IrreducibilityOrder order(c.b);
    WeightSpace space = weight_space(c);
    if (space.arity() == 0) space = WeightSpace({c.b + 1}, c.weight_degree < 0 ? 2 : c.weight_degree);
    std::vector<std::vector<int>> specs;
    if (!c.boundaries.empty()) {
        specs.push_back(parse_int_list(c.boundaries, "boundary"));
    } else {
        for (int r = 2; r <= 4; ++r) specs.emplace_back(static_cast<std::size_t>(r), c.b + 1);
        specs.push_back({c.b + 1, c.b + 2});
    }
    for (const auto& js : specs) {
        const BoundarySpec spec(order, js);
        const auto report = verify_identities(spec, space, c.order);
        std::string tag = "identities b=" + std::to_string(c.b) + " js=";
        for (std::size_t i = 0; i < js.size(); ++i) tag += (i ? "," : "") + std::to_string(js[i]);
        for (const auto& check : report.checks) out.push_back({tag + " " + check.name, check.passed, check.detail});
    }
}

void verify_tree_suite(const RunConfig& c, std::vector<Outcome>& out) {
    const IrreducibilityOrder order(c.b);
    WeightSpace space = weight_space(c);
    if (space.arity() == 0) space = WeightSpace({c.b + 1}, c.weight_degree < 0 ? 2 : c.weight_degree);
    const std::string tag = "trees b=" + std::to_string(c.b);
    const auto series = verify_tree_series(order, space, c.order);
    const auto* bad = series.first_failure();
    out.push_back({tag + " series (" + std::to_string(series.checks.size()) + " coefficients)", bad == nullptr,
                   bad ? bad->describe() : ""});
    const auto listing = verify_tree_listing(order, space, c.order, 12);
    bad = listing.first_failure();
    out.push_back({tag + " listing (" + std::to_string(listing.checks.size()) + " tallies)", bad == nullptr,
                   bad ? bad->describe() : ""});
}

void verify_oracle_suite(const RunConfig& c, std::vector<Outcome>& out) {
    if (c.emax > oracle_edge_ceiling()) {
        throw UsageError("--emax " + std::to_string(c.emax) + " exceeds the oracle ceiling " +
                         std::to_string(oracle_edge_ceiling()));
    }
    const IrreducibilityOrder order(c.b);
    if (c.b == 2) {
        const long expected[] = {1, 6, 21};
        for (long q2 = 0; q2 <= 2; ++q2) {
            const FaceProfile p(3, {{3, 1}, {2, q2}});
            if (p.edges() > c.emax) continue;
            const Integer oracle = census_count(order, p);
            const Integer formula = count_two_large_faces_4irr(3, 3, q2);
            out.push_back({"oracle two-hex " + p.to_string(), oracle == expected[q2] && formula == expected[q2],
                           "oracle " + str(oracle) + ", formula " + str(formula)});
        }
    }
    for (int E = 1; E <= c.emax; ++E) {
        const auto tally = oracle_census(order, E);
        int compared = 0;
        std::string first_bad;
        for (const auto& [key, n] : tally) {
            const FaceProfile p(key.first, key.second);
            Integer formula;
            try {
                formula = count_profile(order, p);
            } catch (const ValidityError&) {
                continue;
            }
            ++compared;
            if (formula != n && first_bad.empty()) {
                first_bad = p.to_string() + ": oracle " + str(n) + ", formula " + str(formula);
            }
        }
        out.push_back({"oracle census b=" + std::to_string(c.b) + " E=" + std::to_string(E) + " (" +
                           std::to_string(compared) + " profiles)",
                       first_bad.empty(), first_bad});
    }
    if (c.b == 0) {
        const Integer two = count_bipartite_tutte(FaceProfile(2, {}));
        const Integer one = count_bipartite_tutte(FaceProfile(1, {{1, 1}}));
        const Integer maps = count_rooted_maps(2, true);
        out.push_back({"oracle tutte E=2", two == 2 && one == 1 && two + one == maps,
                       str(two) + " + " + str(one) + " vs " + str(maps)});
    }
}

int cmd_verify(const RunConfig& c) {
    std::vector<Outcome> out;
    const bool all = c.suite == "all";
    if (!all && c.suite != "identities" && c.suite != "trees" && c.suite != "oracle") {
        throw UsageError("--suite must be identities, trees, oracle or all");
    }
    if (all || c.suite == "identities") verify_identity_suite(c, out);
    if (all || c.suite == "trees") verify_tree_suite(c, out);
    if (all || c.suite == "oracle") verify_oracle_suite(c, out);

    bool passed = true;
    for (const auto& o : out) passed = passed && o.passed;
    if (c.format == "json") {
        json j;
        j["suite"] = c.suite;
        j["b"] = c.b;
        j["passed"] = passed;
        json checks = json::array();
        for (const auto& o : out) checks.push_back({{"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
        j["checks"] = checks;
        std::cout << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "check,passed,detail\n";
        for (const auto& o : out) std::cout << '"' << o.name << "\"," << (o.passed ? "true" : "false") << ",\"" << o.detail << "\"\n";
    } else {
        for (const auto& o : out) {
            std::cout << (o.passed ? "PASS " : "FAIL ") << o.name;
            if (!o.passed && !o.detail.empty()) std::cout << ": " << o.detail;
            std::cout << "\n";
        }
        std::cout << (passed ? "pass" : "fail") << " (" << out.size() << " checks)\n";
    }
    return passed ? 0 : 1;
}

// ---- maps / census ---------------------------------------------------------

int cmd_maps(const RunConfig& c, bool irreducible_only) {
    json arr = json::array();
    const int d = 2 * c.b;
    enumerate_rooted_maps({c.emax, c.emax, true}, [&](const CombinatorialMap& m) {
        if (irreducible_only) {
            const int root = root_face_index(m);
            if (faces_of(m)[static_cast<std::size_t>(root)].degree <= d || !is_d_irreducible(m, d, {root})) return;
        }
        arr.push_back(map_to_json(m));
    });
    if (c.format == "plain") {
        std::cout << arr.size() << "\n";
    } else {
        std::cout << arr.dump(c.format == "json" ? 2 : -1) << "\n";
    }
    return 0;
}

int cmd_census(const RunConfig& c) {
    if (c.emax > oracle_edge_ceiling()) {
        throw UsageError("--emax exceeds the oracle ceiling " + std::to_string(oracle_edge_ceiling()));
    }
    const IrreducibilityOrder order(c.b);
    json rows = json::array();
    if (c.format != "json") std::cout << "edges,profile,oracle,formula\n";
    for (int E = 1; E <= c.emax; ++E) {
        for (const auto& [key, n] : oracle_census(order, E)) {
            const FaceProfile p(key.first, key.second);
            std::string formula = "invalid";
            try {
                formula = str(count_profile(order, p));
            } catch (const ValidityError&) {
            }
            if (c.format == "json") {
                rows.push_back({{"edges", E}, {"profile", p.to_string()}, {"oracle", str(n)}, {"formula", formula}});
            } else {
                std::cout << E << ",\"" << p.to_string() << "\"," << str(n) << "," << formula << "\n";
            }
        }
    }
    if (c.format == "json") std::cout << rows.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of d-irreducible bipartite planar maps"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--b", c.b, "Irreducibility parameter, d = 2b");
        sub->add_option("--format", c.format, "plain, json or csv");
    };
    auto add_series = [&](CLI::App* sub) {
        sub->add_option("--order", c.order, "Truncation order N in z");
        sub->add_option("--weights", c.weights, "Active half-degrees j of the weights x_2j, e.g. 3,4");
        sub->add_option("--weight-degree", c.weight_degree, "Total weight-degree bound M");
        sub->add_option("--boundaries", c.boundaries, "Boundary half-degrees j_1,..,j_r");
    };

    auto* solve = app.add_subcommand("solve", "Solve for R (and optionally the slice series)");
    add_common(solve);
    add_series(solve);
    solve->add_flag("--slices", c.slices, "Also print U_k and Z_j");

    auto* count = app.add_subcommand("count", "Evaluate one census formula");
    add_common(count);
    count->add_option("--family", c.family, "profile, oracle, simple-bipartite, quad-simple, 4irr, 4irr-hyp, "
                                            "4irr-two-large, 4irr-two-hex, girth6, hex-girth6, tutte")
        ->required();
    count->add_option("--profile", c.profile, "e.g. m=3,q2=2,q3=1 (mp=<m'> for two large faces)");
    count->add_option("--faces", c.faces, "Number of faces F");
    count->add_option("--emax", c.emax, "Largest edge count for the oracle family");

    auto* sequence = app.add_subcommand("sequence", "Sweep one parameter of a census formula");
    add_common(sequence);
    sequence->add_option("--family", c.family, "4irr-two-hex, 4irr-two-large, quad-simple, hex-girth6, tutte")
        ->required();
    sequence->add_option("--profile", c.profile, "m=<m>,mp=<m'> for 4irr-two-large");
    sequence->add_option("--faces", c.faces, "Face range, e.g. 2..12");
    sequence->add_option("--max", c.max, "Largest q2 (or E for tutte)");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_common(verify);
    add_series(verify);
    verify->add_option("--suite", c.suite, "identities, trees, oracle or all");
    verify->add_option("--emax", c.emax, "Largest edge count for the oracle suite");

    auto* maps = app.add_subcommand("maps", "Dump rooted bipartite maps with exactly --emax edges");
    add_common(maps);
    maps->add_option("--emax", c.emax, "Edge count");
    bool irreducible_only = false;
    maps->add_flag("--irreducible", irreducible_only, "Keep d-irreducible maps with root face degree > d");

    auto* census = app.add_subcommand("census", "Oracle census table against the formula");
    add_common(census);
    census->add_option("--emax", c.emax, "Largest edge count");
    census->footer("CSV columns: edges, profile, oracle, formula");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        check_config(c);
        if (*solve) return cmd_solve(c);
        if (*count) return cmd_count(c);
        if (*sequence) return cmd_sequence(c);
        if (*verify) return cmd_verify(c);
        if (*maps) return cmd_maps(c, irreducible_only);
        if (*census) return cmd_census(c);
    } catch (const ValidityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OracleLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
