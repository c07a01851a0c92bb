#include "irredmap/maps.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace irredmap {

int oracle_edge_ceiling() {
    const char* env = std::getenv("IRREDMAP_EMAX_CEILING");
    if (!env || !*env) return kDefaultOracleCeiling;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) return kDefaultOracleCeiling;
    return static_cast<int>(std::min<long>(v, kMaxOracleEdges));
}

// ---- CombinatorialMap ---------------------------------------------------------

namespace {

std::vector<int> xor_involution(std::size_t n) {
    std::vector<int> a(n);
    for (std::size_t d = 0; d < n; ++d) a[d] = static_cast<int>(d ^ 1U);
    return a;
}

void require_permutation(const std::vector<int>& p, const char* what) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument(std::string(what) + " is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

// Orbit index of every dart under a permutation.
std::vector<int> orbits(std::size_t n, const std::function<int(int)>& step) {
    std::vector<int> id(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (id[s] != -1) continue;
        int d = static_cast<int>(s);
        do {
            id[static_cast<std::size_t>(d)] = next;
            d = step(d);
        } while (d != static_cast<int>(s));
        ++next;
    }
    return id;
}

int orbit_count(const std::vector<int>& ids) {
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

}  // namespace

CombinatorialMap::CombinatorialMap(std::vector<int> sigma) : CombinatorialMap(xor_involution(sigma.size()), sigma, 0) {}

CombinatorialMap::CombinatorialMap(std::vector<int> alpha, std::vector<int> sigma, int root)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)), root_(root) {
    if (alpha_.size() != sigma_.size()) throw std::invalid_argument("alpha and sigma sizes differ");
    if (sigma_.size() % 2 != 0) throw std::invalid_argument("odd number of darts");
    require_permutation(alpha_, "alpha");
    require_permutation(sigma_, "sigma");
    for (std::size_t d = 0; d < alpha_.size(); ++d) {
        const int a = alpha_[d];
        if (a == static_cast<int>(d) || alpha_[static_cast<std::size_t>(a)] != static_cast<int>(d)) {
            throw std::invalid_argument("alpha is not a fixed-point-free involution");
        }
    }
    if (sigma_.empty() ? root != 0 : (root < 0 || root >= darts())) throw std::invalid_argument("root is not a dart");
}

int CombinatorialMap::vertex_count() const {
    if (darts() == 0) return 1;
    return orbit_count(vertex_of_darts(*this));
}

int CombinatorialMap::face_count() const {
    if (darts() == 0) return 1;
    return orbit_count(face_index_of_darts(*this));
}

bool CombinatorialMap::is_connected() const {
    if (darts() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(darts()), 0);
    std::vector<int> stack{root_};
    seen[static_cast<std::size_t>(root_)] = 1;
    int visited = 0;
    while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        ++visited;
        for (int n : {alpha(d), sigma(d)}) {
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = 1;
                stack.push_back(n);
            }
        }
    }
    return visited == darts();
}

CombinatorialMap CombinatorialMap::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != darts()) throw std::invalid_argument("relabeling has the wrong size");
    require_permutation(perm, "relabeling");
    std::vector<int> a(perm.size()), s(perm.size());
    for (std::size_t d = 0; d < perm.size(); ++d) {
        a[static_cast<std::size_t>(perm[d])] = perm[static_cast<std::size_t>(alpha_[d])];
        s[static_cast<std::size_t>(perm[d])] = perm[static_cast<std::size_t>(sigma_[d])];
    }
    return CombinatorialMap(std::move(a), std::move(s), darts() ? perm[static_cast<std::size_t>(root_)] : 0);
}

std::vector<int> CombinatorialMap::canonical_code() const {
    const auto n = static_cast<std::size_t>(darts());
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    if (n == 0) return {};
    label[static_cast<std::size_t>(root_)] = 0;
    order.push_back(root_);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int nb : {alpha(order[i]), sigma(order[i])}) {
            if (label[static_cast<std::size_t>(nb)] == -1) {
                label[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
                order.push_back(nb);
            }
        }
    }
    if (order.size() != n) throw std::logic_error("canonical_code: map is not connected");
    std::vector<int> code;
    code.reserve(2 * n);
    for (int d : order) {
        code.push_back(label[static_cast<std::size_t>(alpha(d))]);
        code.push_back(label[static_cast<std::size_t>(sigma(d))]);
    }
    return code;
}

std::vector<int> vertex_of_darts(const CombinatorialMap& m) {
    return orbits(static_cast<std::size_t>(m.darts()), [&](int d) { return m.sigma(d); });
}

std::vector<int> face_index_of_darts(const CombinatorialMap& m) {
    return orbits(static_cast<std::size_t>(m.darts()), [&](int d) { return m.phi(d); });
}

std::vector<Face> faces_of(const CombinatorialMap& m) {
    if (m.darts() == 0) return {Face{0, {}}};
    const auto ids = face_index_of_darts(m);
    std::vector<Face> faces(static_cast<std::size_t>(orbit_count(ids)));
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const int start = static_cast<int>(std::find(ids.begin(), ids.end(), static_cast<int>(f)) - ids.begin());
        int d = start;
        do {
            faces[f].darts.push_back(d);
            d = m.phi(d);
        } while (d != start);
        faces[f].degree = static_cast<int>(faces[f].darts.size());
    }
    return faces;
}

int root_face_index(const CombinatorialMap& m) {
    if (m.darts() == 0) return 0;
    return face_index_of_darts(m)[static_cast<std::size_t>(m.root())];
}

// ---- graph properties -----------------------------------------------------------

namespace {

struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;                  // endpoints per edge id
    std::vector<std::vector<std::pair<int, int>>> adjacent;  // (neighbor, edge id)
    std::vector<int> edge_of_dart;
};

Graph graph_of(const CombinatorialMap& m) {
    Graph g;
    const auto vertex = vertex_of_darts(m);
    g.vertices = m.vertex_count();
    g.adjacent.resize(static_cast<std::size_t>(g.vertices));
    g.edge_of_dart.assign(static_cast<std::size_t>(m.darts()), -1);
    for (int d = 0; d < m.darts(); ++d) {
        const int a = m.alpha(d);
        if (d > a) continue;
        const int id = static_cast<int>(g.edges.size());
        g.edge_of_dart[static_cast<std::size_t>(d)] = id;
        g.edge_of_dart[static_cast<std::size_t>(a)] = id;
        const int u = vertex[static_cast<std::size_t>(d)], v = vertex[static_cast<std::size_t>(a)];
        g.edges.emplace_back(u, v);
        g.adjacent[static_cast<std::size_t>(u)].emplace_back(v, id);
        if (u != v) g.adjacent[static_cast<std::size_t>(v)].emplace_back(u, id);
    }
    return g;
}

}  // namespace

bool is_bipartite(const CombinatorialMap& m) {
    const Graph g = graph_of(m);
    std::vector<int> color(static_cast<std::size_t>(g.vertices), -1);
    for (int s = 0; s < g.vertices; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (const auto& [v, e] : g.adjacent[static_cast<std::size_t>(u)]) {
                if (v == u) return false;
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv == -1) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Girth Girth::finite(int length) {
    if (length < 1) throw std::invalid_argument("girth must be positive");
    Girth g;
    g.infinite_ = false;
    g.length_ = length;
    return g;
}

int Girth::value() const {
    if (infinite_) throw std::logic_error("girth is infinite");
    return length_;
}

std::string Girth::to_string() const { return infinite_ ? "inf" : std::to_string(length_); }

Girth girth(const CombinatorialMap& m) {
    const Graph g = graph_of(m);
    int best = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        if (u == v) return Girth::finite(1);
        // Shortest u-v path avoiding edge e closes a cycle through e.
        std::vector<int> dist(static_cast<std::size_t>(g.vertices), -1);
        dist[static_cast<std::size_t>(u)] = 0;
        std::deque<int> queue{u};
        while (!queue.empty() && dist[static_cast<std::size_t>(v)] == -1) {
            const int x = queue.front();
            queue.pop_front();
            for (const auto& [y, id] : g.adjacent[static_cast<std::size_t>(x)]) {
                if (id == static_cast<int>(e) || dist[static_cast<std::size_t>(y)] != -1) continue;
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
        const int dv = dist[static_cast<std::size_t>(v)];
        if (dv != -1 && (best == 0 || dv + 1 < best)) best = dv + 1;
    }
    return best == 0 ? Girth::infinite() : Girth::finite(best);
}

std::vector<std::vector<int>> simple_cycles(const CombinatorialMap& m, int length) {
    if (length < 1) throw std::invalid_argument("cycle length must be positive");
    const Graph g = graph_of(m);
    std::set<std::vector<int>> found;
    std::vector<int> path_edges;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertices), 0);

    // Cycles are discovered from their smallest vertex s.
    std::function<void(int, int)> extend = [&](int s, int x) {
        for (const auto& [y, id] : g.adjacent[static_cast<std::size_t>(x)]) {
            if (std::find(path_edges.begin(), path_edges.end(), id) != path_edges.end()) continue;
            const int steps = static_cast<int>(path_edges.size()) + 1;
            if (y == s) {
                if (steps == length) {
                    auto cycle = path_edges;
                    cycle.push_back(id);
                    std::sort(cycle.begin(), cycle.end());
                    found.insert(std::move(cycle));
                }
                continue;
            }
            if (y < s || on_path[static_cast<std::size_t>(y)] || steps >= length) continue;
            on_path[static_cast<std::size_t>(y)] = 1;
            path_edges.push_back(id);
            extend(s, y);
            path_edges.pop_back();
            on_path[static_cast<std::size_t>(y)] = 0;
        }
    };
    for (int s = 0; s < g.vertices; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        extend(s, s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return {found.begin(), found.end()};
}

bool is_d_irreducible(const CombinatorialMap& m, int d, const std::vector<int>& marked_faces) {
    if (d < 0 || d % 2 != 0) throw std::invalid_argument("d must be a nonnegative even integer");
    if (!is_bipartite(m)) return false;
    if (d == 0) return true;
    const auto faces = faces_of(m);
    std::vector<char> marked(faces.size(), 0);
    for (int f : marked_faces) {
        if (f < 0 || static_cast<std::size_t>(f) >= faces.size()) throw std::invalid_argument("marked face out of range");
        if (faces[static_cast<std::size_t>(f)].degree <= d) return false;
        marked[static_cast<std::size_t>(f)] = 1;
    }
    if (!girth(m).at_least(d)) return false;
    const auto cycles = simple_cycles(m, d);
    if (cycles.empty()) return true;
    const Graph g = graph_of(m);
    std::set<std::vector<int>> inner_d_faces;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (marked[f] || faces[f].degree != d) continue;
        std::vector<int> es;
        for (int dart : faces[f].darts) es.push_back(g.edge_of_dart[static_cast<std::size_t>(dart)]);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        inner_d_faces.insert(std::move(es));
    }
    return std::all_of(cycles.begin(), cycles.end(), [&](const auto& c) { return inner_d_faces.count(c) > 0; });
}

// ---- enumeration ----------------------------------------------------------------

namespace {

// All rooted maps with a fixed edge count, sigma arrays packed back to back
// (alpha is d xor 1 and the root is dart 0).
struct Level {
    int edges = 0;
    std::vector<std::uint8_t> flat;
    std::size_t size() const { return edges == 0 ? 1 : flat.size() / (2 * static_cast<std::size_t>(edges)); }
    const std::uint8_t* at(std::size_t i) const { return flat.data() + i * 2 * static_cast<std::size_t>(edges); }
};

constexpr int kMaxGeneralEdges = 8;

class Generator {
public:
    explicit Generator(bool bipartite) : bipartite_(bipartite) {}

    // Visits every map with exactly `edges` edges.
    void for_each(int edges, const std::function<void(const std::vector<int>&)>& visit) {
        const Level* stored = nullptr;
        {
            std::lock_guard lock(mutex_);
            ensure(std::min(edges, cache_limit()));
            if (edges <= cache_limit()) stored = levels_[static_cast<std::size_t>(edges)].get();
            else ensure(edges - 1);
        }
        if (stored) {
            std::vector<int> sig(2 * static_cast<std::size_t>(edges));
            for (std::size_t i = 0; i < stored->size(); ++i) {
                const auto* p = stored->at(i);
                for (std::size_t d = 0; d < sig.size(); ++d) sig[d] = p[d];
                visit(sig);
            }
            return;
        }
        produce(edges, visit);
    }

private:
    int cache_limit() const { return bipartite_ ? 10 : 7; }

    void ensure(int edges) {
        while (static_cast<int>(levels_.size()) <= edges) {
            const int e = static_cast<int>(levels_.size());
            auto level = std::make_unique<Level>();
            level->edges = e;
            if (e > 0) {
                produce(e, [&](const std::vector<int>& sig) {
                    for (int v : sig) level->flat.push_back(static_cast<std::uint8_t>(v));
                });
            }
            levels_.push_back(std::move(level));
        }
    }

    void produce(int edges, const std::function<void(const std::vector<int>&)>& emit) const {
        const auto n = 2 * static_cast<std::size_t>(edges);
        std::vector<int> sig(n);

        // Root edge is a bridge: left map at the root vertex, right map at the other end.
        for (int e1 = 0; e1 < edges; ++e1) {
            const int e2 = edges - 1 - e1;
            const Level& left = *levels_[static_cast<std::size_t>(e1)];
            const Level& right = *levels_[static_cast<std::size_t>(e2)];
            const int off2 = 2 + 2 * e1;
            for (std::size_t i = 0; i < left.size(); ++i) {
                const auto* s1 = e1 ? left.at(i) : nullptr;
                for (std::size_t k = 0; k < right.size(); ++k) {
                    const auto* s2 = e2 ? right.at(k) : nullptr;
                    sig[0] = e1 ? 2 : 0;
                    for (int d = 0; d < 2 * e1; ++d) sig[static_cast<std::size_t>(d + 2)] = s1[d] == 0 ? 0 : s1[d] + 2;
                    sig[1] = e2 ? off2 : 1;
                    for (int d = 0; d < 2 * e2; ++d) {
                        sig[static_cast<std::size_t>(d + off2)] = s2[d] == 0 ? 1 : s2[d] + off2;
                    }
                    emit(sig);
                }
            }
        }

        // Root edge is not a bridge: it splits the root face of a map with one edge less.
        const Level& prev = *levels_[static_cast<std::size_t>(edges - 1)];
        std::vector<int> base(n), inv(n), face;
        for (std::size_t i = 0; i < prev.size(); ++i) {
            if (edges == 1) {
                if (bipartite_) break;
                sig[0] = 1;
                sig[1] = 0;
                emit(sig);
                break;
            }
            const auto* s = prev.at(i);
            for (std::size_t d = 0; d + 2 < n; ++d) base[d + 2] = s[d] + 2;
            face.clear();
            int x = 0;
            do {
                face.push_back(x + 2);
                x = s[x ^ 1];
            } while (x != 0);
            for (std::size_t d = 2; d < n; ++d) inv[static_cast<std::size_t>(base[d])] = static_cast<int>(d);
            const int x0 = face[0];
            const int before_x0 = inv[static_cast<std::size_t>(x0)];
            for (std::size_t pos = 0; pos < face.size(); ++pos) {
                if (bipartite_ && pos % 2 == 0) continue;
                if (pos == 0) {
                    // Both new darts in the root corner, in either order.
                    sig = base;
                    sig[static_cast<std::size_t>(before_x0)] = 0;
                    sig[0] = 1;
                    sig[1] = x0;
                    emit(sig);
                    sig = base;
                    sig[static_cast<std::size_t>(before_x0)] = 1;
                    sig[1] = 0;
                    sig[0] = x0;
                    emit(sig);
                    continue;
                }
                const int xi = face[pos];
                sig = base;
                sig[static_cast<std::size_t>(before_x0)] = 0;
                sig[0] = x0;
                sig[static_cast<std::size_t>(inv[static_cast<std::size_t>(xi)])] = 1;
                sig[1] = xi;
                emit(sig);
            }
        }
    }

    bool bipartite_;
    std::vector<std::unique_ptr<Level>> levels_;
    std::mutex mutex_;
};

Generator& generator(bool bipartite) {
    static Generator bip(true), all(false);
    return bipartite ? bip : all;
}

void require_within_ceiling(int edges, bool bipartite = true) {
    if (!bipartite && edges > kMaxGeneralEdges) {
        throw OracleLimitError("general (non-bipartite) enumeration is limited to " +
                               std::to_string(kMaxGeneralEdges) + " edges");
    }
    const int ceiling = oracle_edge_ceiling();
    if (edges > ceiling) {
        throw OracleLimitError("map oracle limited to " + std::to_string(ceiling) + " edges (requested " +
                               std::to_string(edges) + "; raise IRREDMAP_EMAX_CEILING up to " +
                               std::to_string(kMaxOracleEdges) + ")");
    }
}

}  // namespace

void enumerate_rooted_maps(const EnumerationOptions& options, const std::function<void(const CombinatorialMap&)>& visit) {
    if (options.max_edges < 0 || options.min_edges < 0) throw std::invalid_argument("edge bounds must be nonnegative");
    require_within_ceiling(options.max_edges, options.bipartite_only);
    for (int e = std::max(options.min_edges, 1); e <= options.max_edges; ++e) {
        generator(options.bipartite_only).for_each(e, [&](const std::vector<int>& sig) { visit(CombinatorialMap(sig)); });
    }
    if (options.min_edges == 0) visit(CombinatorialMap());
}

Integer count_rooted_maps(int edges, bool bipartite_only) {
    if (edges == 0) return 1;
    Integer n = 0;
    enumerate_rooted_maps({edges, edges, bipartite_only}, [&](const CombinatorialMap&) { ++n; });
    return n;
}

// ---- census ----------------------------------------------------------------------

ProfileKey profile_key(const FaceProfile& p) { return {p.m(), p.q()}; }

namespace {

struct FaceSummary {
    std::vector<Face> faces;
    int root = 0;
};

FaceSummary summarize(const CombinatorialMap& m) {
    FaceSummary s;
    s.faces = faces_of(m);
    s.root = root_face_index(m);
    return s;
}

}  // namespace

std::map<ProfileKey, Integer> oracle_census(IrreducibilityOrder order, int edges) {
    require_within_ceiling(edges);
    const int d = order.d();
    std::map<ProfileKey, Integer> tally;
    enumerate_rooted_maps({edges, edges, true}, [&](const CombinatorialMap& m) {
        const auto s = summarize(m);
        const int root_degree = s.faces[static_cast<std::size_t>(s.root)].degree;
        if (root_degree <= d) return;
        ProfileKey key{root_degree / 2, {}};
        for (std::size_t f = 0; f < s.faces.size(); ++f) {
            if (static_cast<int>(f) != s.root) key.second[s.faces[f].degree / 2]++;
        }
        if (!is_d_irreducible(m, d, {s.root})) return;
        tally[key] += 1;
    });
    return tally;
}

Integer census_count(IrreducibilityOrder order, const FaceProfile& profile) {
    const long edges = profile.edges();
    require_within_ceiling(static_cast<int>(edges));
    if (profile.m() < order.min_half_degree()) throw std::invalid_argument("root face degree must exceed d");
    const ProfileKey want = profile_key(profile);
    const int d = order.d();
    Integer n = 0;
    enumerate_rooted_maps({static_cast<int>(edges), static_cast<int>(edges), true}, [&](const CombinatorialMap& m) {
        const auto s = summarize(m);
        ProfileKey key{s.faces[static_cast<std::size_t>(s.root)].degree / 2, {}};
        for (std::size_t f = 0; f < s.faces.size(); ++f) {
            if (static_cast<int>(f) != s.root) key.second[s.faces[f].degree / 2]++;
        }
        if (key != want) return;
        if (is_d_irreducible(m, d, {s.root})) ++n;
    });
    return n;
}

Integer multi_boundary_count(IrreducibilityOrder order, const BoundarySpec& spec,
                             const std::map<int, long>& inner_profile) {
    if (!(spec.order() == order)) throw std::invalid_argument("boundary spec has a different irreducibility order");
    const int b = order.b();
    const int d = order.d();
    const auto& js = spec.half_degrees();
    long edges = std::accumulate(js.begin(), js.end(), 0L);
    std::map<int, long> inner_faces;
    long vertices = -1;
    for (const auto& [j, c] : inner_profile) {
        if (c < 0) throw std::invalid_argument("negative inner face count");
        if (c == 0) continue;
        if (b == 0 && j == 0) {
            vertices = c;
            continue;
        }
        if (j < std::max(b, 1)) throw std::invalid_argument("inner faces must have degree >= d");
        inner_faces[j] = c;
        edges += j * c;
    }
    if (b == 0 && vertices < 0) vertices = 0;
    require_within_ceiling(static_cast<int>(edges));

    Integer n = 0;
    const int r = spec.r();
    enumerate_rooted_maps({static_cast<int>(edges), static_cast<int>(edges), true}, [&](const CombinatorialMap& m) {
        const auto s = summarize(m);
        if (s.faces[static_cast<std::size_t>(s.root)].degree != 2 * js[0]) return;
        if (b == 0 && m.vertex_count() != vertices) return;
        const int F = static_cast<int>(s.faces.size());
        // Ordered choice of distinct non-root faces for boundaries 2..r.
        std::vector<int> chosen{s.root};
        std::function<void(int)> pick = [&](int l) {
            if (l == r) {
                std::map<int, long> rest;
                for (int f = 0; f < F; ++f) {
                    if (std::find(chosen.begin(), chosen.end(), f) == chosen.end()) {
                        rest[s.faces[static_cast<std::size_t>(f)].degree / 2]++;
                    }
                }
                if (rest != inner_faces) return;
                if (!is_d_irreducible(m, d, chosen)) return;
                Integer ways = 1;
                for (int k = 1; k < r; ++k) ways *= s.faces[static_cast<std::size_t>(chosen[static_cast<std::size_t>(k)])].degree;
                n += ways;
                return;
            }
            for (int f = 0; f < F; ++f) {
                if (std::find(chosen.begin(), chosen.end(), f) != chosen.end()) continue;
                if (s.faces[static_cast<std::size_t>(f)].degree != 2 * js[static_cast<std::size_t>(l)]) continue;
                chosen.push_back(f);
                pick(l + 1);
                chosen.pop_back();
            }
        };
        pick(1);
    });
    return n;
}

// ---- JSON ------------------------------------------------------------------------

nlohmann::ordered_json map_to_json(const CombinatorialMap& m) {
    nlohmann::ordered_json j;
    j["darts"] = m.darts();
    j["alpha"] = m.alpha_perm();
    j["sigma"] = m.sigma_perm();
    j["root"] = m.root();
    return j;
}

CombinatorialMap map_from_json(const nlohmann::ordered_json& j) {
    auto alpha = j.at("alpha").get<std::vector<int>>();
    auto sigma = j.at("sigma").get<std::vector<int>>();
    if (j.at("darts").get<int>() != static_cast<int>(sigma.size())) throw std::invalid_argument("map JSON: dart count mismatch");
    return CombinatorialMap(std::move(alpha), std::move(sigma), j.at("root").get<int>());
}

}  // namespace irredmap
