#pragma once

// Rooted planar maps as rotation systems, exhaustively generated.
//
// Darts 0..2E-1; alpha pairs darts into edges, sigma is the counterclockwise
// rotation around each vertex. Faces are the orbits of phi = sigma o alpha;
// the face containing dart d is "the face on the right of d". The root face
// is the face containing the root dart.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "irredmap/census.hpp"

namespace irredmap {

/// Largest edge count the generator accepts at all.
inline constexpr int kMaxOracleEdges = 11;
/// Default ceiling, overridable with IRREDMAP_EMAX_CEILING.
inline constexpr int kDefaultOracleCeiling = 10;
/// Effective ceiling: the environment value clamped to kMaxOracleEdges.
int oracle_edge_ceiling();

/// Raised when a request exceeds the oracle ceiling.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CombinatorialMap {
public:
    /// The vertex map: no darts, one vertex, one face.
    CombinatorialMap() = default;
    /// alpha(d) = d xor 1, root 0.
    explicit CombinatorialMap(std::vector<int> sigma);
    /// General form; throws std::invalid_argument unless alpha is a
    /// fixed-point-free involution, sigma a permutation and root a dart.
    CombinatorialMap(std::vector<int> alpha, std::vector<int> sigma, int root);

    int darts() const { return static_cast<int>(sigma_.size()); }
    int edges() const { return darts() / 2; }
    int root() const { return root_; }
    int alpha(int d) const { return alpha_[static_cast<std::size_t>(d)]; }
    int sigma(int d) const { return sigma_[static_cast<std::size_t>(d)]; }
    int phi(int d) const { return sigma(alpha(d)); }
    const std::vector<int>& alpha_perm() const { return alpha_; }
    const std::vector<int>& sigma_perm() const { return sigma_; }

    int vertex_count() const;
    int face_count() const;
    /// 2 - 2g = V - E + F.
    int euler_characteristic() const { return vertex_count() - edges() + face_count(); }
    bool is_connected() const;
    bool is_planar() const { return is_connected() && euler_characteristic() == 2; }

    /// Same map with darts renamed d -> perm[d].
    CombinatorialMap relabeled(const std::vector<int>& perm) const;

    /// Labeling-independent code of the rooted map: darts renumbered in
    /// breadth-first order from the root following alpha then sigma.
    std::vector<int> canonical_code() const;

private:
    std::vector<int> alpha_;
    std::vector<int> sigma_;
    int root_ = 0;
};

struct Face {
    int degree = 0;
    std::vector<int> darts;  // phi-orbit starting at its smallest dart
};

/// Faces in order of their smallest dart. The vertex map has one face of degree 0.
std::vector<Face> faces_of(const CombinatorialMap& m);
/// Index into faces_of(m) of the face containing each dart.
std::vector<int> face_index_of_darts(const CombinatorialMap& m);
/// Index of the root face in faces_of(m).
int root_face_index(const CombinatorialMap& m);
/// Vertex index (sigma-orbit) of each dart.
std::vector<int> vertex_of_darts(const CombinatorialMap& m);

/// Proper 2-colorability of the vertices.
bool is_bipartite(const CombinatorialMap& m);

/// Length of a shortest cycle, or infinite for acyclic maps.
class Girth {
public:
    static Girth infinite() { return Girth(); }
    static Girth finite(int length);

    bool is_infinite() const { return infinite_; }
    /// Throws std::logic_error when infinite.
    int value() const;
    bool at_least(int d) const { return infinite_ || length_ >= d; }
    std::string to_string() const;

    friend bool operator==(const Girth&, const Girth&) = default;

private:
    Girth() = default;
    bool infinite_ = true;
    int length_ = 0;
};

Girth girth(const CombinatorialMap& m);

/// Edge sets (sorted edge ids, edge id = min dart / 2 of the alpha pair) of
/// every simple cycle of length exactly `length`.
std::vector<std::vector<int>> simple_cycles(const CombinatorialMap& m, int length);

/// d-irreducibility with the given faces (indices into faces_of) marked:
/// girth >= d, every simple d-cycle has the edge set of an unmarked face of
/// degree d, every marked face has degree > d. For d = 0 only bipartiteness
/// is required. Odd d throws.
bool is_d_irreducible(const CombinatorialMap& m, int d, const std::vector<int>& marked_faces);

struct EnumerationOptions {
    int max_edges = 8;
    /// Only maps with at least this many edges are reported.
    int min_edges = 1;
    bool bipartite_only = true;
};

/// Calls visit(map) once per rooted planar map (bipartite ones only unless
/// disabled) with min_edges <= E <= max_edges, in increasing E. Every map is
/// generated exactly once by removing or inserting the root edge: a bridge
/// root edge joins two smaller rooted maps, any other root edge is inserted
/// into the root face of a map with one edge less. Throws OracleLimitError
/// beyond the ceiling.
void enumerate_rooted_maps(const EnumerationOptions& options, const std::function<void(const CombinatorialMap&)>& visit);

/// Number of rooted planar maps with exactly E edges.
Integer count_rooted_maps(int edges, bool bipartite_only);

/// (root half-degree, {half-degree: count} over non-root faces).
using ProfileKey = std::pair<int, std::map<int, long>>;

ProfileKey profile_key(const FaceProfile& p);

/// Tally of rooted d-irreducible bipartite maps with E edges (root face
/// marked, degree > d) by face profile.
std::map<ProfileKey, Integer> oracle_census(IrreducibilityOrder order, int edges);

/// Number of rooted d-irreducible bipartite maps with the given profile.
Integer census_count(IrreducibilityOrder order, const FaceProfile& profile);

/// Number of maps with r ordered marked faces of degrees 2j_1..2j_r, each
/// with a marked dart having the face on its right, whose remaining faces
/// have the given profile. For b >= 1 the key b counts the inner faces of
/// degree d; for b = 0 the key 0 counts vertices.
Integer multi_boundary_count(IrreducibilityOrder order, const BoundarySpec& spec,
                             const std::map<int, long>& inner_profile);

/// {"darts": 2E, "alpha": [...], "sigma": [...], "root": r}
nlohmann::ordered_json map_to_json(const CombinatorialMap& m);
CombinatorialMap map_from_json(const nlohmann::ordered_json& j);

}  // namespace irredmap
