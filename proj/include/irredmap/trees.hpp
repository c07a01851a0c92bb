#pragma once

// Decorated planted plane trees whose counts reproduce the slice series.
//
// Vertices: black (inner, out-degree b+1), white labeled j >= b+1 (weight
// x_{2j}), leaf (weight z). The root vertex is implicit: a planted tree is
// the edge leaving the root together with the subtree below it.
//
// Families and their building rules:
//   R    b >= 2: empty or a U_1 tree; b = 1: empty or a U_0 tree;
//        b = 0: a leaf or a white vertex (never empty).
//   U_k  (0 <= k <= b-1) a black vertex whose children are U_{k_1}..U_{k_q}
//        trees with k_1 + ... + k_q = k+1 and 1 <= k_i <= b-1; for k = b-1
//        also a single leaf or a single white vertex.
//   U_b  a white vertex.
//   Z_j  a white vertex labeled j.
// After its parent edge a white vertex j has 2j-1 corners in plane order:
// j-b-1 buds and j+b slots, each slot holding an R tree (a blossom when
// the R tree is empty).
//
// Arrow convention, (down, up) = arrows pointing away from / toward the parent:
//   edge into the root black of a U_k tree        (k, b-k)
//   edge into a leaf or white in a U_{b-1} slot   (b-1, 0)
//   edge into the root black of an R tree         (0, b-1)
//   edge into a leaf or white in an R slot        (0, 0)
// so every black vertex has b+1 outgoing arrows.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "irredmap/solver.hpp"

namespace irredmap {

struct TreeFamily {
    enum class Kind { R, U, Z };
    Kind kind = Kind::R;
    int index = 0;  // k for U_k, j for Z_j

    static TreeFamily r() { return {Kind::R, 0}; }
    static TreeFamily u(int k) { return {Kind::U, k}; }
    static TreeFamily z(int j) { return {Kind::Z, j}; }
    /// "R", "U2", "Z3".
    static TreeFamily parse(const std::string& s);
    std::string name() const;

    friend auto operator<=>(const TreeFamily&, const TreeFamily&) = default;
};

enum class VertexKind { Black, White, Leaf };

struct TreeNode;

struct TreeSlot {
    enum class Kind { Bud, Blossom, Edge };
    Kind kind = Kind::Edge;
    int down = 0;
    int up = 0;
    std::shared_ptr<const TreeNode> child;  // set iff kind == Edge
};

struct TreeNode {
    VertexKind kind = VertexKind::Leaf;
    int label = 0;  // j for white vertices
    std::vector<TreeSlot> slots;
};

struct DecoratedTree {
    int b = 0;
    TreeFamily family;
    /// Edge from the implicit root; Blossom for the empty R tree.
    TreeSlot planted;

    int vertex_count() const;
    int leaf_count() const;
    /// White labels, sorted.
    std::vector<int> white_labels() const;
    /// Parenthesized dump, e.g. "R:0/1>B(1/1>L,1/1>L)". Injective on trees.
    std::string to_string() const;
};

/// Checks every structural rule above; returns a description of the first
/// violation or nullopt.
std::optional<std::string> validate_tree(const DecoratedTree& t);

/// Number of trees of the family with n leaves and the given multiset of
/// white labels, by memoized recursion on the grammar.
Integer count_trees(IrreducibilityOrder order, TreeFamily family, int n, const std::vector<int>& white_labels);

/// Memoized counter refined by total vertex count (black + white + leaf).
class TreeCounter {
public:
    using Budget = std::vector<int>;            // [leaves, count of each active label]
    using VertexPoly = std::vector<Integer>;    // index = vertex count

    TreeCounter(IrreducibilityOrder order, std::vector<int> labels);

    const std::vector<int>& labels() const { return labels_; }
    VertexPoly count(TreeFamily family, const Budget& budget);
    Integer total(TreeFamily family, const Budget& budget);

private:
    VertexPoly r(const Budget& x);
    VertexPoly u(int k, const Budget& x);
    VertexPoly z(int j, const Budget& x);
    VertexPoly whites(const Budget& x);
    VertexPoly compositions(int s, const Budget& x);
    VertexPoly r_sequence(int count, const Budget& x);
    std::size_t label_position(int j) const;

    int b_;
    std::vector<int> labels_;
    std::map<std::pair<TreeFamily, Budget>, VertexPoly> memo_;
    std::map<std::pair<int, Budget>, VertexPoly> comp_memo_;
    std::map<std::pair<int, Budget>, VertexPoly> seq_memo_;
};

/// Every tree of the family with the given budget and at most vertex_cap vertices.
std::vector<DecoratedTree> list_trees(IrreducibilityOrder order, TreeFamily family, int n,
                                      const std::vector<int>& white_labels, int vertex_cap);

struct TreeCheck {
    std::string family;
    int leaves = 0;
    std::vector<int> white_labels;
    std::string expected;
    std::string actual;
    bool passed = false;
    std::string describe() const;
};

struct TreeReport {
    std::vector<TreeCheck> checks;
    bool passed() const;
    /// First failing check or nullptr.
    const TreeCheck* first_failure() const;
};

/// Compares tree counts with every coefficient of solve_slice_system (R,
/// U_0..U_b, Z_j) for z^n, n <= N, and weight monomials of degree <= M.
TreeReport verify_tree_series(IrreducibilityOrder order, const WeightSpace& space, int N);

/// Lists every tree with at most vertex_cap vertices for each family and
/// budget within (N, M), validates it, checks the dumps are distinct, and
/// compares the per-vertex-count tallies with TreeCounter.
TreeReport verify_tree_listing(IrreducibilityOrder order, const WeightSpace& space, int N, int vertex_cap);

}  // namespace irredmap
