#include "irredmap/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace irredmap {

TreeFamily TreeFamily::parse(const std::string& s) {
    if (s == "R") return r();
    if (s.size() >= 2 && (s[0] == 'U' || s[0] == 'Z')) {
        std::size_t used = 0;
        int idx = 0;
        try {
            idx = std::stoi(s.substr(1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == s.size() - 1 && idx >= 0) return s[0] == 'U' ? u(idx) : z(idx);
    }
    throw std::invalid_argument("unknown tree family '" + s + "' (expected R, U<k> or Z<j>)");
}

std::string TreeFamily::name() const {
    switch (kind) {
        case Kind::R: return "R";
        case Kind::U: return "U" + std::to_string(index);
        case Kind::Z: return "Z" + std::to_string(index);
    }
    return "?";
}

namespace {

void check_family(int b, TreeFamily f) {
    if (f.kind == TreeFamily::Kind::U) {
        if (b == 0) throw std::invalid_argument("U families do not exist for b = 0");
        if (f.index > b) throw std::invalid_argument("U_k requires k <= b");
    }
    if (f.kind == TreeFamily::Kind::Z && f.index < b + 1) {
        throw std::invalid_argument("Z_j requires j >= b+1");
    }
}

bool is_zero_budget(const std::vector<int>& x) {
    return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
}

// Calls fn(sub) for every sub <= x componentwise.
template <class Fn>
void for_each_sub(const std::vector<int>& x, Fn&& fn) {
    std::vector<int> sub(x.size(), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(sub));
        std::size_t i = 0;
        while (i < sub.size() && sub[i] == x[i]) sub[i++] = 0;
        if (i == sub.size()) return;
        ++sub[i];
    }
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

using Poly = TreeCounter::VertexPoly;

void add_into(Poly& a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; k < b.size(); ++k) r[i + k] += a[i] * b[k];
    }
    return r;
}

Poly shift(const Poly& a) {
    if (a.empty()) return {};
    Poly r(a.size() + 1);
    std::copy(a.begin(), a.end(), r.begin() + 1);
    return r;
}

Integer poly_total(const Poly& p) {
    Integer t = 0;
    for (const auto& c : p) t += c;
    return t;
}

}  // namespace

// ---- memoized counting ------------------------------------------------------

TreeCounter::TreeCounter(IrreducibilityOrder order, std::vector<int> labels) : b_(order.b()), labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    for (int j : labels_) {
        if (j < b_ + 1) throw std::invalid_argument("white labels must be >= b+1");
    }
}

std::size_t TreeCounter::label_position(int j) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), j);
    if (it == labels_.end() || *it != j) throw std::invalid_argument("white label " + std::to_string(j) + " not tracked");
    return static_cast<std::size_t>(it - labels_.begin()) + 1;
}

Poly TreeCounter::count(TreeFamily family, const Budget& budget) {
    check_family(b_, family);
    if (budget.size() != labels_.size() + 1) throw std::invalid_argument("tree budget has the wrong length");
    for (int v : budget) {
        if (v < 0) return {};
    }
    const auto key = std::make_pair(family, budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly result;
    switch (family.kind) {
        case TreeFamily::Kind::R: result = r(budget); break;
        case TreeFamily::Kind::U: result = u(family.index, budget); break;
        case TreeFamily::Kind::Z: result = z(family.index, budget); break;
    }
    memo_.emplace(key, result);
    return result;
}

Integer TreeCounter::total(TreeFamily family, const Budget& budget) { return poly_total(count(family, budget)); }

Poly TreeCounter::r(const Budget& x) {
    Poly p;
    if (b_ == 0) {
        if (x[0] == 1 && std::all_of(x.begin() + 1, x.end(), [](int v) { return v == 0; })) add_into(p, {0, 1});
        add_into(p, whites(x));
        return p;
    }
    if (is_zero_budget(x)) p = {1};
    add_into(p, count(TreeFamily::u(b_ >= 2 ? 1 : 0), x));
    return p;
}

Poly TreeCounter::whites(const Budget& x) {
    Poly p;
    for (int j : labels_) add_into(p, count(TreeFamily::z(j), x));
    return p;
}

Poly TreeCounter::u(int k, const Budget& x) {
    if (is_zero_budget(x)) return {};
    if (k == b_) return whites(x);
    Poly p;
    if (k == b_ - 1) {
        if (x[0] == 1 && std::all_of(x.begin() + 1, x.end(), [](int v) { return v == 0; })) add_into(p, {0, 1});
        add_into(p, whites(x));
    }
    add_into(p, shift(compositions(k + 1, x)));
    return p;
}

Poly TreeCounter::z(int j, const Budget& x) {
    const std::size_t pos = label_position(j);
    if (x[pos] < 1) return {};
    Budget y = x;
    --y[pos];
    Poly p = shift(r_sequence(j + b_, y));
    const Integer placements = binomial(2 * j - 1, j + b_);
    for (auto& c : p) c *= placements;
    return p;
}

// Ordered sequences of U_{k_i} trees, 1 <= k_i <= b-1, sum k_i = s.
Poly TreeCounter::compositions(int s, const Budget& x) {
    if (s == 0) return is_zero_budget(x) ? Poly{1} : Poly{};
    const auto key = std::make_pair(s, x);
    if (auto it = comp_memo_.find(key); it != comp_memo_.end()) return it->second;
    Poly p;
    for (int part = 1; part <= std::min(s, b_ - 1); ++part) {
        for_each_sub(x, [&](const Budget& sub) {
            if (is_zero_budget(sub)) return;
            const Poly rest = compositions(s - part, minus(x, sub));
            if (rest.empty()) return;
            add_into(p, mul(count(TreeFamily::u(part), sub), rest));
        });
    }
    comp_memo_.emplace(key, p);
    return p;
}

Poly TreeCounter::r_sequence(int n, const Budget& x) {
    if (n == 0) return is_zero_budget(x) ? Poly{1} : Poly{};
    const auto key = std::make_pair(n, x);
    if (auto it = seq_memo_.find(key); it != seq_memo_.end()) return it->second;
    Poly p;
    for_each_sub(x, [&](const Budget& sub) {
        const Poly rest = r_sequence(n - 1, minus(x, sub));
        if (rest.empty()) return;
        add_into(p, mul(count(TreeFamily::r(), sub), rest));
    });
    seq_memo_.emplace(key, p);
    return p;
}

namespace {

std::pair<std::vector<int>, std::vector<int>> budget_of(int n, const std::vector<int>& white_labels) {
    std::vector<int> labels = white_labels;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<int> budget(labels.size() + 1, 0);
    budget[0] = n;
    for (int j : white_labels) {
        budget[static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), j) - labels.begin()) + 1]++;
    }
    return {labels, budget};
}

}  // namespace

Integer count_trees(IrreducibilityOrder order, TreeFamily family, int n, const std::vector<int>& white_labels) {
    check_family(order.b(), family);
    if (n < 0) throw std::invalid_argument("leaf count must be nonnegative");
    auto [labels, budget] = budget_of(n, white_labels);
    if (family.kind == TreeFamily::Kind::Z && !std::binary_search(labels.begin(), labels.end(), family.index)) {
        return 0;
    }
    TreeCounter counter(order, labels);
    return counter.total(family, budget);
}

// ---- structure, dump, validation -------------------------------------------

namespace {

void tally(const TreeNode& v, int& vertices, int& leaves, std::vector<int>& whites) {
    ++vertices;
    if (v.kind == VertexKind::Leaf) ++leaves;
    if (v.kind == VertexKind::White) whites.push_back(v.label);
    for (const auto& s : v.slots) {
        if (s.kind == TreeSlot::Kind::Edge) tally(*s.child, vertices, leaves, whites);
    }
}

void dump_node(const TreeNode& v, std::ostream& os);

void dump_slot(const TreeSlot& s, std::ostream& os) {
    switch (s.kind) {
        case TreeSlot::Kind::Bud: os << '*'; return;
        case TreeSlot::Kind::Blossom: os << 'o'; return;
        case TreeSlot::Kind::Edge:
            os << s.down << '/' << s.up << '>';
            dump_node(*s.child, os);
            return;
    }
}

void dump_node(const TreeNode& v, std::ostream& os) {
    switch (v.kind) {
        case VertexKind::Leaf: os << 'L'; return;
        case VertexKind::Black: os << 'B'; break;
        case VertexKind::White: os << 'W' << v.label; break;
    }
    os << '(';
    for (std::size_t i = 0; i < v.slots.size(); ++i) {
        if (i) os << ',';
        dump_slot(v.slots[i], os);
    }
    os << ')';
}

struct Tally {
    int vertices = 0;
    int leaves = 0;
    std::vector<int> whites;
};

Tally tally_tree(const DecoratedTree& t) {
    Tally r;
    if (t.planted.kind == TreeSlot::Kind::Edge) tally(*t.planted.child, r.vertices, r.leaves, r.whites);
    std::sort(r.whites.begin(), r.whites.end());
    return r;
}

}  // namespace

int DecoratedTree::vertex_count() const { return tally_tree(*this).vertices; }
int DecoratedTree::leaf_count() const { return tally_tree(*this).leaves; }
std::vector<int> DecoratedTree::white_labels() const { return tally_tree(*this).whites; }

std::string DecoratedTree::to_string() const {
    std::ostringstream os;
    os << family.name() << ':';
    dump_slot(planted, os);
    return os.str();
}

namespace {

enum class Endpoint { Root, Black, White, Leaf };

Endpoint endpoint_of(const TreeNode& v) {
    switch (v.kind) {
        case VertexKind::Black: return Endpoint::Black;
        case VertexKind::White: return Endpoint::White;
        case VertexKind::Leaf: return Endpoint::Leaf;
    }
    return Endpoint::Leaf;
}

std::optional<std::string> validate_node(int b, const TreeNode& v, const TreeSlot& parent_edge, Endpoint parent) {
    const int down = parent_edge.down, up = parent_edge.up;
    if (down < 0 || up < 0 || down + up > b) return "edge carries an invalid number of arrows";
    if (b <= 1 && (down || up)) return "edges carry no arrows when b <= 1";
    if (down > 0 && up > 0) {
        if (down + up != b) return "bi-oriented edge must carry b arrows";
        if (v.kind != VertexKind::Black || (parent != Endpoint::Black && parent != Endpoint::Root)) {
            return "bi-oriented edge must connect black vertices or the root";
        }
    }
    switch (v.kind) {
        case VertexKind::Leaf:
            if (!v.slots.empty()) return "leaf vertex with children";
            break;
        case VertexKind::Black: {
            if (b < 2) return "black vertex with b < 2";
            if (v.slots.empty()) return "black vertex of degree 1";
            int out = up;
            for (const auto& s : v.slots) {
                if (s.kind != TreeSlot::Kind::Edge) return "bud or blossom on a black vertex";
                out += s.down;
            }
            if (out != b + 1) return "black vertex out-degree " + std::to_string(out) + " != b+1";
            break;
        }
        case VertexKind::White: {
            const int j = v.label;
            if (j < b + 1) return "white label below b+1";
            if (static_cast<int>(v.slots.size()) != 2 * j - 1) return "white vertex degree != 2j";
            const auto buds = std::count_if(v.slots.begin(), v.slots.end(),
                                            [](const TreeSlot& s) { return s.kind == TreeSlot::Kind::Bud; });
            if (buds != j - b - 1) return "white vertex with wrong bud count";
            if (down || up) {
                if (down != b - 1 || up != 0) return "edge into a white vertex must be arrowless or carry b-1 arrows";
            }
            for (const auto& s : v.slots) {
                if (s.kind == TreeSlot::Kind::Blossom && b == 0) return "blossom for b = 0";
                if (s.kind == TreeSlot::Kind::Edge && s.down != 0) return "arrow pointing away from a white vertex";
            }
            break;
        }
    }
    for (const auto& s : v.slots) {
        if (s.kind != TreeSlot::Kind::Edge) continue;
        if (!s.child) return "edge without a child";
        if (auto err = validate_node(b, *s.child, s, endpoint_of(v))) return err;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_tree(const DecoratedTree& t) {
    const int b = t.b;
    const auto& f = t.family;
    if (t.planted.kind == TreeSlot::Kind::Bud) return "planted bud";
    if (t.planted.kind == TreeSlot::Kind::Blossom) {
        if (f.kind != TreeFamily::Kind::R || b == 0) return "empty tree outside R with b >= 1";
        return std::nullopt;
    }
    if (!t.planted.child) return "edge without a child";
    const TreeNode& root = *t.planted.child;
    switch (f.kind) {
        case TreeFamily::Kind::R:
            if (root.kind == VertexKind::Black && (b < 2)) return "R tree rooted at a black vertex";
            if (root.kind != VertexKind::Black && b >= 3) return "R tree must start with a black vertex for b >= 3";
            break;
        case TreeFamily::Kind::U:
            if (f.index == b && root.kind != VertexKind::White) return "U_b tree must be a white vertex";
            if (f.index < b - 1 && root.kind != VertexKind::Black) return "U_k tree (k < b-1) must start black";
            break;
        case TreeFamily::Kind::Z:
            if (root.kind != VertexKind::White || root.label != f.index) return "Z_j tree must be a white vertex j";
            break;
    }
    return validate_node(b, root, t.planted, Endpoint::Root);
}

// ---- exhaustive listing -----------------------------------------------------

namespace {

struct Gen {
    std::shared_ptr<const TreeNode> node;  // null for the empty R tree
    int vertices = 0;
};

struct SeqGen {
    std::vector<TreeSlot> slots;
    int vertices = 0;
};

class Lister {
public:
    Lister(int b, std::vector<int> labels, int cap) : b_(b), labels_(std::move(labels)), cap_(cap) {}

    const std::vector<Gen>& family(TreeFamily f, const std::vector<int>& x) {
        const auto key = std::make_pair(f, x);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<Gen> out;
        switch (f.kind) {
            case TreeFamily::Kind::R: out = r(x); break;
            case TreeFamily::Kind::U: out = u(f.index, x); break;
            case TreeFamily::Kind::Z: out = z(f.index, x); break;
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    TreeSlot u_edge(int k, const Gen& g) const {
        TreeSlot s;
        s.child = g.node;
        if (g.node->kind == VertexKind::Black) {
            s.down = k;
            s.up = b_ - k;
        } else if (k == b_ - 1) {
            s.down = b_ - 1;
        }
        return s;
    }

    TreeSlot r_edge(const Gen& g) const {
        TreeSlot s;
        if (!g.node) {
            s.kind = TreeSlot::Kind::Blossom;
            return s;
        }
        s.child = g.node;
        if (g.node->kind == VertexKind::Black) s.up = b_ - 1;
        return s;
    }

private:
    bool single_leaf(const std::vector<int>& x) const {
        return x[0] == 1 && std::all_of(x.begin() + 1, x.end(), [](int v) { return v == 0; });
    }

    void append_leaf_and_whites(const std::vector<int>& x, std::vector<Gen>& out) {
        if (single_leaf(x)) {
            auto leaf = std::make_shared<TreeNode>();
            leaf->kind = VertexKind::Leaf;
            out.push_back({leaf, 1});
        }
        for (int j : labels_) {
            const auto& w = family(TreeFamily::z(j), x);
            out.insert(out.end(), w.begin(), w.end());
        }
    }

    std::vector<Gen> r(const std::vector<int>& x) {
        std::vector<Gen> out;
        if (b_ == 0) {
            append_leaf_and_whites(x, out);
            return out;
        }
        if (is_zero_budget(x)) out.push_back({nullptr, 0});
        const auto& us = family(TreeFamily::u(b_ >= 2 ? 1 : 0), x);
        out.insert(out.end(), us.begin(), us.end());
        return out;
    }

    std::vector<Gen> u(int k, const std::vector<int>& x) {
        std::vector<Gen> out;
        if (is_zero_budget(x)) return out;
        if (k == b_) {
            for (int j : labels_) {
                const auto& w = family(TreeFamily::z(j), x);
                out.insert(out.end(), w.begin(), w.end());
            }
            return out;
        }
        if (k == b_ - 1) append_leaf_and_whites(x, out);
        for (const auto& seq : compositions(k + 1, x)) {
            if (seq.vertices + 1 > cap_) continue;
            auto v = std::make_shared<TreeNode>();
            v->kind = VertexKind::Black;
            v->slots = seq.slots;
            out.push_back({v, seq.vertices + 1});
        }
        return out;
    }

    std::vector<Gen> z(int j, const std::vector<int>& x) {
        std::vector<Gen> out;
        const auto it = std::lower_bound(labels_.begin(), labels_.end(), j);
        const std::size_t pos = static_cast<std::size_t>(it - labels_.begin()) + 1;
        if (x[pos] < 1) return out;
        auto y = x;
        --y[pos];
        const int corners = 2 * j - 1;
        const int slots = j + b_;
        // Bud positions: every (j-b-1)-subset of the 2j-1 corners.
        std::vector<char> is_bud(static_cast<std::size_t>(corners), 0);
        std::fill(is_bud.begin() + slots, is_bud.end(), 1);
        std::vector<std::vector<char>> placements;
        do {
            placements.push_back(is_bud);
        } while (std::next_permutation(is_bud.begin(), is_bud.end()));
        for (const auto& seq : r_sequence(slots, y)) {
            if (seq.vertices + 1 > cap_) continue;
            for (const auto& place : placements) {
                auto v = std::make_shared<TreeNode>();
                v->kind = VertexKind::White;
                v->label = j;
                std::size_t next = 0;
                for (char bud : place) {
                    if (bud) {
                        TreeSlot s;
                        s.kind = TreeSlot::Kind::Bud;
                        v->slots.push_back(s);
                    } else {
                        v->slots.push_back(seq.slots[next++]);
                    }
                }
                out.push_back({v, seq.vertices + 1});
            }
        }
        return out;
    }

    std::vector<SeqGen> compositions(int s, const std::vector<int>& x) {
        std::vector<SeqGen> out;
        if (s == 0) {
            if (is_zero_budget(x)) out.push_back({});
            return out;
        }
        for (int part = 1; part <= std::min(s, b_ - 1); ++part) {
            for_each_sub(x, [&](const std::vector<int>& sub) {
                if (is_zero_budget(sub)) return;
                const auto rest = compositions(s - part, minus(x, sub));
                if (rest.empty()) return;
                for (const auto& head : family(TreeFamily::u(part), sub)) {
                    for (const auto& tail : rest) {
                        if (head.vertices + tail.vertices > cap_) continue;
                        SeqGen g;
                        g.slots.push_back(u_edge(part, head));
                        g.slots.insert(g.slots.end(), tail.slots.begin(), tail.slots.end());
                        g.vertices = head.vertices + tail.vertices;
                        out.push_back(std::move(g));
                    }
                }
            });
        }
        return out;
    }

    std::vector<SeqGen> r_sequence(int n, const std::vector<int>& x) {
        std::vector<SeqGen> out;
        if (n == 0) {
            if (is_zero_budget(x)) out.push_back({});
            return out;
        }
        for_each_sub(x, [&](const std::vector<int>& sub) {
            const auto rest = r_sequence(n - 1, minus(x, sub));
            if (rest.empty()) return;
            for (const auto& head : family(TreeFamily::r(), sub)) {
                for (const auto& tail : rest) {
                    if (head.vertices + tail.vertices > cap_) continue;
                    SeqGen g;
                    g.slots.push_back(r_edge(head));
                    g.slots.insert(g.slots.end(), tail.slots.begin(), tail.slots.end());
                    g.vertices = head.vertices + tail.vertices;
                    out.push_back(std::move(g));
                }
            }
        });
        return out;
    }

    int b_;
    std::vector<int> labels_;
    int cap_;
    std::map<std::pair<TreeFamily, std::vector<int>>, std::vector<Gen>> memo_;
};

TreeSlot planted_edge(const Lister& lister, TreeFamily f, const Gen& g) {
    if (f.kind == TreeFamily::Kind::R) return lister.r_edge(g);
    if (f.kind == TreeFamily::Kind::U) return lister.u_edge(f.index, g);
    TreeSlot s;
    s.child = g.node;
    return s;
}

std::vector<DecoratedTree> list_with(Lister& lister, int b, TreeFamily family, const std::vector<int>& budget) {
    std::vector<DecoratedTree> out;
    for (const auto& g : lister.family(family, budget)) {
        out.push_back(DecoratedTree{b, family, planted_edge(lister, family, g)});
    }
    return out;
}

}  // namespace

std::vector<DecoratedTree> list_trees(IrreducibilityOrder order, TreeFamily family, int n,
                                      const std::vector<int>& white_labels, int vertex_cap) {
    check_family(order.b(), family);
    auto [labels, budget] = budget_of(n, white_labels);
    if (family.kind == TreeFamily::Kind::Z && !std::binary_search(labels.begin(), labels.end(), family.index)) {
        return {};
    }
    for (int j : labels) {
        if (j < order.b() + 1) throw std::invalid_argument("white labels must be >= b+1");
    }
    Lister lister(order.b(), labels, vertex_cap);
    return list_with(lister, order.b(), family, budget);
}

// ---- verification -------------------------------------------------------------

std::string TreeCheck::describe() const {
    std::ostringstream os;
    os << family << " leaves=" << leaves << " whites={";
    for (std::size_t i = 0; i < white_labels.size(); ++i) os << (i ? "," : "") << white_labels[i];
    os << "}: expected " << expected << ", got " << actual;
    return os.str();
}

bool TreeReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const TreeCheck& c) { return c.passed; });
}

const TreeCheck* TreeReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

namespace {

std::vector<TreeFamily> families_for(int b, const WeightSpace& space) {
    std::vector<TreeFamily> fs{TreeFamily::r()};
    if (b >= 1) {
        for (int k = 0; k <= b; ++k) fs.push_back(TreeFamily::u(k));
    }
    for (int j : space.half_degrees) fs.push_back(TreeFamily::z(j));
    return fs;
}

// Exponent vectors over `arity` variables with total degree <= m.
std::vector<Monomial> monomials_up_to(std::size_t arity, int m) {
    std::vector<Monomial> out;
    Monomial cur(arity, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == arity) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[i] = static_cast<std::uint32_t>(e);
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(0, m);
    return out;
}

std::vector<int> labels_of(const WeightSpace& space, const Monomial& mon) {
    std::vector<int> labels;
    for (std::size_t i = 0; i < mon.size(); ++i) {
        for (std::uint32_t e = 0; e < mon[i]; ++e) labels.push_back(space.half_degrees[i]);
    }
    return labels;
}

std::vector<int> budget_for(int n, const Monomial& mon) {
    std::vector<int> budget{n};
    for (auto e : mon) budget.push_back(static_cast<int>(e));
    return budget;
}

}  // namespace

TreeReport verify_tree_series(IrreducibilityOrder order, const WeightSpace& space, int N) {
    const int b = order.b();
    const SliceSystem sys = solve_slice_system(order, space, N);
    TreeCounter counter(order, space.half_degrees);
    TreeReport report;
    for (const auto& f : families_for(b, space)) {
        const WeightedSeries* series = nullptr;
        if (f.kind == TreeFamily::Kind::R) series = &sys.R;
        if (f.kind == TreeFamily::Kind::U) series = &sys.U.at(static_cast<std::size_t>(f.index));
        if (f.kind == TreeFamily::Kind::Z) series = &sys.Z.at(f.index);
        for (int n = 0; n <= N; ++n) {
            for (const auto& mon : monomials_up_to(space.arity(), space.max_degree)) {
                TreeCheck c;
                c.family = f.name();
                c.leaves = n;
                c.white_labels = labels_of(space, mon);
                const ExactScalar expected = series->coefficient(n, mon);
                const Integer actual = counter.total(f, budget_for(n, mon));
                c.expected = expected.to_string();
                c.actual = actual.get_str();
                c.passed = expected == ExactScalar(actual);
                report.checks.push_back(std::move(c));
            }
        }
    }
    return report;
}

TreeReport verify_tree_listing(IrreducibilityOrder order, const WeightSpace& space, int N, int vertex_cap) {
    const int b = order.b();
    TreeCounter counter(order, space.half_degrees);
    Lister lister(b, space.half_degrees, vertex_cap);
    TreeReport report;
    for (const auto& f : families_for(b, space)) {
        for (int n = 0; n <= N; ++n) {
            for (const auto& mon : monomials_up_to(space.arity(), space.max_degree)) {
                const auto budget = budget_for(n, mon);
                TreeCheck c;
                c.family = f.name();
                c.leaves = n;
                c.white_labels = labels_of(space, mon);

                const Poly memo = counter.count(f, budget);
                Poly expected(static_cast<std::size_t>(vertex_cap) + 1);
                for (std::size_t v = 0; v < memo.size() && v <= static_cast<std::size_t>(vertex_cap); ++v) {
                    expected[v] = memo[v];
                }

                Poly listed(static_cast<std::size_t>(vertex_cap) + 1);
                std::set<std::string> seen;
                std::string problem;
                for (const auto& t : list_with(lister, b, f, budget)) {
                    const Tally tl = tally_tree(t);
                    if (auto err = validate_tree(t)) {
                        problem = *err + " in " + t.to_string();
                        break;
                    }
                    if (!seen.insert(t.to_string()).second) {
                        problem = "duplicate tree " + t.to_string();
                        break;
                    }
                    if (tl.leaves != n || tl.whites != c.white_labels) {
                        problem = "budget mismatch in " + t.to_string();
                        break;
                    }
                    if (tl.vertices > vertex_cap) {
                        problem = "vertex cap exceeded by " + t.to_string();
                        break;
                    }
                    listed[static_cast<std::size_t>(tl.vertices)] += 1;
                }
                auto render = [](const Poly& p) {
                    std::string s = "[";
                    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
                    return s + "]";
                };
                c.expected = render(expected);
                c.actual = problem.empty() ? render(listed) : problem;
                c.passed = problem.empty() && listed == expected;
                report.checks.push_back(std::move(c));
            }
        }
    }
    return report;
}

}  // namespace irredmap
