#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sierpile {

// Corner labels: 0 = lower-left, 1 = lower-right, 2 = top.
// Subtriangle letters use the same numbering: 0 = L copy, 1 = R copy, 2 = U copy.
enum Corner : int { kLeft = 0, kRight = 1, kTop = 2 };

// A vertex of SG_n named by the path to a depth-n minimal triangle plus a corner
// label, stored in canonical (lexicographically smallest equivalent) form.
struct VertexAddr {
    std::vector<std::uint8_t> word;  // length == level
    std::uint8_t corner = 0;

    int level() const { return static_cast<int>(word.size()); }
    auto operator<=>(const VertexAddr&) const = default;
};

// Canonicalize: the corner c of triangle u.X.c^m equals the corner X of u.c.X^m.
VertexAddr canonical(VertexAddr a);

// Parse/format "LRU:t" style strings (empty word for level 0 is ":t" etc).
std::string addr_str(const VertexAddr& a);
VertexAddr parse_addr(const std::string& s, int level);

// A permutation of {0,1,2} acting as a graph automorphism.
using CornerPerm = std::array<std::uint8_t, 3>;

constexpr CornerPerm kIdentity{0, 1, 2};
constexpr CornerPerm kRotCW{2, 0, 1};     // left -> top -> right -> left
constexpr CornerPerm kRotCCW{1, 2, 0};
constexpr CornerPerm kMirror1{0, 2, 1};   // fixes left corner
constexpr CornerPerm kMirror2{1, 0, 2};   // fixes top corner
constexpr CornerPerm kMirror3{2, 1, 0};   // fixes right corner

CornerPerm perm_compose(const CornerPerm& f, const CornerPerm& g);  // x -> f(g(x))
CornerPerm perm_inverse(const CornerPerm& g);

class SgGraph {
   public:
    explicit SgGraph(int level);

    int level() const { return level_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexAddr>& vertices() const { return verts_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int index_of(const VertexAddr& a) const;
    const VertexAddr& addr(int v) const { return verts_[v]; }

    int corner(int i) const { return corners_[i]; }
    // cut_point(i) is opposite corner i: 0 -> rcut, 1 -> lcut, 2 -> bcut.
    int cut_point(int i) const { return cuts_[i]; }
    bool is_corner(int v) const;

    int rotate(int v) const { return apply(kRotCW, v); }
    int reflect(int axis, int v) const;  // axis 1,2,3 fixes corner axis-1
    int apply(const CornerPerm& g, int v) const;

    // Embedding of a level-(n-1) vertex into copy d of this graph.
    int embed(int copy, const VertexAddr& sub) const;
    // Membership and local address of v in copy d (cut points lie in two copies).
    std::optional<VertexAddr> local_addr(int copy, int v) const;

    // Display coordinates: unit side, y in units of sqrt(3).
    std::pair<double, double> coords(int v) const;

   private:
    int level_;
    std::vector<VertexAddr> verts_;
    std::map<VertexAddr, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::array<int, 3> corners_{};
    std::array<int, 3> cuts_{};
};

struct SinkSpec {
    std::vector<int> corners;  // nonempty subset of {0,1,2}
};

// The graph with all sink corners identified to one absorbing vertex. Parallel
// edges to the sink are kept as multiplicities so that vertex degrees match SG_n.
class ContractedGraph {
   public:
    ContractedGraph(const SgGraph& g, const SinkSpec& s);

    const SgGraph& base() const { return *base_; }
    const SinkSpec& sinks() const { return sinks_; }

    int site_count() const { return static_cast<int>(sites_.size()); }
    int base_vertex(int site) const { return sites_[site]; }
    int site_of(int base_vertex) const { return site_of_[base_vertex]; }  // -1 if sink
    int degree(int site) const { return deg_[site]; }

    // neighbors among non-sink sites (one entry per parallel edge)
    const std::vector<int>& neighbors(int site) const { return adj_[site]; }
    // multiplicity of edges from site to the sink (b_i of the burning lemma)
    int sink_multiplicity(int site) const { return bsink_[site]; }

   private:
    const SgGraph* base_;
    SinkSpec sinks_;
    std::vector<int> sites_;     // base vertex ids of non-sink vertices
    std::vector<int> site_of_;   // base vertex id -> site id or -1
    std::vector<std::vector<int>> adj_;
    std::vector<int> bsink_;
    std::vector<int> deg_;
};

int max_level();  // configured capacity (SIERPILE_MAX_LEVEL, default 12)

}  // namespace sierpile
