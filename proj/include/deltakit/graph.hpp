#pragma once

#include <string_view>
#include <utility>

#include "deltakit/dmatroid.hpp"
#include "deltakit/fmatrix.hpp"
#include "deltakit/setsys.hpp"

namespace dmk {

// Undirected graph with loops: a symmetric GF(2) matrix whose diagonal
// entries are the loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(GroundSet vertices);  // edgeless
    static Graph from_matrix(FMatrix adjacency);  // ShapeViolation unless symmetric over GF(2)
    static Graph from_lists(GroundSet vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges,
                            const std::vector<std::string>& loops);

    const GroundSet& vertices() const { return adj_.labels(); }
    const FMatrix& matrix() const { return adj_; }
    int size() const { return adj_.size(); }
    bool has_loop(int v) const { return adj_.at(v, v) != 0; }
    bool has_edge(int u, int v) const { return u != v && adj_.at(u, v) != 0; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    FMatrix adj_;
};

// ker(G) as a symmetric-difference-closed family of vertex subsets.
struct KernelSet {
    GroundSet ground;
    std::vector<Mask> members;  // canonical order, 2^dim of them
    int dim = 0;

    friend bool operator==(const KernelSet& a, const KernelSet& b) {
        return a.ground == b.ground && a.members == b.members;
    }
};

// Toggle loops on X.
Graph loop_complement_graph(const Graph& g, const Subset& x);

enum class LocalMode { Pivot, Dual, Auto };

// Toggle all adjacencies within N(u), u excluded, v = w allowed (that
// toggles loops).  Pivot mode requires a loop on u, dual mode requires
// none; auto dispatches on the loop bit.
Graph local_complement(const Graph& g, std::string_view u, LocalMode mode = LocalMode::Auto);

SetSystem graph_support(const Graph& g, Exec exec = Exec::Parallel);

// Inverse of graph_support on graphic systems: loop on v iff {v} in M,
// edge {u,v} iff ({u,v} in M) xor ({u} in M and {v} in M).  Round-trip
// verified; throws NotGraphic with the first disagreeing subset.
Graph reconstruct_graph(const SetSystem& m);

KernelSet graph_kernel(const Graph& g);

int graph_nullity(const Graph& g);

// ker(G), ker(G*v), ker(G+v) for a looped v: two equal, the odd one has
// dimension one larger, and the pair is exactly its v-free part.
TripleReport kernel_triple(const Graph& g, std::string_view v);

Graph delete_vertex(const Graph& g, std::string_view v);

struct GraphRep {
    Graph graph;     // loopless, bipartite block B between R and C
    Subset twist;    // R
    SetSystem bases; // computed independently from [I | B]
};

// Builds the zero-diagonal symmetric GF(2) representation of the binary
// matroid [I | B] and verifies pivot(support, R) equals its bases.
GraphRep binary_matroid_to_graph_rep(const BinaryStdRep& rep);

}  // namespace dmk
