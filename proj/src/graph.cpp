#include "deltakit/graph.hpp"

#include <algorithm>

namespace dmk {

Graph::Graph(GroundSet vertices) : adj_(FMatrix::zero(FieldSpec(2), std::move(vertices))) {}

Graph Graph::from_matrix(FMatrix adjacency) {
    if (adjacency.field().p != 2) throw ShapeViolation("graph adjacency must be over GF(2)");
    if (!is_symmetric(adjacency)) throw ShapeViolation("graph adjacency must be symmetric");
    Graph g;
    g.adj_ = std::move(adjacency);
    return g;
}

Graph Graph::from_lists(GroundSet vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& loops) {
    const int n = vertices.size();
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto at = [&](int r, int c) -> std::uint32_t& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(c)];
    };
    for (const auto& [u, v] : edges) {
        const int ui = vertices.index_of(u), vi = vertices.index_of(v);
        if (ui == vi) throw ParameterError("edge endpoints must be distinct (loops are listed separately)");
        if (at(ui, vi)) throw ParameterError("duplicate edge {" + u + "," + v + "}");
        at(ui, vi) = at(vi, ui) = 1;
    }
    for (const auto& l : loops) {
        const int li = vertices.index_of(l);
        if (at(li, li)) throw ParameterError("duplicate loop on " + l);
        at(li, li) = 1;
    }
    return from_matrix(FMatrix(FieldSpec(2), std::move(vertices), std::move(a)));
}

Graph loop_complement_graph(const Graph& g, const Subset& x) {
    if (g.vertices() != x.ground()) throw GroundMismatch("subset is over different vertices");
    const int n = g.size();
    std::vector<std::uint32_t> a = g.matrix().entries();
    for (int i = 0; i < n; ++i)
        if ((x.bits() >> i) & 1u)
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(i)] ^= 1u;
    return Graph::from_matrix(FMatrix(FieldSpec(2), g.vertices(), std::move(a)));
}

Graph local_complement(const Graph& g, std::string_view u, LocalMode mode) {
    const int ui = g.vertices().index_of(u);
    const bool looped = g.has_loop(ui);
    if (mode == LocalMode::Pivot && !looped)
        throw LoopRequired("pivot-form local complementation needs a loop on " + std::string(u));
    if (mode == LocalMode::Dual && looped)
        throw LoopForbidden("dual-form local complementation needs no loop on " + std::string(u));

    const int n = g.size();
    std::vector<int> nbrs;
    for (int v = 0; v < n; ++v)
        if (v != ui && g.matrix().at(ui, v)) nbrs.push_back(v);

    std::vector<std::uint32_t> a = g.matrix().entries();
    auto at = [&](int r, int c) -> std::uint32_t& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(c)];
    };
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i; j < nbrs.size(); ++j) {
            at(nbrs[i], nbrs[j]) ^= 1u;
            if (nbrs[i] != nbrs[j]) at(nbrs[j], nbrs[i]) ^= 1u;
        }
    }
    return Graph::from_matrix(FMatrix(FieldSpec(2), g.vertices(), std::move(a)));
}

SetSystem graph_support(const Graph& g, Exec exec) {
    return support_deltamatroid(g.matrix(), MatrixShape::Symmetric, exec);
}

Graph reconstruct_graph(const SetSystem& m) {
    if (!m.proper()) throw ImproperSystem("reconstruction requires a proper set system");
    const GroundSet& gs = m.ground();
    const int n = gs.size();
    if (!m.contains(0))
        throw NotGraphic("set system lacks the empty set", {});

    std::vector<std::uint32_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto at = [&](int r, int c) -> std::uint32_t& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(c)];
    };
    for (int v = 0; v < n; ++v) at(v, v) = m.contains(Mask{1} << v) ? 1u : 0u;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool pair_in = m.contains((Mask{1} << u) | (Mask{1} << v));
            const bool both_loops = at(u, u) && at(v, v);
            at(u, v) = at(v, u) = (pair_in != both_loops) ? 1u : 0u;
        }
    }
    Graph g = Graph::from_matrix(FMatrix(FieldSpec(2), gs, std::move(a)));

    for (Mask x : detail::masks_in_canonical_order(n)) {
        if (detail::nonsingular_principal(g.matrix(), x) != m.contains(x))
            throw NotGraphic("no graph has this support", gs.names_of(x));
    }
    return g;
}

KernelSet graph_kernel(const Graph& g) {
    const RankNullityKernel rnk = rank_nullity_kernel(g.matrix());
    KernelSet ks;
    ks.ground = g.vertices();
    ks.dim = rnk.nullity;
    std::vector<Mask> basis;
    for (const auto& v : rnk.kernel.vectors) {
        Mask b = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) b |= Mask{1} << i;
        basis.push_back(b);
    }
    ks.members.reserve(std::size_t{1} << ks.dim);
    for (Mask combo = 0; combo < (Mask{1} << ks.dim); ++combo) {
        Mask member = 0;
        for (int i = 0; i < ks.dim; ++i)
            if ((combo >> i) & 1u) member ^= basis[static_cast<std::size_t>(i)];
        ks.members.push_back(member);
    }
    detail::canonicalize_family(ks.members);
    return ks;
}

int graph_nullity(const Graph& g) { return rank_nullity_kernel(g.matrix()).nullity; }

TripleReport kernel_triple(const Graph& g, std::string_view v) {
    const int vi = g.vertices().index_of(v);
    if (!g.has_loop(vi)) throw LoopRequired("kernel triple needs a loop on " + std::string(v));
    const Subset vs = Subset::of(g.vertices(), std::array<std::string, 1>{std::string(v)});

    const KernelSet k0 = graph_kernel(g);
    const KernelSet k1 = graph_kernel(local_complement(g, v, LocalMode::Pivot));
    const KernelSet k2 = graph_kernel(loop_complement_graph(g, vs));

    TripleReport rep;
    rep.systems = {SetSystem(k0.ground, k0.members), SetSystem(k1.ground, k1.members),
                   SetSystem(k2.ground, k2.members)};
    const std::array<int, 3> dims{k0.dim, k1.dim, k2.dim};

    int equal_pairs = 0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (rep.systems[static_cast<std::size_t>(i)] == rep.systems[static_cast<std::size_t>(j)]) {
            rep.equal_pair = {i, j};
            rep.odd_one = k;
            ++equal_pairs;
        }
    }
    if (equal_pairs != 1) throw OracleDisagreement("kernels do not split into one equal pair");
    rep.delta = dims[static_cast<std::size_t>(rep.odd_one)] -
                dims[static_cast<std::size_t>(rep.equal_pair[0])];

    // the pair must be exactly the v-free members of the odd kernel
    const Mask vbit = Mask{1} << vi;
    std::vector<Mask> vfree;
    for (Mask x : rep.systems[static_cast<std::size_t>(rep.odd_one)].family())
        if (!(x & vbit)) vfree.push_back(x);
    rep.relation_holds =
        vfree == rep.systems[static_cast<std::size_t>(rep.equal_pair[0])].family();
    return rep;
}

Graph delete_vertex(const Graph& g, std::string_view v) {
    const int vi = g.vertices().index_of(v);
    const Mask keep = g.vertices().full_mask() & ~(Mask{1} << vi);
    return Graph::from_matrix(principal_submatrix(g.matrix(), Subset(g.vertices(), keep)));
}

GraphRep binary_matroid_to_graph_rep(const BinaryStdRep& rep) {
    const int r = static_cast<int>(rep.row_labels.size());
    const int c = static_cast<int>(rep.col_labels.size());
    for (const auto& rl : rep.row_labels)
        for (const auto& cl : rep.col_labels)
            if (rl == cl) throw LabelCollision("label '" + rl + "' used for both a row and a column");
    if (static_cast<int>(rep.bits.size()) != r)
        throw ParameterError("standard representation block has wrong row count");
    for (const auto& row : rep.bits) {
        if (static_cast<int>(row.size()) != c)
            throw ParameterError("standard representation block has ragged rows");
        for (std::uint32_t v : row)
            if (v > 1) throw ParameterError("standard representation entries must be 0/1");
    }

    std::vector<std::string> labels = rep.row_labels;
    labels.insert(labels.end(), rep.col_labels.begin(), rep.col_labels.end());
    GroundSet ground(labels);
    const int n = r + c;

    std::vector<std::uint32_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            const std::uint32_t bit = rep.bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(r + j)] = bit;
            a[static_cast<std::size_t>(r + j) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(i)] = bit;
        }
    }

    GraphRep out;
    out.graph = Graph::from_matrix(FMatrix(FieldSpec(2), ground, std::move(a)));
    out.twist = Subset(ground, r == 0 ? 0u : (Mask{1} << r) - 1);

    // bases of [I | B], computed independently: column subsets of size r
    // and rank r
    const FieldSpec f2(2);
    std::vector<Mask> bases;
    const std::int64_t total = std::int64_t{1} << n;
    for (std::int64_t xi = 0; xi < total; ++xi) {
        const Mask x = static_cast<Mask>(xi);
        if (card(x) != r) continue;
        std::vector<std::uint32_t> cols(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0);
        int cc = 0;
        for (int j = 0; j < n; ++j) {
            if (!((x >> j) & 1u)) continue;
            for (int i = 0; i < r; ++i) {
                const std::uint32_t v =
                    j < r ? (i == j ? 1u : 0u)
                          : rep.bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - r)];
                cols[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) +
                     static_cast<std::size_t>(cc)] = v;
            }
            ++cc;
        }
        if (detail::gf_rank(std::move(cols), r, r, f2) == r) bases.push_back(x);
    }
    out.bases = SetSystem(ground, std::move(bases));

    if (pivot(graph_support(out.graph), out.twist) != out.bases)
        throw OracleDisagreement("bipartite construction does not represent the matroid");
    return out;
}

}  // namespace dmk
