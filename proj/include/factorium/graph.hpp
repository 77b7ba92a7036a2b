#ifndef FACTORIUM_GRAPH_HPP
#define FACTORIUM_GRAPH_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace factorium {

using Edge = std::pair<int, int>;
using VertexList = std::vector<int>;

/// Undirected simple graph on dense vertices 0..n-1.
/// Adjacency is stored as n fixed-width bit rows so neighbor scans and
/// set intersections are word-parallel. Immutable-by-convention once built:
/// every algorithm in this library takes graphs by const reference and
/// never mutates its input.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<Edge> edges);

    int size() const { return n_; }
    int words() const { return words_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    bool is_regular() const;  // true also for edgeless graphs
    long long edge_count() const;

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;
    VertexList neighbors(int v) const;  // ascending

    std::uint64_t row_word(int v, int w) const {
        return bits_[static_cast<std::size_t>(v) * words_ + w];
    }

    template <typename Fn>
    void for_each_neighbor(int v, Fn&& fn) const {
        const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * words_];
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                fn(w * 64 + b);
            }
        }
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);

/// Subgraph induced on `keep` (ascending, no duplicates); vertex i of the
/// result is keep[i].
Graph induced_subgraph(const Graph& g, const VertexList& keep);

/// Connected components, each sorted ascending, list ordered by minimum vertex.
std::vector<VertexList> components(const Graph& g);

/// Components of g - S - T. S and T must be disjoint (argument error otherwise).
std::vector<VertexList> components_after_removal(const Graph& g, const VertexList& S,
                                                 const VertexList& T);

/// Ore-type degree report for target factor degree k: the margin by which
/// nonadjacent degree sums clear the threshold n + k - 2.
struct OreReport {
    int k = 0;
    /// min over nonadjacent {u,v} of d(u)+d(v) - (n+k-2); nullopt is the
    /// +infinity sentinel (no nonadjacent pair exists).
    std::optional<long long> deficit;
    std::optional<Edge> witness_pair;  // an achieving pair, if any

    bool is_ore_type() const { return !deficit.has_value() || *deficit >= 0; }
};

OreReport ore_report(const Graph& g, int k);

/// Minimum number of vertices whose removal disconnects g; n-1 for complete
/// graphs. Computed by unit-capacity vertex-split max-flow over all
/// nonadjacent pairs. Requires n >= 2.
int vertex_connectivity(const Graph& g);

// ---- serialization --------------------------------------------------------

struct Graph6ParseError : std::runtime_error {
    std::size_t offset;
    Graph6ParseError(std::size_t off, const std::string& what)
        : std::runtime_error(what + " (byte offset " + std::to_string(off) + ")"), offset(off) {}
};

/// graph6, single-byte header form only (n <= 62): header byte n+63, then the
/// upper-triangle bits b(0,1),b(0,2),b(1,2),b(0,3),... packed 6 per byte, most
/// significant first, each byte offset by 63, zero-padded.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// DIMACS edge format: "c" comments, one "p edge <n> <m>" line, then m
/// "e <u> <v>" lines, 1-indexed.
Graph parse_dimacs(std::istream& in);

}  // namespace factorium

#endif
