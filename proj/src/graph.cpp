#include "factorium/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace factorium {

Graph::Graph(int n) : n_(n), words_(n <= 0 ? 1 : (n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row_word(v, w));
    return d;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::is_regular() const {
    for (int v = 1; v < n_; ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

VertexList Graph::neighbors(int v) const {
    check_vertex(v);
    VertexList out;
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
}

Graph complement(const Graph& g) {
    Graph h(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph induced_subgraph(const Graph& g, const VertexList& keep) {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

namespace {

std::vector<VertexList> components_over(const Graph& g, const std::vector<char>& removed) {
    int n = g.size();
    std::vector<char> seen(removed.begin(), removed.end());
    std::vector<VertexList> comps;
    VertexList stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexList comp;
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.for_each_neighbor(v, [&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // seeds are scanned ascending, so the list is already ordered by min vertex
    return comps;
}

}  // namespace

std::vector<VertexList> components(const Graph& g) {
    return components_over(g, std::vector<char>(g.size(), 0));
}

std::vector<VertexList> components_after_removal(const Graph& g, const VertexList& S,
                                                 const VertexList& T) {
    std::vector<char> removed(g.size(), 0);
    for (int v : S) {
        if (v < 0 || v >= g.size()) throw std::invalid_argument("S vertex out of range");
        removed[v] = 1;
    }
    for (int v : T) {
        if (v < 0 || v >= g.size()) throw std::invalid_argument("T vertex out of range");
        if (removed[v]) throw std::invalid_argument("S and T overlap");
        removed[v] = 1;
    }
    return components_over(g, removed);
}

OreReport ore_report(const Graph& g, int k) {
    OreReport rep;
    rep.k = k;
    long long threshold = static_cast<long long>(g.size()) + k - 2;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (g.adjacent(u, v)) continue;
            long long margin = static_cast<long long>(g.degree(u)) + g.degree(v) - threshold;
            if (!rep.deficit || margin < *rep.deficit) {
                rep.deficit = margin;
                rep.witness_pair = Edge{u, v};
            }
        }
    return rep;
}

namespace {

// Max vertex-disjoint s-t paths in g (s,t nonadjacent): unit-capacity
// max-flow on the split digraph, in-node 2v, out-node 2v+1.
int vertex_flow(const Graph& g, int s, int t) {
    int n = g.size();
    int N = 2 * n;
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (int u = 0; u < n; ++u)
        g.for_each_neighbor(u, [&](int v) { cap[2 * u + 1][2 * v] = n; });
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(N, -1);
        prev[source] = source;
        VertexList queue{source};
        for (std::size_t qi = 0; qi < queue.size() && prev[sink] == -1; ++qi) {
            int v = queue[qi];
            for (int u = 0; u < N; ++u)
                if (prev[u] == -1 && cap[v][u] > 0) {
                    prev[u] = v;
                    queue.push_back(u);
                }
        }
        if (prev[sink] == -1) break;
        for (int v = sink; v != source; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.size();
    if (n < 2) throw std::invalid_argument("vertex_connectivity requires n >= 2");
    int best = n - 1;  // complete-graph convention
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) best = std::min(best, vertex_flow(g, u, v));
    return best;
}

// ---- graph6 ----------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError(0, "empty graph6 string");
    unsigned char header = static_cast<unsigned char>(text[0]);
    if (header < 63 || header > 126) throw Graph6ParseError(0, "header byte outside [63,126]");
    if (header == 126) throw Graph6ParseError(0, "multi-byte graph6 header (n > 62) unsupported");
    int n = header - 63;
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < expect)
        throw Graph6ParseError(text.size(), "graph6 string truncated");
    if (text.size() > expect)
        throw Graph6ParseError(expect, "trailing bytes after graph6 payload");

    Graph g(n);
    long long bit = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6ParseError(i, "payload byte outside [63,126]");
        int chunk = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int set = (chunk >> b) & 1;
            if (bit >= nbits) {
                if (set) throw Graph6ParseError(i, "nonzero padding bits");
                continue;
            }
            if (set) {
                // column-major upper triangle: bit index -> (u, v), u < v
                long long r = bit;
                int v = 1;
                while (r >= v) r -= v, ++v;
                g.add_edge(static_cast<int>(r), v);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.size();
    if (n > 62) throw std::length_error("graph6 single-byte header supports n <= 62 only");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int chunk = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((chunk << (6 - nbits)) + 63));
    return out;
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1, seen = 0;
    std::optional<Graph> g;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw std::invalid_argument("bad DIMACS problem line " + std::to_string(lineno));
            g.emplace(n);
        } else if (tag == "e") {
            int u, v;
            if (!g || !(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
                throw std::invalid_argument("bad DIMACS edge line " + std::to_string(lineno));
            g->add_edge(u - 1, v - 1);
            ++seen;
        } else {
            throw std::invalid_argument("unknown DIMACS line tag '" + tag + "' at line " +
                                        std::to_string(lineno));
        }
    }
    if (!g) throw std::invalid_argument("DIMACS input has no problem line");
    if (seen != m) throw std::invalid_argument("DIMACS edge count mismatch");
    return *g;
}

}  // namespace factorium
