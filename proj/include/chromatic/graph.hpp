#ifndef CHROMATIC_GRAPH_HPP
#define CHROMATIC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace chromatic {

// Undirected simple graph on n labelled vertices; adjacency held as one
// bitset row per vertex (row-major words). Immutable in spirit: solvers take
// it by const reference and never mutate.
class Graph {
  public:
    explicit Graph(int n);

    int size() const { return n_; }
    int words() const { return words_; }
    long long edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int u) const;

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    Graph complement() const;

    // Plain-text edge list: header "n m", then one "u v" per edge, 0-based.
    // Blank lines and lines starting with '#' are ignored on input; output is
    // sorted lexicographically.
    static Graph read_edge_list(std::istream& in);
    void write_edge_list(std::ostream& out) const;

  private:
    int n_;
    int words_;
    long long edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

// G(n,p) sample: one RNG draw per vertex pair in lexicographic order (u,v)
// with u < v; the edge is present iff the draw's unit double is < p.
Graph sample_gnp(int n, double p, std::uint64_t seed);

}  // namespace chromatic

#endif
