#include "chromatic/graph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chromatic/rng.hpp"

namespace chromatic {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::domain_error("Graph: need n >= 1");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("Graph::add_edge: vertex index");
    if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
    if (has_edge(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1ULL;
}

int Graph::degree(int u) const {
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph Graph::read_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    long long seen = 0;
    Graph g(1);
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0)
                throw std::runtime_error("edge list: malformed header, expected \"n m\"");
            g = Graph(static_cast<int>(n));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw std::runtime_error("edge list: malformed edge line");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (n < 0) throw std::runtime_error("edge list: missing header");
    if (seen != m) throw std::runtime_error("edge list: edge count does not match header");
    return g;
}

void Graph::write_edge_list(std::ostream& out) const {
    out << n_ << ' ' << edge_count_ << '\n';
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out << u << ' ' << v << '\n';
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sample_gnp: p must lie in [0,1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) g.add_edge(u, v);
    return g;
}

}  // namespace chromatic
