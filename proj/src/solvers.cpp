#include "chromatic/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <vector>

#include "chromatic/moments.hpp"

namespace chromatic {

namespace {

using Words = std::vector<std::uint64_t>;

void set_bit(Words& w, int v) { w[v / 64] |= 1ULL << (v % 64); }
void clear_bit(Words& w, int v) { w[v / 64] &= ~(1ULL << (v % 64)); }

bool words_empty(const Words& w) {
    for (auto x : w)
        if (x) return false;
    return true;
}

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoll(v);
}

// Clique branch and bound with greedy-colouring pruning. Candidates are
// visited in reverse colour-class order, so the class index bounds how much
// the current clique can still grow.
class CliqueSolver {
  public:
    CliqueSolver(const Graph& g, std::uint64_t budget)
        : g_(g), n_(g.size()), words_(g.words()), budget_(budget) {}

    int solve() {
        Words cand(words_, 0);
        for (int v = 0; v < n_; ++v) set_bit(cand, v);
        best_ = 0;
        expand(std::move(cand), 0);
        return best_;
    }

  private:
    void expand(Words cand, int depth) {
        if (++nodes_ > budget_)
            throw SolverRefusal("clique solver: node budget exceeded", best_, -1);

        std::vector<int> order;
        std::vector<int> bound;
        colour_sort(cand, order, bound);

        Words next(words_);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (depth + bound[idx] <= best_) return;
            const int v = order[idx];
            const std::uint64_t* nv = g_.row(v);
            for (int w = 0; w < words_; ++w) next[w] = cand[w] & nv[w];
            if (words_empty(next)) {
                best_ = std::max(best_, depth + 1);
            } else {
                expand(next, depth + 1);
            }
            clear_bit(cand, v);  // v will not be reconsidered at this level
        }
    }

    void colour_sort(const Words& cand, std::vector<int>& order, std::vector<int>& bound) {
        Words uncoloured = cand;
        int colour = 0;
        while (!words_empty(uncoloured)) {
            ++colour;
            Words avail = uncoloured;
            while (!words_empty(avail)) {
                int v = -1;
                for (int w = 0; w < words_; ++w)
                    if (avail[w]) {
                        v = w * 64 + std::countr_zero(avail[w]);
                        break;
                    }
                order.push_back(v);
                bound.push_back(colour);
                clear_bit(avail, v);
                clear_bit(uncoloured, v);
                const std::uint64_t* nv = g_.row(v);
                for (int w = 0; w < words_; ++w) avail[w] &= ~nv[w];
            }
        }
    }

    const Graph& g_;
    int n_;
    int words_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int best_ = 0;
};

// DSATUR-ordered k-colourability backtracking. Symmetry breaking: a vertex
// may use colours 0..used, so each new colour is opened by exactly one
// branch. Wipeout test uses the full k-colour range (colours beyond `used`
// may still open later).
class KColourSolver {
  public:
    KColourSolver(const Graph& g, int k, std::uint64_t budget)
        : g_(g), n_(g.size()), k_(k), budget_(budget), colour_(n_, -1), forbidden_(n_, 0),
          degree_(n_, 0) {
        for (int v = 0; v < n_; ++v) degree_[v] = g.degree(v);
        full_mask_ = k_ >= 64 ? ~0ULL : ((1ULL << k_) - 1);
    }

    bool feasible() {
        if (!place(0, 0)) return false;
        // certify the witness before reporting feasibility
        for (int u = 0; u < n_; ++u) {
            if (colour_[u] < 0 || colour_[u] >= k_)
                throw std::logic_error("k-colouring: incomplete witness");
            for (int v = u + 1; v < n_; ++v)
                if (g_.has_edge(u, v) && colour_[u] == colour_[v])
                    throw std::logic_error("k-colouring: witness has a monochromatic edge");
        }
        return true;
    }

  private:
    bool place(int coloured, int used) {
        if (coloured == n_) return true;
        if (++nodes_ > budget_) throw SolverRefusal("k-colouring: node budget exceeded", -1, -1);

        const int v = pick_vertex();
        const int limit = std::min(k_ - 1, used);
        std::vector<int> touched;  // per-frame undo list
        for (int c = 0; c <= limit; ++c) {
            if ((forbidden_[v] >> c) & 1ULL) continue;
            colour_[v] = c;
            touched.clear();
            bool dead = false;
            const std::uint64_t* nv = g_.row(v);
            for (int w = 0; w < g_.words() && !dead; ++w) {
                std::uint64_t bits = nv[w];
                while (bits) {
                    const int u = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (colour_[u] >= 0 || ((forbidden_[u] >> c) & 1ULL)) continue;
                    forbidden_[u] |= 1ULL << c;
                    touched.push_back(u);
                    if ((forbidden_[u] & full_mask_) == full_mask_) {
                        dead = true;
                        break;
                    }
                }
            }
            if (!dead && place(coloured + 1, std::max(used, c + 1))) return true;
            for (int u : touched) forbidden_[u] &= ~(1ULL << c);
            colour_[v] = -1;
        }
        return false;
    }

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            const int sat = std::popcount(forbidden_[v]);
            if (sat > best_sat || (sat == best_sat && degree_[v] > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = degree_[v];
            }
        }
        return best;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::uint64_t full_mask_ = 0;
    std::vector<int> colour_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<int> degree_;
};

}  // namespace

SolverLimits SolverLimits::from_env() {
    SolverLimits l;
    l.max_n_independence =
        static_cast<int>(env_ll("CHROMATIC_MAX_INDEPENDENCE_N", l.max_n_independence));
    l.max_n_chromatic = static_cast<int>(env_ll("CHROMATIC_MAX_CHROMATIC_N", l.max_n_chromatic));
    l.node_budget = static_cast<std::uint64_t>(
        env_ll("CHROMATIC_NODE_BUDGET", static_cast<long long>(l.node_budget)));
    return l;
}

int max_clique(const Graph& g, const SolverLimits& limits) {
    CliqueSolver solver(g, limits.node_budget);
    return solver.solve();
}

int independence_number(const Graph& g, const SolverLimits& limits) {
    if (g.size() > limits.max_n_independence)
        throw SolverRefusal("independence_number: n exceeds configured limit", -1, -1);
    return max_clique(g.complement(), limits);
}

int greedy_colouring_upper_bound(const Graph& g) {
    const int n = g.size();
    std::vector<std::uint64_t> forbidden(n, 0);  // colour bits < 64 only, heuristic ordering
    std::vector<int> colour(n, -1);
    std::vector<int> sat(n, 0);
    std::vector<int> degree(n, 0);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);

    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colour[u] >= 0) continue;
            if (sat[u] > best_sat || (sat[u] == best_sat && degree[u] > best_deg)) {
                v = u;
                best_sat = sat[u];
                best_deg = degree[u];
            }
        }
        int c = 0;
        while (c < 64 && ((forbidden[v] >> c) & 1ULL)) ++c;
        if (c == 64) {
            std::vector<char> seen(n + 1, 0);
            for (int u = 0; u < n; ++u)
                if (colour[u] >= 0 && g.has_edge(u, v)) seen[std::min(colour[u], n)] = 1;
            c = 0;
            while (seen[c]) ++c;
        }
        colour[v] = c;
        used = std::max(used, c + 1);
        if (c < 64) {
            for (int u = 0; u < n; ++u) {
                if (colour[u] >= 0 || !g.has_edge(u, v)) continue;
                if (!((forbidden[u] >> c) & 1ULL)) {
                    forbidden[u] |= 1ULL << c;
                    ++sat[u];
                }
            }
        }
    }
    return used;
}

int chromatic_number(const Graph& g, const SolverLimits& limits) {
    if (g.size() > limits.max_n_chromatic)
        throw SolverRefusal("chromatic_number: n exceeds configured limit", -1, -1);
    const int lb = max_clique(g, limits);
    const int ub = greedy_colouring_upper_bound(g);
    if (lb == ub) return lb;
    for (int k = lb; k < ub; ++k) {
        if (k > 63)
            throw SolverRefusal("chromatic_number: k-feasibility supports at most 64 colours", lb, ub);
        KColourSolver solver(g, k, limits.node_budget);
        try {
            if (solver.feasible()) return k;
        } catch (const SolverRefusal&) {
            throw SolverRefusal("chromatic_number: node budget exceeded", lb, ub);
        }
    }
    return ub;
}

big::Int count_proper_equipartitions(const Graph& g, int k, const SolverLimits& limits) {
    const int n = g.size();
    if (n > limits.max_n_equipartition_count || n > 64)
        throw SolverRefusal("count_proper_equipartitions: n exceeds desk-scale limit", -1, -1);
    const auto shape = EquipartitionShape::make(n, k);

    std::vector<std::uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) adj[u] |= 1ULL << v;

    std::vector<std::uint64_t> part_mask(k, 0);
    std::vector<int> capacity(k);
    for (int i = 0; i < k; ++i)
        capacity[i] = static_cast<int>(i < shape.k1 ? shape.ceil_size : shape.floor_size);

    // Parts with identical content and capacity are exchangeable below this
    // node: branch once and scale by the multiplicity.
    auto rec = [&](auto&& self, int v) -> big::Int {
        if (v == n) return 1;
        big::Int total = 0;
        for (int i = 0; i < k; ++i) {
            if (capacity[i] == 0 || (adj[v] & part_mask[i])) continue;
            bool duplicate = false;
            for (int j = 0; j < i; ++j)
                if (capacity[j] == capacity[i] && part_mask[j] == part_mask[i]) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            int multiplicity = 1;
            for (int j = i + 1; j < k; ++j)
                if (capacity[j] == capacity[i] && part_mask[j] == part_mask[i]) ++multiplicity;
            --capacity[i];
            part_mask[i] |= 1ULL << v;
            total += multiplicity * self(self, v + 1);
            part_mask[i] &= ~(1ULL << v);
            ++capacity[i];
        }
        return total;
    };
    return rec(rec, 0);
}

}  // namespace chromatic
