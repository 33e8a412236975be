#ifndef CHROMATIC_OVERLAP_HPP
#define CHROMATIC_OVERLAP_HPP

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chromatic/bigint.hpp"
#include "chromatic/logvalue.hpp"
#include "chromatic/model.hpp"
#include "chromatic/partition.hpp"

namespace chromatic {

class ScaleGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Counts r_i of part-pairs (one part from each partition) meeting in exactly
// i >= 2 vertices; single-vertex intersections are singletons and not
// recorded. Derived: v = sum i*r_i vertices in the overlap, d = sum r_i*C(i,2)
// common forbidden edges, R = sum r_i blocks.
class OverlapSequence {
  public:
    OverlapSequence() = default;
    explicit OverlapSequence(std::vector<long long> counts_from_size_two);

    long long count_of(long long size) const;  // r_size, size >= 2
    long long max_block() const { return static_cast<long long>(r_.size()) + 1; }
    const std::vector<long long>& raw() const { return r_; }

    long long vertices() const;        // v
    long long common_edges() const;    // d
    long long blocks() const;          // R
    double rho(long long n) const { return static_cast<double>(vertices()) / static_cast<double>(n); }

    auto operator<=>(const OverlapSequence&) const = default;

  private:
    std::vector<long long> r_;  // r_[j] = number of blocks of size j+2
};

// k x k matrix of part-intersection cardinalities between two ordered
// k-equipartitions; rows follow the first partition's parts.
struct OverlapMatrix {
    long long k = 0;
    std::vector<long long> entries;  // row-major

    static OverlapMatrix from_partitions(const Partition& p1, const Partition& p2);

    long long at(long long x, long long y) const { return entries[x * k + y]; }
    OverlapSequence to_sequence() const;
    long long common_edges() const;  // sum over cells of C(entry, 2)
};

OverlapSequence overlap_sequence(const Partition& p1, const Partition& p2);

// Split of the overlap by the first partition's part sizes: V1/D1 for parts
// of size exactly a, V2/D2 for parts of size at most a-1, with the density
// ratios beta_i = 2 d_i / (v_i (a - i)); absent where v_i = 0.
struct BetaDensities {
    long long v1 = 0, v2 = 0, d1 = 0, d2 = 0;
    std::optional<double> beta1, beta2;
};

BetaDensities beta_densities(const Partition& p1, const Partition& p2, long long a);

// Exact number of 0-1 matrices with the given margins; dynamic programming
// over columns with the row state compressed to residual-sum multiplicities.
// Infeasible margins (including mismatched totals) count zero matrices.
big::Int count_01_matrices(const std::vector<long long>& row_sums,
                           const std::vector<long long>& col_sums);

// Asymptotic estimate for the same count: main term S!/(prod s_x! prod t_y!)
// with the -S2*T2/(2S^2) correction. `formal` is set when the hypothesis
// 1 <= max{s,t}^2 < S/6 fails numerically; the unknown error term is never
// included, only its max{s,t}^4/S scale is reported.
struct McKayEstimate {
    LogValue estimate;
    double main_log = 0.0;
    double correction = 0.0;
    bool formal = false;
    double error_bound = 0.0;
};

McKayEstimate mckay_estimate(const std::vector<long long>& row_sums,
                             const std::vector<long long>& col_sums);

// All ordered pairs of ordered k-equipartitions grouped by overlap sequence,
// by direct pair enumeration. Guard: P^2 <= 1e8 pairs.
std::map<OverlapSequence, big::Int> enumerate_overlap_pairs(long long n, long long k);

// M_r for every overlap sequence arising at (n,k), by enumerating the k x k
// matrices with equipartition margins. Guard: k <= 4 and n <= 12.
std::map<OverlapSequence, big::Int> enumerate_overlap_matrices(long long n, long long k);

// M_r for a single r (same enumeration, filtered). The reconstruction
// P_r = (n!/prod i!^{r_i}) * M_r must reproduce enumerate_overlap_pairs.
big::Int count_overlap_matrices(long long n, long long k, const OverlapSequence& r);

// n!/prod i!^{r_i}, the number of pairs sharing one given overlap matrix.
big::Int overlap_matrix_multiplicity(long long n, const OverlapSequence& r);

struct SecondMomentReport {
    LogValue mu;       // first moment
    LogValue direct;   // pair enumeration of q^{2f-d}
    LogValue grouped;  // mu^2 * sum_r Q_r b^d with P_r reconstructed from M_r
    double log_ratio = 0.0;  // log(E[Z^2]/mu^2), from the direct route

    struct Group {
        OverlapSequence r;
        big::Int p_r;
        long long d = 0;
    };
    std::vector<Group> groups;
    std::map<long long, big::Int> pairs_by_common_edges;  // d -> #pairs (direct route)
};

// E[Z_k^2] both ways at desk scale; the two routes share no counting logic.
SecondMomentReport second_moment_exact(long long n, long long k, const ModelParams& mp);

}  // namespace chromatic

#endif
