#include "chromatic/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace chromatic {

OverlapSequence::OverlapSequence(std::vector<long long> counts_from_size_two)
    : r_(std::move(counts_from_size_two)) {
    for (long long c : r_)
        if (c < 0) throw std::invalid_argument("OverlapSequence: negative count");
    while (!r_.empty() && r_.back() == 0) r_.pop_back();
}

long long OverlapSequence::count_of(long long size) const {
    if (size < 2 || size - 2 >= static_cast<long long>(r_.size())) return 0;
    return r_[size - 2];
}

long long OverlapSequence::vertices() const {
    long long v = 0;
    for (std::size_t j = 0; j < r_.size(); ++j) v += static_cast<long long>(j + 2) * r_[j];
    return v;
}

long long OverlapSequence::common_edges() const {
    long long d = 0;
    for (std::size_t j = 0; j < r_.size(); ++j) d += big::choose2(static_cast<long long>(j + 2)) * r_[j];
    return d;
}

long long OverlapSequence::blocks() const {
    long long t = 0;
    for (long long c : r_) t += c;
    return t;
}

OverlapMatrix OverlapMatrix::from_partitions(const Partition& p1, const Partition& p2) {
    if (p1.n() != p2.n() || p1.k() != p2.k())
        throw std::invalid_argument("OverlapMatrix: partitions must share n and k");
    OverlapMatrix m;
    m.k = p1.k();
    m.entries.assign(static_cast<std::size_t>(m.k) * m.k, 0);
    for (int v = 0; v < p1.n(); ++v) ++m.entries[p1.part_of(v) * m.k + p2.part_of(v)];
    return m;
}

OverlapSequence OverlapMatrix::to_sequence() const {
    long long max_entry = 0;
    for (long long e : entries) max_entry = std::max(max_entry, e);
    std::vector<long long> counts(max_entry >= 2 ? max_entry - 1 : 0, 0);
    for (long long e : entries)
        if (e >= 2) ++counts[e - 2];
    return OverlapSequence(std::move(counts));
}

long long OverlapMatrix::common_edges() const {
    long long d = 0;
    for (long long e : entries) d += big::choose2(e);
    return d;
}

OverlapSequence overlap_sequence(const Partition& p1, const Partition& p2) {
    return OverlapMatrix::from_partitions(p1, p2).to_sequence();
}

BetaDensities beta_densities(const Partition& p1, const Partition& p2, long long a) {
    if (a < 2) throw std::invalid_argument("beta_densities: a must be at least 2");
    // the split assumes every part has size a or less
    for (int size : p1.part_sizes())
        if (size > a) throw std::invalid_argument("beta_densities: part larger than a");
    const OverlapMatrix m = OverlapMatrix::from_partitions(p1, p2);
    BetaDensities out;
    for (long long x = 0; x < m.k; ++x) {
        const bool large_part = p1.part_sizes()[static_cast<std::size_t>(x)] == a;
        for (long long y = 0; y < m.k; ++y) {
            const long long e = m.at(x, y);
            if (e < 2) continue;
            if (large_part) {
                out.v1 += e;
                out.d1 += big::choose2(e);
            } else {
                out.v2 += e;
                out.d2 += big::choose2(e);
            }
        }
    }
    if (out.v1 > 0)
        out.beta1 = 2.0 * static_cast<double>(out.d1) /
                    (static_cast<double>(out.v1) * static_cast<double>(a - 1));
    if (out.v2 > 0)
        out.beta2 = 2.0 * static_cast<double>(out.d2) /
                    (static_cast<double>(out.v2) * static_cast<double>(a - 2));
    return out;
}

big::Int count_01_matrices(const std::vector<long long>& row_sums,
                           const std::vector<long long>& col_sums) {
    const long long m = static_cast<long long>(row_sums.size());
    const long long n = static_cast<long long>(col_sums.size());
    long long total_r = 0, total_c = 0, max_r = 0;
    for (long long s : row_sums) {
        if (s < 0 || s > n) return 0;
        total_r += s;
        max_r = std::max(max_r, s);
    }
    for (long long t : col_sums) {
        if (t < 0 || t > m) return 0;
        total_c += t;
    }
    if (total_r != total_c) return 0;
    if (m == 0 || n == 0) return total_r == 0 ? 1 : 0;

    // State: occurrence counts of residual row sums 0..max_r. Rows with equal
    // residual are exchangeable, which keeps the state space polynomial for
    // bounded margins.
    using State = std::vector<int>;
    std::map<State, big::Int> states;
    {
        State init(static_cast<std::size_t>(max_r) + 1, 0);
        for (long long s : row_sums) ++init[static_cast<std::size_t>(s)];
        states.emplace(std::move(init), 1);
    }

    for (long long y = 0; y < n; ++y) {
        const long long t = col_sums[static_cast<std::size_t>(y)];
        std::map<State, big::Int> next;
        for (const auto& [state, ways] : states) {
            // distribute t ones over residual classes 1..max_r
            State chosen(state.size(), 0);
            auto place = [&](auto&& self, long long cls, long long left, const big::Int& mult) -> void {
                if (cls == 0) {
                    if (left != 0) return;
                    State ns(state);
                    for (std::size_t j = 1; j < ns.size(); ++j) {
                        ns[j] -= chosen[j];
                        ns[j - 1] += chosen[j];
                    }
                    next[ns] += mult;
                    return;
                }
                const long long cap = std::min<long long>(left, state[static_cast<std::size_t>(cls)]);
                for (long long x = 0; x <= cap; ++x) {
                    chosen[static_cast<std::size_t>(cls)] = static_cast<int>(x);
                    self(self, cls - 1, left - x,
                         mult * big::binomial(state[static_cast<std::size_t>(cls)], x));
                }
                chosen[static_cast<std::size_t>(cls)] = 0;
            };
            place(place, max_r, t, ways);
        }
        states = std::move(next);
        if (states.empty()) return 0;
    }

    State done(static_cast<std::size_t>(max_r) + 1, 0);
    done[0] = static_cast<int>(m);
    auto it = states.find(done);
    return it == states.end() ? big::Int(0) : it->second;
}

McKayEstimate mckay_estimate(const std::vector<long long>& row_sums,
                             const std::vector<long long>& col_sums) {
    long long S = 0, T = 0, s_max = 0, t_max = 0, S2 = 0, T2 = 0;
    for (long long s : row_sums) {
        if (s < 0) throw std::invalid_argument("mckay_estimate: negative margin");
        S += s;
        s_max = std::max(s_max, s);
        S2 += s * (s - 1);
    }
    for (long long t : col_sums) {
        if (t < 0) throw std::invalid_argument("mckay_estimate: negative margin");
        T += t;
        t_max = std::max(t_max, t);
        T2 += t * (t - 1);
    }
    if (S != T) throw std::invalid_argument("mckay_estimate: margin sums differ");

    McKayEstimate out;
    double lg = big::log_factorial(S);
    for (long long s : row_sums) lg -= big::log_factorial(s);
    for (long long t : col_sums) lg -= big::log_factorial(t);
    out.main_log = lg;
    out.correction = S > 0 ? -static_cast<double>(S2) * static_cast<double>(T2) /
                                 (2.0 * static_cast<double>(S) * static_cast<double>(S))
                           : 0.0;
    out.estimate = LogValue::from_log(out.main_log + out.correction);
    const double mx = static_cast<double>(std::max(s_max, t_max));
    out.error_bound = S > 0 ? mx * mx * mx * mx / static_cast<double>(S)
                            : std::numeric_limits<double>::infinity();
    const double mx2 = mx * mx;
    out.formal = !(S > 0 && mx2 >= 1.0 && mx2 < static_cast<double>(S) / 6.0);
    return out;
}

namespace {

std::vector<std::vector<int>> all_equipartitions(long long n, long long k) {
    std::vector<std::vector<int>> out;
    for_each_ordered_equipartition(static_cast<int>(n), static_cast<int>(k),
                                   [&](const std::vector<int>& a) { out.push_back(a); });
    return out;
}

void check_matrix_scale(long long n, long long k) {
    if (k > 4 || n > 12)
        throw ScaleGuardError("overlap matrix enumeration limited to k <= 4, n <= 12");
}

// Enumerates every k x k nonnegative matrix with ordered-equipartition
// margins, invoking fn(entries). Cells are filled row-major with residual
// pruning; desk scale keeps this small.
void for_each_margin_matrix(long long n, long long k,
                            const std::function<void(const std::vector<long long>&)>& fn) {
    const auto shape = EquipartitionShape::make(n, k);
    std::vector<long long> row_need(k), col_need(k);
    for (long long i = 0; i < k; ++i) {
        row_need[i] = i < shape.k1 ? shape.ceil_size : shape.floor_size;
        col_need[i] = row_need[i];
    }
    std::vector<long long> cells(static_cast<std::size_t>(k) * k, 0);

    auto rec = [&](auto&& self, long long idx) -> void {
        if (idx == k * k) {
            fn(cells);
            return;
        }
        const long long x = idx / k, y = idx % k;
        // remaining columns in this row after y, used to prune row residue
        const long long cols_left_after = k - y - 1;
        long long max_later = 0;
        for (long long yy = y + 1; yy < k; ++yy) max_later += std::min(row_need[x], col_need[yy]);
        const long long hi = std::min(row_need[x], col_need[y]);
        const long long lo = std::max<long long>(0, row_need[x] - max_later);
        (void)cols_left_after;
        for (long long e = lo; e <= hi; ++e) {
            row_need[x] -= e;
            col_need[y] -= e;
            cells[static_cast<std::size_t>(idx)] = e;
            if (y < k - 1 || row_need[x] == 0) self(self, idx + 1);
            cells[static_cast<std::size_t>(idx)] = 0;
            row_need[x] += e;
            col_need[y] += e;
        }
    };
    rec(rec, 0);
}

OverlapSequence sequence_of_cells(const std::vector<long long>& cells) {
    long long max_entry = 0;
    for (long long e : cells) max_entry = std::max(max_entry, e);
    std::vector<long long> counts(max_entry >= 2 ? max_entry - 1 : 0, 0);
    for (long long e : cells)
        if (e >= 2) ++counts[e - 2];
    return OverlapSequence(std::move(counts));
}

}  // namespace

std::map<OverlapSequence, big::Int> enumerate_overlap_pairs(long long n, long long k) {
    const auto shape = EquipartitionShape::make(n, k);
    const big::Int p = equipartition_count(shape);
    if (p * p > 100'000'000)
        throw ScaleGuardError("enumerate_overlap_pairs: P^2 exceeds the 1e8 pair guard");

    const auto parts = all_equipartitions(n, k);
    std::map<OverlapSequence, big::Int> out;
    std::vector<long long> cells(static_cast<std::size_t>(k) * k, 0);
    for (const auto& a1 : parts) {
        for (const auto& a2 : parts) {
            std::fill(cells.begin(), cells.end(), 0);
            for (long long v = 0; v < n; ++v)
                ++cells[static_cast<std::size_t>(a1[static_cast<std::size_t>(v)]) * k +
                        a2[static_cast<std::size_t>(v)]];
            out[sequence_of_cells(cells)] += 1;
        }
    }
    return out;
}

std::map<OverlapSequence, big::Int> enumerate_overlap_matrices(long long n, long long k) {
    check_matrix_scale(n, k);
    std::map<OverlapSequence, big::Int> out;
    for_each_margin_matrix(n, k, [&](const std::vector<long long>& cells) {
        out[sequence_of_cells(cells)] += 1;
    });
    return out;
}

big::Int count_overlap_matrices(long long n, long long k, const OverlapSequence& r) {
    check_matrix_scale(n, k);
    if (r.vertices() > n) return 0;
    big::Int count = 0;
    for_each_margin_matrix(n, k, [&](const std::vector<long long>& cells) {
        if (sequence_of_cells(cells) == r) ++count;
    });
    return count;
}

big::Int overlap_matrix_multiplicity(long long n, const OverlapSequence& r) {
    big::Int m = big::factorial(n);
    for (long long size = 2; size <= r.max_block(); ++size) {
        const big::Int f = big::factorial(size);
        for (long long i = 0; i < r.count_of(size); ++i) m /= f;
    }
    return m;
}

SecondMomentReport second_moment_exact(long long n, long long k, const ModelParams& mp) {
    check_matrix_scale(n, k);
    const auto shape = EquipartitionShape::make(n, k);
    const big::Int p_total = equipartition_count(shape);
    if (p_total * p_total > 100'000'000)
        throw ScaleGuardError("second_moment_exact: P^2 exceeds the 1e8 pair guard");
    const double log_q = std::log1p(-mp.p);
    const double log_p_total = big::log_of(p_total);
    const long long two_f = 2 * shape.forbidden_edges;

    SecondMomentReport rep;
    rep.mu = first_moment(shape, mp);

    // Direct route: pairs grouped only by their common-edge count d.
    {
        const auto parts = all_equipartitions(n, k);
        std::vector<long long> cells(static_cast<std::size_t>(k) * k, 0);
        for (const auto& a1 : parts) {
            for (const auto& a2 : parts) {
                std::fill(cells.begin(), cells.end(), 0);
                for (long long v = 0; v < n; ++v)
                    ++cells[static_cast<std::size_t>(a1[static_cast<std::size_t>(v)]) * k +
                            a2[static_cast<std::size_t>(v)]];
                long long d = 0;
                for (long long e : cells) d += big::choose2(e);
                rep.pairs_by_common_edges[d] += 1;
            }
        }
        std::vector<double> logs;
        logs.reserve(rep.pairs_by_common_edges.size());
        for (const auto& [d, cnt] : rep.pairs_by_common_edges)
            logs.push_back(big::log_of(cnt) + static_cast<double>(two_f - d) * log_q);
        rep.direct = log_sum(logs);
    }

    // Grouped route: P_r reconstructed from the independent matrix enumerator,
    // then mu^2 * sum_r Q_r b^d in the log domain.
    {
        const auto m_r = enumerate_overlap_matrices(n, k);
        std::vector<double> logs;
        logs.reserve(m_r.size());
        for (const auto& [r, m] : m_r) {
            const big::Int p_r = overlap_matrix_multiplicity(n, r) * m;
            const long long d = r.common_edges();
            rep.groups.push_back({r, p_r, d});
            logs.push_back(big::log_of(p_r) - 2.0 * log_p_total -
                           static_cast<double>(d) * log_q);  // b^d = q^{-d}
        }
        rep.grouped = pow(rep.mu, 2.0) * log_sum(logs);
    }

    rep.log_ratio = rep.direct.log() - 2.0 * rep.mu.log();
    return rep;
}

}  // namespace chromatic
