#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chromatic/overlap.hpp"
#include "chromatic/rng.hpp"

using namespace chromatic;

namespace {

Partition make_partition(std::vector<int> assignment, int k) {
    return Partition(std::move(assignment), k);
}

// random ordered k-equipartition: shuffle vertices, fill parts in shape order
Partition random_partition(int n, int k, SplitMix64& rng) {
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(verts[i], verts[rng.next() % static_cast<std::uint64_t>(i + 1)]);
    const auto shape = EquipartitionShape::make(n, k);
    std::vector<int> assignment(n);
    int idx = 0;
    for (int part = 0; part < k; ++part) {
        const long long size = part < shape.k1 ? shape.ceil_size : shape.floor_size;
        for (long long j = 0; j < size; ++j) assignment[verts[idx++]] = part;
    }
    return make_partition(std::move(assignment), k);
}

}  // namespace

TEST_CASE("overlap sequence derived quantities recompute from the counts") {
    const OverlapSequence r({2, 1, 0, 1});  // two 2-blocks, one 3-block, one 5-block
    CHECK(r.vertices() == 2 * 2 + 3 + 5);
    CHECK(r.common_edges() == 2 * 1 + 3 + 10);
    CHECK(r.blocks() == 4);
    CHECK(r.count_of(2) == 2);
    CHECK(r.count_of(4) == 0);
    CHECK(r.count_of(7) == 0);
    CHECK(OverlapSequence({0, 0}) == OverlapSequence{});  // trailing zeros trim
}

TEST_CASE("overlap sequence of concrete partition pairs") {
    SUBCASE("identical partitions recover the shape and d = f") {
        const auto p = make_partition({0, 0, 0, 1, 1}, 2);  // shape (3,2)
        const auto r = overlap_sequence(p, p);
        CHECK(r.count_of(3) == 1);
        CHECK(r.count_of(2) == 1);
        CHECK(r.common_edges() == EquipartitionShape::make(5, 2).forbidden_edges);
        CHECK(r.vertices() == 5);
    }

    SUBCASE("crossing pair overlaps only in singletons") {
        const auto p1 = make_partition({0, 0, 1, 1}, 2);  // {01|23}
        const auto p2 = make_partition({0, 1, 0, 1}, 2);  // {02|13}
        const auto r = overlap_sequence(p1, p2);
        CHECK(r.vertices() == 0);
        CHECK(r.common_edges() == 0);
        CHECK(r.blocks() == 0);
    }

    SUBCASE("shape mismatch throws") {
        const auto p1 = make_partition({0, 0, 1, 1}, 2);
        const auto p2 = make_partition({0, 0, 1, 1, 2, 2}, 3);
        CHECK_THROWS(overlap_sequence(p1, p2));
    }
}

TEST_CASE("partition construction enforces the ordered equipartition shape") {
    CHECK_THROWS(make_partition({0, 0, 0, 1}, 2));        // sizes 3,1 differ by 2
    CHECK_THROWS(make_partition({0, 1, 1, 1, 0}, 2));     // sizes 2,3: larger part must come first
    CHECK_THROWS(make_partition({0, 0, 2, 2}, 3));        // empty middle part
    CHECK_NOTHROW(make_partition({0, 1, 0, 1}, 2));
    CHECK_NOTHROW(make_partition({0, 0, 1, 2}, 3));       // ceil part first
    CHECK_THROWS(make_partition({0, 1, 2, 2}, 3));        // ceil part last
}

TEST_CASE("overlap matrix margins follow the equipartition shape") {
    SplitMix64 rng(17);
    for (int round = 0; round < 50; ++round) {
        const int n = 5 + static_cast<int>(rng.next() % 8);
        const int k = 2 + static_cast<int>(rng.next() % 3);
        if (k > n) continue;
        const auto shape = EquipartitionShape::make(n, k);
        const auto p1 = random_partition(n, k, rng);
        const auto p2 = random_partition(n, k, rng);
        const auto m = OverlapMatrix::from_partitions(p1, p2);
        long long total = 0;
        for (long long x = 0; x < m.k; ++x) {
            long long row = 0, col = 0;
            for (long long y = 0; y < m.k; ++y) {
                row += m.at(x, y);
                col += m.at(y, x);
                total += m.at(x, y);
            }
            const long long want = x < shape.k1 ? shape.ceil_size : shape.floor_size;
            CHECK(row == want);
            CHECK(col == want);
        }
        CHECK(total == n);
    }
}

TEST_CASE("overlap sequence is symmetric in the pair") {
    SplitMix64 rng(18);
    for (int round = 0; round < 1000; ++round) {
        const int n = 4 + static_cast<int>(rng.next() % 9);
        const int k = 2 + static_cast<int>(rng.next() % 3);
        if (k > n) continue;
        const auto p1 = random_partition(n, k, rng);
        const auto p2 = random_partition(n, k, rng);
        CHECK(overlap_sequence(p1, p2) == overlap_sequence(p2, p1));
    }
}

TEST_CASE("d <= f with equality exactly for part permutations (exhaustive at 4,2)") {
    const long long f = EquipartitionShape::make(4, 2).forbidden_edges;
    std::vector<Partition> parts;
    for_each_ordered_equipartition(4, 2, [&](const std::vector<int>& a) {
        parts.push_back(make_partition(a, 2));
    });
    REQUIRE(parts.size() == 6);
    for (const auto& p1 : parts) {
        for (const auto& p2 : parts) {
            const long long d = overlap_sequence(p1, p2).common_edges();
            CHECK(d <= f);
            // part-permutation = equal multisets of parts
            auto parts_of = [](const Partition& p) {
                std::vector<std::vector<int>> out(p.k());
                for (int v = 0; v < p.n(); ++v) out[p.part_of(v)].push_back(v);
                std::sort(out.begin(), out.end());
                return out;
            };
            CHECK((d == f) == (parts_of(p1) == parts_of(p2)));
        }
    }
}

TEST_CASE("beta densities") {
    SUBCASE("identical partitions with all parts of size a") {
        const auto p = make_partition({0, 0, 0, 1, 1, 1}, 2);
        const auto b = beta_densities(p, p, 3);
        CHECK(b.v1 == 6);
        CHECK(b.v2 == 0);
        REQUIRE(b.beta1.has_value());
        CHECK(*b.beta1 == doctest::Approx(1.0));
        CHECK_FALSE(b.beta2.has_value());
    }

    SUBCASE("parts larger than a are rejected") {
        const auto p = make_partition({0, 0, 0, 1, 1, 1}, 2);
        CHECK_THROWS_AS(beta_densities(p, p, 2), std::invalid_argument);
    }

    SUBCASE("singleton-only overlap leaves both densities absent") {
        const auto p1 = make_partition({0, 0, 1, 1}, 2);
        const auto p2 = make_partition({0, 1, 0, 1}, 2);
        const auto b = beta_densities(p1, p2, 2);
        CHECK(b.v1 == 0);
        CHECK(b.v2 == 0);
        CHECK_FALSE(b.beta1.has_value());
        CHECK_FALSE(b.beta2.has_value());
    }

    SUBCASE("one 2-block inside a size-3 part at a = 3") {
        const auto p1 = make_partition({0, 0, 0, 1, 1}, 2);  // {012|34}
        const auto p2 = make_partition({0, 0, 1, 0, 1}, 2);  // {013|24}
        const auto b = beta_densities(p1, p2, 3);
        CHECK(b.v1 == 2);
        CHECK(b.d1 == 1);
        REQUIRE(b.beta1.has_value());
        CHECK(*b.beta1 == doctest::Approx(0.5));
        CHECK(b.v2 == 0);
    }

    SUBCASE("v1 + v2 = v and d1 + d2 = d on random pairs") {
        SplitMix64 rng(19);
        for (int round = 0; round < 300; ++round) {
            const int n = 6 + static_cast<int>(rng.next() % 7);
            const int k = 2 + static_cast<int>(rng.next() % 3);
            const auto p1 = random_partition(n, k, rng);
            const auto p2 = random_partition(n, k, rng);
            const long long a = EquipartitionShape::make(n, k).ceil_size;
            const auto b = beta_densities(p1, p2, std::max<long long>(a, 2));
            const auto r = overlap_sequence(p1, p2);
            CHECK(b.v1 + b.v2 == r.vertices());
            CHECK(b.d1 + b.d2 == r.common_edges());
            if (b.beta1) CHECK((*b.beta1 >= 0.0 && *b.beta1 <= 1.0));
            if (b.beta2) CHECK((*b.beta2 >= 0.0 && *b.beta2 <= 1.0));
        }
    }
}

TEST_CASE("contingency counting: knowns, invariances, infeasibles") {
    CHECK(count_01_matrices({1, 1, 1}, {1, 1, 1}) == 6);
    CHECK(count_01_matrices({2, 2}, {2, 2}) == 1);
    CHECK(count_01_matrices({2, 2, 2}, {2, 2, 2}) == 6);
    CHECK(count_01_matrices({3, 1}, {1, 1, 1, 1}) == 4);
    CHECK(count_01_matrices({1, 1}, {2, 1}) == 0);   // sum mismatch
    CHECK(count_01_matrices({3}, {1, 1}) == 0);      // row exceeds width
    CHECK(count_01_matrices({}, {}) == 1);

    SplitMix64 rng(20);
    for (int round = 0; round < 100; ++round) {
        const int m = 1 + static_cast<int>(rng.next() % 4);
        const int n = 1 + static_cast<int>(rng.next() % 4);
        std::vector<long long> rows(m), cols(n);
        long long total = 0;
        for (auto& r : rows) {
            r = static_cast<long long>(rng.next() % (n + 1));
            total += r;
        }
        // draw columns to match the total when possible
        long long left = total;
        for (int j = 0; j < n; ++j) {
            const long long hi = std::min<long long>(m, left);
            cols[j] = j == n - 1 ? left : static_cast<long long>(rng.next() % (hi + 1));
            left -= cols[j];
        }
        if (left != 0 || cols.back() > m) continue;
        const auto base = count_01_matrices(rows, cols);
        CHECK(count_01_matrices(cols, rows) == base);  // transpose
        auto rows2 = rows;
        std::reverse(rows2.begin(), rows2.end());
        auto cols2 = cols;
        std::reverse(cols2.begin(), cols2.end());
        CHECK(count_01_matrices(rows2, cols2) == base);  // margin permutation
    }
}

TEST_CASE("asymptotic matrix-count estimate") {
    SUBCASE("all margins one is exact: main term m!, zero correction") {
        for (int m = 1; m <= 8; ++m) {
            const std::vector<long long> ones(m, 1);
            const auto est = mckay_estimate(ones, ones);
            CHECK(est.correction == 0.0);
            CHECK(est.estimate.log() ==
                  doctest::Approx(big::log_of(big::factorial(m))).epsilon(1e-12));
        }
    }

    SUBCASE("margin mismatch throws") {
        CHECK_THROWS_AS(mckay_estimate({2, 1}, {1, 1}), std::invalid_argument);
    }

    SUBCASE("frozen log-ratios at the start of the margins-3 family") {
        const struct {
            int k;
            double ratio;
            bool formal;
        } frozen[] = {{10, 0.16767577483538787, true}, {20, 0.08078923820210093, false}};
        for (const auto& c : frozen) {
            const std::vector<long long> margins(c.k, 3);
            const auto est = mckay_estimate(margins, margins);
            const double exact_log = big::log_of(count_01_matrices(margins, margins));
            CHECK(std::abs(exact_log - est.estimate.log()) ==
                  doctest::Approx(c.ratio).epsilon(1e-9));
            CHECK(est.formal == c.formal);  // max^2 = 9 vs S/6 threshold
            CHECK(est.error_bound == doctest::Approx(81.0 / (3.0 * c.k)));
        }
    }
}

TEST_CASE("pair enumeration grouped by overlap sequence") {
    const auto pairs = enumerate_overlap_pairs(4, 2);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs.at(OverlapSequence{}) == 24);       // singleton-only pairs
    CHECK(pairs.at(OverlapSequence({2})) == 12);    // two shared 2-blocks
    big::Int total = 0;
    for (const auto& [r, c] : pairs) total += c;
    CHECK(total == 36);

    CHECK_THROWS_AS(enumerate_overlap_pairs(40, 5), ScaleGuardError);
}

TEST_CASE("matrix enumeration reconstructs the pair counts for every n <= 6, k <= 3") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= std::min(n, 3); ++k) {
            const auto pairs = enumerate_overlap_pairs(n, k);
            const auto matrices = enumerate_overlap_matrices(n, k);
            REQUIRE(pairs.size() == matrices.size());
            big::Int total = 0;
            for (const auto& [r, p_r] : pairs) {
                CHECK(overlap_matrix_multiplicity(n, r) * matrices.at(r) == p_r);
                total += p_r;
            }
            const big::Int p = equipartition_count(EquipartitionShape::make(n, k));
            CHECK(total == p * p);
        }
    }

    SUBCASE("single-sequence counts at (4,2)") {
        CHECK(count_overlap_matrices(4, 2, OverlapSequence{}) == 1);      // all-ones matrix
        CHECK(count_overlap_matrices(4, 2, OverlapSequence({2})) == 2);   // diagonal placements
        CHECK(overlap_matrix_multiplicity(4, OverlapSequence({2})) * 2 == 12);
        CHECK(count_overlap_matrices(4, 2, OverlapSequence({0, 0, 0, 1})) == 0);  // v > n
    }

    SUBCASE("scale guard") {
        CHECK_THROWS_AS(count_overlap_matrices(13, 2, OverlapSequence{}), ScaleGuardError);
        CHECK_THROWS_AS(enumerate_overlap_matrices(8, 5), ScaleGuardError);
    }
}

TEST_CASE("second moment dual computation") {
    SUBCASE("frozen values at (6,3,1/2)") {
        const auto rep = second_moment_exact(6, 3, ModelParams(6, 0.5));
        CHECK(rep.mu.log() == doctest::Approx(std::log(11.25)).epsilon(1e-13));
        CHECK(rep.direct.log() == doctest::Approx(5.464890566373852).epsilon(1e-12));
        CHECK(std::abs(rep.direct.log() - rep.grouped.log()) <= 1e-12);
        CHECK(std::exp(rep.log_ratio) == doctest::Approx(28.0 / 15.0).epsilon(1e-12));
        REQUIRE(rep.groups.size() == 3);
        big::Int total = 0;
        for (const auto& g : rep.groups) total += g.p_r;
        CHECK(total == 8100);
    }

    SUBCASE("(4,2,1/2): 36 pairs, ratio exactly 2") {
        const auto rep = second_moment_exact(4, 2, ModelParams(4, 0.5));
        CHECK(rep.direct.value() == doctest::Approx(4.5).epsilon(1e-12));
        CHECK(std::exp(rep.log_ratio) == doctest::Approx(2.0).epsilon(1e-12));
        // d histogram: 24 pairs share no forbidden edge, 12 share both
        CHECK(rep.pairs_by_common_edges.at(0) == 24);
        CHECK(rep.pairs_by_common_edges.at(2) == 12);
    }

    SUBCASE("empty-graph limit: ratio tends to one") {
        const auto rep = second_moment_exact(5, 2, ModelParams(5, 1e-9));
        CHECK(std::exp(rep.log_ratio) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(rep.direct.log() ==
              doctest::Approx(2.0 * std::log(10.0)).epsilon(1e-6));  // P^2 = 100
    }

    SUBCASE("routes agree and the ratio stays >= 1 on every desk-scale shape") {
        for (int n = 4; n <= 12; ++n) {
            for (int k = 2; k <= std::min(4, n - 1); ++k) {
                const big::Int p_total = equipartition_count(EquipartitionShape::make(n, k));
                if (p_total > 4500) continue;  // keep the sweep under a few seconds
                for (double p : {0.25, 0.5, 0.9}) {
                    if (!(std::log(double(n)) > -std::log1p(-p))) continue;  // model domain
                    const auto rep = second_moment_exact(n, k, ModelParams(n, p));
                    CHECK(std::abs(rep.direct.log() - rep.grouped.log()) <= 1e-12);
                    CHECK(rep.log_ratio >= -1e-12);
                }
            }
        }
    }

    SUBCASE("scale guard") {
        CHECK_THROWS_AS(second_moment_exact(14, 2, ModelParams(14, 0.5)), ScaleGuardError);
    }
}
