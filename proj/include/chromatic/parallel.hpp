#ifndef CHROMATIC_PARALLEL_HPP
#define CHROMATIC_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace chromatic {

// Index-order-preserving parallel map over [0, count) with a bounded worker
// pool. fn(i) must be independent of evaluation order; results land in slot i,
// so aggregation stays deterministic.
template <typename T, typename Fn>
std::vector<T> parallel_map(int count, Fn&& fn) {
    std::vector<T> out(count);
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(count));
    if (workers <= 1 || count < 2) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> cursor{0};
    auto worker = [&] {
        for (;;) {
            const int i = cursor.fetch_add(1);
            if (i >= count) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return out;
}

}  // namespace chromatic

#endif
