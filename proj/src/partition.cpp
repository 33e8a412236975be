#include "chromatic/partition.hpp"

#include <stdexcept>

namespace chromatic {

Partition::Partition(std::vector<int> assignment, int k)
    : assignment_(std::move(assignment)), k_(k) {
    if (k_ < 1 || assignment_.empty())
        throw std::invalid_argument("Partition: empty assignment or k < 1");
    part_sizes_.assign(k_, 0);
    for (int part : assignment_) {
        if (part < 0 || part >= k_) throw std::invalid_argument("Partition: part index out of range");
        ++part_sizes_[part];
    }
    const auto shape = EquipartitionShape::make(static_cast<int>(assignment_.size()), k_);
    for (int i = 0; i < k_; ++i) {
        const long long want = i < shape.k1 ? shape.ceil_size : shape.floor_size;
        if (part_sizes_[i] != want)
            throw std::invalid_argument("Partition: not an ordered equipartition shape");
    }
}

void for_each_ordered_equipartition(int n, int k,
                                    const std::function<void(const std::vector<int>&)>& fn) {
    const auto shape = EquipartitionShape::make(n, k);
    std::vector<int> capacity(k);
    for (int i = 0; i < k; ++i)
        capacity[i] = static_cast<int>(i < shape.k1 ? shape.ceil_size : shape.floor_size);
    std::vector<int> assignment(n, -1);

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            fn(assignment);
            return;
        }
        for (int part = 0; part < k; ++part) {
            if (capacity[part] == 0) continue;
            --capacity[part];
            assignment[v] = part;
            self(self, v + 1);
            ++capacity[part];
        }
        assignment[v] = -1;
    };
    rec(rec, 0);
}

}  // namespace chromatic
