#ifndef CHROMATIC_PARTITION_HPP
#define CHROMATIC_PARTITION_HPP

#include <functional>
#include <vector>

#include "chromatic/moments.hpp"

namespace chromatic {

// Ordered k-equipartition: vertex -> part assignment whose part sizes are
// non-increasing and differ by at most one (the ceil-sized parts come first).
class Partition {
  public:
    Partition(std::vector<int> assignment, int k);

    int k() const { return k_; }
    int n() const { return static_cast<int>(assignment_.size()); }
    int part_of(int v) const { return assignment_[v]; }
    const std::vector<int>& assignment() const { return assignment_; }
    const std::vector<int>& part_sizes() const { return part_sizes_; }
    EquipartitionShape shape() const { return EquipartitionShape::make(n(), k_); }

    bool operator==(const Partition&) const = default;

  private:
    std::vector<int> assignment_;
    std::vector<int> part_sizes_;
    int k_;
};

// Visits every ordered k-equipartition of {0,...,n-1} exactly once (there are
// P of them). Desk-scale only; the callback receives a reusable assignment.
void for_each_ordered_equipartition(int n, int k,
                                    const std::function<void(const std::vector<int>&)>& fn);

}  // namespace chromatic

#endif
