#include "smoothdual/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace smoothdual {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_sum(const Partition& p) {
    int sum = 0;
    for (const int part : p) sum += part;
    return sum;
}

namespace {

void descend(int max_part, int remaining, Partition& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        current.push_back(part);
        descend(part, remaining - part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int r) {
    if (r < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<Partition> out;
    Partition current;
    descend(r, r, current, out);
    return out;
}

std::vector<std::pair<int, int>> part_multiplicities(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (!out.empty() && out.back().first == *it)
            ++out.back().second;
        else
            out.emplace_back(*it, 1);
    }
    return out;
}

std::uint64_t factorial(int r) {
    if (r < 0 || r > 20) throw std::invalid_argument("factorial: out of 64-bit range");
    std::uint64_t f = 1;
    for (int i = 2; i <= r; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t centralizer_order(const Partition& p) {
    std::uint64_t order = 1;
    for (const auto& [part, count] : part_multiplicities(p)) {
        for (int i = 0; i < count; ++i) order *= static_cast<std::uint64_t>(part);
        order *= factorial(count);
    }
    return order;
}

std::uint64_t conjugacy_class_size(const Partition& p) {
    return factorial(partition_sum(p)) / centralizer_order(p);
}

}  // namespace smoothdual
