#include "tautkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tautkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::without(int i) const {
    std::vector<int> p = parts_;
    p.erase(p.begin() + i);
    return Partition(std::move(p));
}

Partition Partition::with(int part) const {
    std::vector<int> p = parts_;
    p.push_back(part);
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> Partition::all_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

std::vector<Partition> Partition::all_of(int d, int n) {
    std::vector<Partition> out;
    for (const auto& p : all_of(d))
        if (p.length() == n) out.push_back(p);
    return out;
}

}  // namespace tautkit
