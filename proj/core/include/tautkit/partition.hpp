#ifndef TAUTKIT_PARTITION_HPP
#define TAUTKIT_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace tautkit {

/// A partition: weakly decreasing sequence of positive integers.
/// Ramification profiles alpha |- d live here.
class Partition {
public:
    Partition() = default;

    /// Sorts the parts; throws if any part is < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                          // d = sum of parts
    int length() const { return static_cast<int>(parts_.size()); }  // n
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[i]; }

    /// Partition with part at position `i` removed.
    Partition without(int i) const;
    /// Partition with an extra part `p`.
    Partition with(int p) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;

    /// All partitions of d.
    static std::vector<Partition> all_of(int d);
    /// All partitions of d into exactly n parts.
    static std::vector<Partition> all_of(int d, int n);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

}  // namespace tautkit

#endif
