#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace rmt {

/// Integer partition (weakly decreasing positive parts). Trailing zeros are
/// dropped on construction, so (4,2) and (4,2,0,0) are the same value.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// (width^height): `height` rows of `width` boxes.
    static Partition rectangle(int width, int height);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based); zero past the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    /// True when `other` fits inside this diagram (other ⊆ this).
    bool contains(const Partition& other) const;
    /// λ ⊆ (width^height).
    bool fits_in_box(int width, int height) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    /// "(4,2)"; the empty partition prints as "()".
    std::string str() const;
    /// "[4,2]".
    std::string json() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "4,2", "(4,2)", "[4,2]" or "" (empty partition).
Partition parse_partition(const std::string& text);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// Box complement used by the dual Cauchy identity:
/// λ ⊆ (N^p)  ↦  (p - λ'_N, ..., p - λ'_1) ⊆ (p^N). Throws DomainError when
/// λ does not fit in the box.
Partition tilde(const Partition& lambda, int N, int p);

/// Dominance order λ ⊵ μ (partial sums of λ dominate those of μ); false when
/// the weights differ.
bool dominates(const Partition& lambda, const Partition& mu);

/// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

struct BoxFilter {
    enum class Kind { None, EvenWeight, FixedWeight };
    Kind kind = Kind::None;
    int weight = 0;

    static BoxFilter none() { return {}; }
    static BoxFilter even() { return {Kind::EvenWeight, 0}; }
    static BoxFilter fixed(int w) { return {Kind::FixedWeight, w}; }
    bool accepts(int w) const;
};

/// Enumerates every λ ⊆ (maxPart^maxLength) passing a weight filter, exactly
/// once, in decreasing lexicographic order of the part vectors (the full box
/// first, the empty partition last).
class BoxPartitionIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    BoxPartitionIterator() = default;  // end sentinel
    BoxPartitionIterator(int maxPart, int maxLength, BoxFilter filter);

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    BoxPartitionIterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const BoxPartitionIterator& a, const BoxPartitionIterator& b) {
        return a.done_ == b.done_ && (a.done_ || a.slots_ == b.slots_);
    }

private:
    bool advance_raw();
    void settle();

    std::vector<int> slots_;
    BoxFilter filter_;
    std::optional<Partition> current_;
    bool done_ = true;
};

/// Range wrapper over BoxPartitionIterator.
class BoxPartitions {
public:
    BoxPartitions(int maxPart, int maxLength, BoxFilter filter = {})
        : maxPart_(maxPart), maxLength_(maxLength), filter_(filter) {}

    BoxPartitionIterator begin() const { return {maxPart_, maxLength_, filter_}; }
    BoxPartitionIterator end() const { return {}; }
    std::vector<Partition> collect() const;

private:
    int maxPart_;
    int maxLength_;
    BoxFilter filter_;
};

inline BoxPartitions partitions_in_box(int maxPart, int maxLength, BoxFilter filter = {}) {
    return {maxPart, maxLength, filter};
}

}  // namespace rmt
