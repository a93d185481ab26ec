#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace knodel {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Bitmask over the vertex space {0..n-1} with cached cardinality.
// Used for dominating sets, neighborhoods and certificates.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(i64 universe);
    static VertexSet from_indices(i64 universe, std::span<const i64> vs);

    i64 universe() const { return n_; }
    i64 size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(i64 v) const;
    void add(i64 v);
    void remove(i64 v);
    void clear();

    bool intersects(const VertexSet& other) const;
    std::vector<i64> to_vector() const;  // ascending

    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    std::span<const u64> words() const { return bits_; }

private:
    i64 n_ = 0;
    i64 count_ = 0;
    std::vector<u64> bits_;

    void check_index(i64 v) const;
};

}  // namespace knodel
