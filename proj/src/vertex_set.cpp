#include "knodel/vertex_set.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace knodel {

VertexSet::VertexSet(i64 universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    n_ = universe;
    bits_.assign(static_cast<size_t>((universe + 63) / 64), 0);
}

VertexSet VertexSet::from_indices(i64 universe, std::span<const i64> vs) {
    VertexSet s(universe);
    for (i64 v : vs) s.add(v);
    return s;
}

void VertexSet::check_index(i64 v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                " outside universe of size " + std::to_string(n_));
}

bool VertexSet::contains(i64 v) const {
    check_index(v);
    return (bits_[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u;
}

void VertexSet::add(i64 v) {
    check_index(v);
    u64& w = bits_[static_cast<size_t>(v >> 6)];
    u64 mask = u64{1} << (v & 63);
    if (!(w & mask)) {
        w |= mask;
        ++count_;
    }
}

void VertexSet::remove(i64 v) {
    check_index(v);
    u64& w = bits_[static_cast<size_t>(v >> 6)];
    u64 mask = u64{1} << (v & 63);
    if (w & mask) {
        w &= ~mask;
        --count_;
    }
}

void VertexSet::clear() {
    bits_.assign(bits_.size(), 0);
    count_ = 0;
}

bool VertexSet::intersects(const VertexSet& other) const {
    size_t m = std::min(bits_.size(), other.bits_.size());
    for (size_t i = 0; i < m; ++i)
        if (bits_[i] & other.bits_[i]) return true;
    return false;
}

std::vector<i64> VertexSet::to_vector() const {
    std::vector<i64> out;
    out.reserve(static_cast<size_t>(count_));
    for (size_t i = 0; i < bits_.size(); ++i) {
        u64 w = bits_[i];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<i64>(i * 64 + static_cast<size_t>(b)));
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::operator==(const VertexSet& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

}  // namespace knodel
