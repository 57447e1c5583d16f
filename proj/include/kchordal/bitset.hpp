#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace kchordal {

/// Fixed-capacity set of vertex indices, stored as a bitset. The capacity is
/// the vertex count of the host graph; sets belonging to the same graph always
/// share a capacity, and binary operations require it. One machine word is
/// kept inline, so sets over graphs with n <= 64 never touch the heap.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(check_capacity(capacity)), blocks_(word_count(capacity), 0) {}

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (int w = 0; w < static_cast<int>(s.blocks_.size()); ++w)
            s.blocks_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int capacity, std::initializer_list<int> members) {
        VertexSet s(capacity);
        for (int v : members) s.insert(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool contains(int v) const {
        return v >= 0 && v < capacity_ && (blocks_[v >> 6] >> (v & 63) & 1);
    }

    void insert(int v) {
        check_index(v);
        blocks_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_index(v);
        blocks_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : blocks_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : blocks_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return scan_from(0); }

    /// Smallest member strictly greater than v, or -1 when none.
    int next_after(int v) const { return scan_from(v + 1); }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~o.blocks_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & o.blocks_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(capacity_);
        for (std::size_t i = 0; i < blocks_.size(); ++i) s.blocks_[i] = ~blocks_[i];
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        if (a.capacity_ != b.capacity_) return false;
        for (std::size_t i = 0; i < a.blocks_.size(); ++i)
            if (a.blocks_[i] != b.blocks_[i]) return false;
        return true;
    }

    /// Total order (capacity, then words); used to deduplicate families of sets.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        if (auto c = a.capacity_ <=> b.capacity_; c != 0) return c;
        for (std::size_t i = 0; i < a.blocks_.size(); ++i)
            if (auto c = a.blocks_[i] <=> b.blocks_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
        return out;
    }

    class const_iterator {
    public:
        using value_type = int;
        const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next_after(v_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

private:
    using Blocks = boost::container::small_vector<std::uint64_t, 1>;

    static int check_capacity(int capacity) {
        if (capacity < 0) throw std::invalid_argument("VertexSet: negative capacity");
        return capacity;
    }

    static std::size_t word_count(int capacity) {
        return (static_cast<std::size_t>(capacity) + 63) / 64;
    }

    void check_index(int v) const {
        if (v < 0 || v >= capacity_)
            throw std::invalid_argument("VertexSet: vertex index out of range");
    }

    void check_same(const VertexSet& o) const {
        if (capacity_ != o.capacity_)
            throw std::invalid_argument("VertexSet: capacity mismatch");
    }

    // Clears padding bits above capacity_.
    void trim() {
        int rem = capacity_ & 63;
        if (rem != 0 && !blocks_.empty())
            blocks_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int scan_from(int v) const {
        if (v < 0) v = 0;
        if (v >= capacity_) return -1;
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        std::uint64_t cur = blocks_[w] >> (v & 63);
        if (cur) return v + std::countr_zero(cur);
        for (++w; w < blocks_.size(); ++w)
            if (blocks_[w]) return static_cast<int>(w << 6) + std::countr_zero(blocks_[w]);
        return -1;
    }

    int capacity_ = 0;
    Blocks blocks_;
};

}  // namespace kchordal
