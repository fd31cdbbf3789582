#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace genocchi {

// Subset of [1, 64] packed into a word; bit v-1 holds value v.
class IndexSet {
public:
    static constexpr int capacity = 64;

    constexpr IndexSet() = default;
    constexpr IndexSet(std::initializer_list<int> values) {
        for (int v : values) insert(v);
    }

    static constexpr IndexSet from_bits(std::uint64_t bits) {
        IndexSet s;
        s.bits_ = bits;
        return s;
    }

    // {1, ..., n}
    static constexpr IndexSet range(int n) {
        return from_bits(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const {
        return v >= 1 && v <= capacity && (bits_ >> (v - 1)) & 1U;
    }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int min() const { return std::countr_zero(bits_) + 1; }
    constexpr int max() const { return capacity - std::countl_zero(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return from_bits(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

    // Ascending values.
    std::vector<int> values() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace genocchi
