#pragma once

// Families of subsets of [n] in which any two distinct members share exactly
// one element, and an exhaustive search for the largest such family.

#include <cstdint>
#include <string>
#include <vector>

namespace dbe {

/// Members are bitmasks over [n]; bit i - 1 stands for element i.
struct SetFamily {
    unsigned n = 0;
    std::vector<std::uint32_t> members;

    /// Throws std::invalid_argument on n > 24, an empty or out-of-range
    /// member, or a repeated member.
    void validate() const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// Mask for a 1-based element list, e.g. {1, 3} -> 0b101.
std::uint32_t mask_of(const std::vector<unsigned>& elements);
/// Sorted 1-based elements of a mask.
std::vector<unsigned> elements_of(std::uint32_t mask);

/// Every pair of distinct members meets in exactly one element.
bool unique_intersection(const SetFamily& f);

/// Same predicate over 0/1 vectors: for x != y there is exactly one i with
/// x_i = y_i > 0.
bool unique_intersection_vectors(const std::vector<std::vector<int>>& vectors);
std::vector<std::vector<int>> as_binary_vectors(const SetFamily& f);

struct FamilySearchResult {
    std::size_t max_size = 0;
    SetFamily witness;
    std::uint64_t nodes = 0; ///< search nodes visited
};

/// Branch and bound over distinct nonempty subsets of [n], 2 <= n <= 5.
/// Candidates are tried by popcount descending, then by mask.
FamilySearchResult max_family_size(unsigned n);

/// {[n] \ {1}, {1,2}, {1,3}, ..., {1,n}} for n >= 3.
SetFamily near_pencil(unsigned n);

std::string to_string(const SetFamily& f);

} // namespace dbe
