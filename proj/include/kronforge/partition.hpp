#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kronforge {

/// Default bound on n for anything that enumerates partitions of n.
inline constexpr int kDefaultNMax = 15;
/// Nothing in this library enumerates beyond this n.
inline constexpr int kHardNMax = 21;

/// An integer partition: a weakly decreasing sequence of positive integers.
/// The empty sequence is the partition of 0. Values are immutable.
class Partition {
public:
    Partition() = default;

    /// Trailing zeros are dropped; anything else that is not weakly
    /// decreasing and non-negative is rejected with ErrorKind::domain.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses the canonical comma-joined form ("4,3,2,1"; "" is empty).
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// Part i, or 0 past the end.
    int part_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Canonical textual form.
    std::string str() const;

    bool is_hook() const noexcept { return parts_.size() <= 1 || parts_[1] == 1; }

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Canonical order: reverse lexicographic, so (n) comes first and (1^n) last.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// Partition with every part of `multiset` as given; parts need not be sorted.
Partition from_multiset(std::vector<int> parts);

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// Part-wise sum, the shorter partition padded with zeros.
Partition add(const Partition& a, const Partition& b);

/// (a_1 + first, a_2, ..., a_h, 1^ones). For the empty partition this is
/// (first, 1^ones) when first >= 1 and (1^ones) otherwise.
Partition pad(const Partition& p, int first, int ones);

/// (k, k-1, ..., 1), a partition of k(k+1)/2.
Partition staircase(int k);
/// (n^n), a partition of n^2.
Partition rectangle(int n);
/// (n - d, 1^d).
Partition hook_partition(int n, int d);
/// (n)
Partition row(int n);
/// (1^n)
Partition column(int n);

/// Young-diagram cells with their hook lengths. hooks[i][j] is the hook
/// length of cell (i, j), 0-based.
struct CellGrid {
    Partition shape;
    std::vector<std::vector<int>> hooks;

    /// All hook lengths, sorted descending.
    std::vector<int> multiset() const;
    int max_hook() const;
    int cell_count() const;
    bool contains(int hook_length) const;
};

CellGrid hook_lengths(const Partition& p);

/// True when no cell has hook length t.
bool is_t_core(const Partition& p, int t);

struct CoreResult {
    Partition core;
    int weight = 0;

    friend bool operator==(const CoreResult&, const CoreResult&) = default;
};

/// Removes t-rim-hooks until none is left. Removal always takes the
/// first ribbon in canonical order.
CoreResult t_core(const Partition& p, int t);

/// {t in [1, bound] : p is a t-core}, ascending.
std::vector<int> t_core_set(const Partition& p, int bound);

/// The result of stripping one rim hook.
struct RibbonRemoval {
    Partition rest;
    int height = 0;      // rows spanned minus one
    int corner_row = 0;  // 0-based row of the hook's corner cell

    friend bool operator==(const RibbonRemoval&, const RibbonRemoval&) = default;
};

/// Every m-rim-hook of p, ordered by corner row ascending.
std::vector<RibbonRemoval> remove_ribbons(const Partition& p, int m);

/// All partitions of n in canonical order. ErrorKind::feasibility if
/// n > bound.
std::vector<Partition> partitions_of(int n, int bound = kHardNMax);

/// Some part is divisible by t.
bool is_t_singular(const Partition& cycle_type, int t);

/// Injective 32-bit code of a partition with first() + length() <= 30,
/// built from the boundary path. Used as a memo key.
std::uint32_t boundary_code(const Partition& p);

}  // namespace kronforge

template <>
struct std::hash<kronforge::Partition> {
    std::size_t operator()(const kronforge::Partition& p) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts())
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};
