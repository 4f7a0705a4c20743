#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "kronforge/bigint.hpp"
#include "kronforge/partition.hpp"

namespace kronforge {

/// A conjugacy class of S_n: a cycle type and the number of permutations
/// having it.
struct ConjugacyClass {
    Partition cycle_type;
    BigInt size;
};

/// z_alpha = prod_i i^{m_i} m_i!, the order of the centralizer.
BigInt centralizer_order(const Partition& cycle_type);
/// n! / z_alpha.
BigInt class_size(const Partition& cycle_type);

/// Hook length formula: n! / prod(hook lengths). Valid for any n.
BigInt degree(const Partition& shape);

/// Grow-only memo for Murnaghan-Nakayama sub-evaluations, keyed on
/// (shape, remaining cycle type). Safe for concurrent use: all writers of a
/// key compute the same exact value, and a disagreement is reported as an
/// internal error.
class CharacterMemo {
public:
    bool find(std::uint64_t key, std::int64_t& value) const;
    void insert(std::uint64_t key, std::int64_t value);
    std::size_t size() const;
    void clear();

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<std::uint64_t, std::int64_t> map;
    };
    Shard& shard_for(std::uint64_t key) const { return shards_[(key * 0x9E3779B97F4A7C15ull) >> 58]; }

    mutable std::array<Shard, kShards> shards_;
};

/// [shape](cycle_type) by the Murnaghan-Nakayama rule, peeling the largest
/// cycle first. Sub-results are shared through `memo` when given.
std::int64_t char_value(const Partition& shape, const Partition& cycle_type, CharacterMemo* memo = nullptr);

/// Unmemoized Murnaghan-Nakayama evaluation that strips cycles in exactly
/// the order listed. Any order gives the same value.
std::int64_t char_value_in_order(const Partition& shape, std::span<const int> cycles);

/// Exact character table of S_n. Rows (irreducibles) and columns (classes)
/// both follow the canonical partition order.
class CharacterTable {
public:
    CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::int64_t> values);

    int n() const noexcept { return n_; }
    std::size_t order() const noexcept { return partitions_.size(); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
    const BigInt& group_order() const noexcept { return group_order_; }
    Int128 group_order128() const noexcept { return group_order128_; }
    /// Class sizes in 128-bit form, for the inner loops.
    const std::vector<Int128>& class_weights() const noexcept { return weights_; }

    std::int64_t value(std::size_t row, std::size_t col) const { return values_[row * order() + col]; }
    std::span<const std::int64_t> row(std::size_t r) const { return {values_.data() + r * order(), order()}; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    /// Position of a partition of n in canonical order; ErrorKind::domain if
    /// p is not a partition of n.
    std::size_t index_of(const Partition& p) const;
    std::int64_t value(const Partition& shape, const Partition& cycle_type) const
    {
        return value(index_of(shape), index_of(cycle_type));
    }

    friend bool operator==(const CharacterTable& a, const CharacterTable& b)
    {
        return a.n_ == b.n_ && a.partitions_ == b.partitions_ && a.values_ == b.values_;
    }

private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<ConjugacyClass> classes_;
    std::vector<Int128> weights_;
    std::vector<std::int64_t> values_;
    std::unordered_map<Partition, std::size_t> index_;
    BigInt group_order_;
    Int128 group_order128_;
};

struct OrthogonalityReport {
    bool rows_orthonormal = false;
    bool columns_orthogonal = false;
    bool degrees_match = false;

    bool ok() const noexcept { return rows_orthonormal && columns_orthogonal && degrees_match; }
};

/// Checks both orthogonality relations and the (1^n) column against the
/// hook length formula, all in exact arithmetic.
OrthogonalityReport check_table(const CharacterTable& table, int threads = 1);

/// Reference builder: one thread, private memo.
CharacterTable build_table_serial(int n, int bound = kHardNMax);

/// Parallel builder: columns are distributed over `threads` OpenMP threads
/// (0 picks the runtime default) sharing `memo`. The result is verified with
/// check_table before it is returned.
CharacterTable build_table(int n, int threads, CharacterMemo& memo, int bound = kHardNMax);

/// A class function as exact integer values over the canonical class order.
using ClassFunction = std::vector<BigInt>;

ClassFunction table_row(const CharacterTable& table, const Partition& shape);
ClassFunction pointwise_product(const ClassFunction& x, const ClassFunction& y);

/// (1/n!) sum over classes of size * x * y.
Rational inner_product(const CharacterTable& table, const ClassFunction& x, const ClassFunction& y);

/// Same sum restricted to t-regular classes (no part divisible by t).
Rational restricted_inner_product(const CharacterTable& table, const Partition& a, const Partition& b, int t);

}  // namespace kronforge
