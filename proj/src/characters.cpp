#include "kronforge/characters.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

#include "kronforge/error.hpp"
#include "kronforge/parallel.hpp"

namespace kronforge {

BigInt centralizer_order(const Partition& cycle_type)
{
    std::map<int, int> mult;
    for (int part : cycle_type)
        ++mult[part];
    BigInt z = 1;
    for (const auto& [part, m] : mult) {
        z *= boost::multiprecision::pow(BigInt(part), static_cast<unsigned>(m));
        z *= factorial(m);
    }
    return z;
}

BigInt class_size(const Partition& cycle_type)
{
    return exact_div(factorial(cycle_type.size()), centralizer_order(cycle_type), "class_size");
}

BigInt degree(const Partition& shape)
{
    BigInt hooks = 1;
    for (int h : hook_lengths(shape).multiset())
        hooks *= h;
    return exact_div(factorial(shape.size()), hooks, "degree");
}

bool CharacterMemo::find(std::uint64_t key, std::int64_t& value) const
{
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end())
        return false;
    value = it->second;
    return true;
}

void CharacterMemo::insert(std::uint64_t key, std::int64_t value)
{
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mutex);
    auto [it, inserted] = s.map.try_emplace(key, value);
    if (!inserted && it->second != value)
        fail(ErrorKind::internal, "character memo received two different values for one key");
}

std::size_t CharacterMemo::size() const
{
    std::size_t total = 0;
    for (auto& s : shards_) {
        std::lock_guard lock(s.mutex);
        total += s.map.size();
    }
    return total;
}

void CharacterMemo::clear()
{
    for (auto& s : shards_) {
        std::lock_guard lock(s.mutex);
        s.map.clear();
    }
}

namespace {

constexpr int kMemoMaxN = 30;

struct LocalMemo {
    std::unordered_map<std::uint64_t, std::int64_t> map;
    bool find(std::uint64_t key, std::int64_t& value) const
    {
        auto it = map.find(key);
        if (it == map.end())
            return false;
        value = it->second;
        return true;
    }
    void insert(std::uint64_t key, std::int64_t value) { map.emplace(key, value); }
};

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorKind::internal, "character value overflows 64 bits");
    return r;
}

/// Cycle parts in descending order plus the boundary code of each suffix.
struct CycleSuffixes {
    std::vector<int> parts;
    std::vector<std::uint32_t> codes;

    explicit CycleSuffixes(const Partition& cycle_type) : parts(cycle_type.parts())
    {
        codes.resize(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            codes[i] = boundary_code(Partition(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end())));
    }
};

template <class Memo>
std::int64_t mn_largest_first(const Partition& shape, const CycleSuffixes& cyc, std::size_t pos, Memo* memo)
{
    if (pos == cyc.parts.size())
        return 1;
    std::uint64_t key = 0;
    if (memo) {
        key = (static_cast<std::uint64_t>(boundary_code(shape)) << 32) | cyc.codes[pos];
        std::int64_t cached;
        if (memo->find(key, cached))
            return cached;
    }
    std::int64_t sum = 0;
    for (const auto& r : remove_ribbons(shape, cyc.parts[pos])) {
        const std::int64_t sub = mn_largest_first(r.rest, cyc, pos + 1, memo);
        sum = checked_add(sum, (r.height % 2) ? -sub : sub);
    }
    if (memo)
        memo->insert(key, sum);
    return sum;
}

void require_same_size(const Partition& shape, const Partition& cycle_type)
{
    if (shape.size() != cycle_type.size())
        fail(ErrorKind::domain, "character [" + shape.str() + "] evaluated on a class of a different size (" + cycle_type.str() + ")");
}

}  // namespace

std::int64_t char_value(const Partition& shape, const Partition& cycle_type, CharacterMemo* memo)
{
    require_same_size(shape, cycle_type);
    const CycleSuffixes cyc(cycle_type);
    if (shape.size() > kMemoMaxN)
        return mn_largest_first<LocalMemo>(shape, cyc, 0, nullptr);
    if (memo)
        return mn_largest_first(shape, cyc, 0, memo);
    LocalMemo local;
    return mn_largest_first(shape, cyc, 0, &local);
}

std::int64_t char_value_in_order(const Partition& shape, std::span<const int> cycles)
{
    int total = 0;
    for (int c : cycles)
        total += c;
    if (total != shape.size())
        fail(ErrorKind::domain, "cycle lengths do not sum to the size of the shape");
    if (cycles.empty())
        return 1;
    std::int64_t sum = 0;
    for (const auto& r : remove_ribbons(shape, cycles.front())) {
        const std::int64_t sub = char_value_in_order(r.rest, cycles.subspan(1));
        sum = checked_add(sum, (r.height % 2) ? -sub : sub);
    }
    return sum;
}

CharacterTable::CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::int64_t> values)
    : n_(n), partitions_(std::move(partitions)), values_(std::move(values)), group_order_(factorial(n)), group_order128_(to_int128(group_order_))
{
    if (values_.size() != partitions_.size() * partitions_.size())
        fail(ErrorKind::internal, "character table has the wrong number of entries");
    classes_.reserve(partitions_.size());
    weights_.reserve(partitions_.size());
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        if (partitions_[i].size() != n)
            fail(ErrorKind::internal, "character table index is not a partition of n");
        index_.emplace(partitions_[i], i);
        classes_.push_back({partitions_[i], class_size(partitions_[i])});
        weights_.push_back(to_int128(classes_.back().size));
    }
}

std::size_t CharacterTable::index_of(const Partition& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        fail(ErrorKind::domain, "(" + p.str() + ") is not a partition of " + std::to_string(n_));
    return it->second;
}

OrthogonalityReport check_table(const CharacterTable& table, int threads)
{
    const auto p = static_cast<std::ptrdiff_t>(table.order());
    const auto& w = table.class_weights();
    const Int128 nfact = to_int128(table.group_order());
    int rows_ok = 1;
    int cols_ok = 1;

#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads)) reduction(&& : rows_ok)
    for (std::ptrdiff_t i = 0; i < p; ++i) {
        for (std::ptrdiff_t j = i; j < p; ++j) {
            ExactSum s;
            for (std::ptrdiff_t c = 0; c < p; ++c)
                s.add_product(w[c], table.value(i, c), table.value(j, c));
            if (!s.equals(i == j ? nfact : 0))
                rows_ok = 0;
        }
    }

#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads)) reduction(&& : cols_ok)
    for (std::ptrdiff_t a = 0; a < p; ++a) {
        const Int128 z = to_int128(centralizer_order(table.classes()[a].cycle_type));
        for (std::ptrdiff_t b = a; b < p; ++b) {
            ExactSum s;
            for (std::ptrdiff_t r = 0; r < p; ++r)
                s.add_product(table.value(r, a), table.value(r, b));
            if (!s.equals(a == b ? z : 0))
                cols_ok = 0;
        }
    }

    OrthogonalityReport rep;
    rep.rows_orthonormal = rows_ok;
    rep.columns_orthogonal = cols_ok;
    rep.degrees_match = true;
    const std::size_t identity = table.index_of(column(table.n()));
    for (std::size_t r = 0; r < table.order(); ++r)
        if (BigInt(table.value(r, identity)) != degree(table.partitions()[r]))
            rep.degrees_match = false;
    return rep;
}

namespace {

void require_table_n(int n, int bound)
{
    if (n < 1)
        fail(ErrorKind::domain, "character tables need n >= 1");
    if (n > bound || n > kHardNMax)
        fail(ErrorKind::feasibility, "n = " + std::to_string(n) + " exceeds the feasibility bound " + std::to_string(std::min(bound, kHardNMax)));
}

}  // namespace

CharacterTable build_table_serial(int n, int bound)
{
    require_table_n(n, bound);
    std::vector<Partition> parts = partitions_of(n, bound);
    const std::size_t p = parts.size();
    std::vector<std::int64_t> values(p * p);
    LocalMemo memo;
    for (std::size_t c = 0; c < p; ++c) {
        const CycleSuffixes cyc(parts[c]);
        for (std::size_t r = 0; r < p; ++r)
            values[r * p + c] = mn_largest_first(parts[r], cyc, 0, &memo);
    }
    return CharacterTable(n, std::move(parts), std::move(values));
}

CharacterTable build_table(int n, int threads, CharacterMemo& memo, int bound)
{
    require_table_n(n, bound);
    std::vector<Partition> parts = partitions_of(n, bound);
    const auto p = static_cast<std::ptrdiff_t>(parts.size());
    std::vector<std::int64_t> values(parts.size() * parts.size());

    ParallelErrors errors;
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
    for (std::ptrdiff_t c = 0; c < p; ++c) {
        errors.run([&] {
            const CycleSuffixes cyc(parts[c]);
            for (std::ptrdiff_t r = 0; r < p; ++r)
                values[r * p + c] = mn_largest_first(parts[r], cyc, 0, &memo);
        });
    }
    errors.rethrow();

    CharacterTable table(n, std::move(parts), std::move(values));
    if (!check_table(table, threads).ok())
        fail(ErrorKind::internal, "character table for n = " + std::to_string(n) + " fails orthogonality");
    return table;
}

ClassFunction table_row(const CharacterTable& table, const Partition& shape)
{
    const auto r = table.row(table.index_of(shape));
    return ClassFunction(r.begin(), r.end());
}

ClassFunction pointwise_product(const ClassFunction& x, const ClassFunction& y)
{
    if (x.size() != y.size())
        fail(ErrorKind::domain, "class functions of different groups");
    ClassFunction out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] * y[i];
    return out;
}

Rational inner_product(const CharacterTable& table, const ClassFunction& x, const ClassFunction& y)
{
    if (x.size() != table.order() || y.size() != table.order())
        fail(ErrorKind::domain, "class function does not match the table");
    BigInt sum = 0;
    for (std::size_t c = 0; c < table.order(); ++c)
        sum += table.classes()[c].size * x[c] * y[c];
    return Rational(sum, table.group_order());
}

Rational restricted_inner_product(const CharacterTable& table, const Partition& a, const Partition& b, int t)
{
    if (t < 2)
        fail(ErrorKind::domain, "restricted inner product needs t >= 2");
    const auto ra = table.row(table.index_of(a));
    const auto rb = table.row(table.index_of(b));
    ExactSum s;
    for (std::size_t c = 0; c < table.order(); ++c)
        if (!is_t_singular(table.classes()[c].cycle_type, t))
            s.add_product(table.class_weights()[c], ra[c], rb[c]);
    return Rational(s.value(), table.group_order());
}

}  // namespace kronforge
