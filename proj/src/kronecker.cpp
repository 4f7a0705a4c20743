#include "kronforge/kronecker.hpp"

#include <algorithm>
#include <numeric>

#include "kronforge/error.hpp"
#include "kronforge/parallel.hpp"

namespace kronforge {

namespace {

void require_equal_sizes(const Partition& a, const Partition& b, const Partition& c)
{
    if (a.size() != b.size() || a.size() != c.size())
        fail(ErrorKind::domain, "Kronecker coefficient needs three partitions of the same n (got " + std::to_string(a.size()) + ", " +
                                    std::to_string(b.size()) + ", " + std::to_string(c.size()) + ")");
}

void require_block_args(Engine& engine, int n, int t)
{
    if (n < 1)
        fail(ErrorKind::domain, "blocks need n >= 1");
    if (t < 2)
        fail(ErrorKind::domain, "blocks need t >= 2");
    engine.require_feasible(n);
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        // Smaller index wins so representatives are canonical.
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

BlockPartition group_by_label(int n, int t, const std::vector<Partition>& parts, const std::vector<std::size_t>& label)
{
    BlockPartition out{n, t, {}};
    std::map<std::size_t, std::size_t> slot;  // label -> block index, in order of first appearance
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto [it, fresh] = slot.try_emplace(label[i], out.blocks.size());
        if (fresh)
            out.blocks.push_back({t_core(parts[i], t).core, {}});
        out.blocks[it->second].members.push_back(parts[i]);
    }
    return out;
}

}  // namespace

std::int64_t kronecker_coefficient(const CharacterTable& table, std::size_t a, std::size_t b, std::size_t c)
{
    const auto ra = table.row(a);
    const auto rb = table.row(b);
    const auto rc = table.row(c);
    const auto& w = table.class_weights();
    ExactSum s;
    for (std::size_t k = 0; k < table.order(); ++k)
        s.add_product(w[k], ra[k], rb[k], rc[k]);
    if (s.is_narrow()) {
        const Int128 nf = table.group_order128();
        const Int128 v = s.narrow_value();
        if (v % nf != 0)
            fail(ErrorKind::internal, "inexact division in kronecker_coefficient");
        const Int128 g = v / nf;
        if (g < 0 || g > INT64_MAX)
            fail(ErrorKind::internal, "Kronecker coefficient out of range");
        return static_cast<std::int64_t>(g);
    }
    const BigInt g = exact_div(s.value(), table.group_order(), "kronecker_coefficient");
    if (g < 0 || g > BigInt(INT64_MAX))
        fail(ErrorKind::internal, "Kronecker coefficient out of range: " + g.str());
    return static_cast<std::int64_t>(g);
}

std::int64_t kronecker_coefficient(Engine& engine, const KroneckerQuery& q)
{
    return kronecker_coefficient(engine, q.alpha, q.beta, q.nu);
}

std::int64_t kronecker_coefficient(Engine& engine, const Partition& alpha, const Partition& beta, const Partition& nu)
{
    require_equal_sizes(alpha, beta, nu);
    if (alpha.size() == 0)
        return 1;
    const auto table = engine.table(alpha.size());
    return kronecker_coefficient(*table, table->index_of(alpha), table->index_of(beta), table->index_of(nu));
}

std::vector<std::int64_t> product_coefficients_serial(const CharacterTable& table, std::size_t a, std::size_t b)
{
    std::vector<std::int64_t> out(table.order());
    for (std::size_t c = 0; c < table.order(); ++c)
        out[c] = kronecker_coefficient(table, a, b, c);
    return out;
}

std::vector<std::int64_t> product_coefficients(const CharacterTable& table, std::size_t a, std::size_t b, int threads)
{
    const auto p = static_cast<std::ptrdiff_t>(table.order());
    std::vector<std::int64_t> out(table.order());
    ParallelErrors errors;
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
    for (std::ptrdiff_t c = 0; c < p; ++c)
        errors.run([&] { out[c] = kronecker_coefficient(table, a, b, static_cast<std::size_t>(c)); });
    errors.rethrow();
    return out;
}

SquareDecomposition kron_square(Engine& engine, const Partition& alpha)
{
    SquareDecomposition d{alpha, {}};
    if (alpha.size() == 0) {
        d.terms.emplace(Partition(), 1);
        return d;
    }
    const auto table = engine.table(alpha.size());
    const std::size_t a = table->index_of(alpha);
    const auto coeffs = product_coefficients(*table, a, a, engine.threads());
    for (std::size_t c = 0; c < coeffs.size(); ++c)
        if (coeffs[c] != 0)
            d.terms.emplace(table->partitions()[c], coeffs[c]);
    return d;
}

std::vector<Partition> kron_set(Engine& engine, const Partition& alpha)
{
    std::vector<Partition> out;
    for (const auto& [nu, mult] : kron_square(engine, alpha).terms)
        out.push_back(nu);
    return out;
}

bool conjugation_symmetry_check(Engine& engine, const Partition& l, const Partition& m, const Partition& n)
{
    require_equal_sizes(l, m, n);
    const std::int64_t g = kronecker_coefficient(engine, l, m, n);
    bool ok = kronecker_coefficient(engine, conjugate(l), conjugate(m), n) == g;
    if (is_self_conjugate(l))
        ok = ok && kronecker_coefficient(engine, l, conjugate(m), n) == g;
    return ok;
}

BlockPartition combinatorial_blocks(Engine& engine, int n, int t)
{
    require_block_args(engine, n, t);
    const auto parts = partitions_of(n, engine.n_max());
    std::map<Partition, std::size_t> core_ids;
    std::vector<std::size_t> label(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        label[i] = core_ids.try_emplace(t_core(parts[i], t).core, core_ids.size()).first->second;
    return group_by_label(n, t, parts, label);
}

BlockPartition linked_blocks(Engine& engine, int n, int t)
{
    require_block_args(engine, n, t);
    const auto table = engine.table(n);
    const std::size_t p = table->order();

    std::vector<std::size_t> regular;
    for (std::size_t c = 0; c < p; ++c)
        if (!is_t_singular(table->classes()[c].cycle_type, t))
            regular.push_back(c);

    UnionFind uf(p);
    const auto& w = table->class_weights();
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            if (uf.find(i) == uf.find(j))
                continue;
            ExactSum s;
            for (std::size_t c : regular)
                s.add_product(w[c], table->value(i, c), table->value(j, c));
            if (!s.equals(0))
                uf.unite(i, j);
        }
    }
    std::vector<std::size_t> label(p);
    for (std::size_t i = 0; i < p; ++i)
        label[i] = uf.find(i);
    return group_by_label(n, t, table->partitions(), label);
}

bool same_blocks(const BlockPartition& a, const BlockPartition& b)
{
    if (a.n != b.n || a.blocks.size() != b.blocks.size())
        return false;
    // Both lists are ordered by first canonical member, so set-partition
    // equality reduces to element-wise member equality.
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        if (a.blocks[i].members != b.blocks[i].members)
            return false;
    return true;
}

int block_of(const BlockPartition& blocks, const Partition& p)
{
    for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
        const auto& m = blocks.blocks[i].members;
        if (std::find(m.begin(), m.end(), p) != m.end())
            return static_cast<int>(i);
    }
    return -1;
}

}  // namespace kronforge
