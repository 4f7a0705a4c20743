#include "kronforge/partition.hpp"

#include <algorithm>
#include <charconv>

#include "kronforge/error.hpp"

namespace kronforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            fail(ErrorKind::domain, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorKind::domain, "partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            fail(ErrorKind::parse, "cannot parse partition \"" + std::string(text) + "\"");
        if (v <= 0 || (!parts.empty() && v > parts.back()))
            fail(ErrorKind::parse, "\"" + std::string(text) + "\" is not a weakly decreasing sequence of positive integers");
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition from_multiset(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out(p.first(), 0);
    for (int part : p)
        for (int j = 0; j < part; ++j)
            ++out[j];
    return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

Partition add(const Partition& a, const Partition& b)
{
    const std::size_t len = std::max(a.parts().size(), b.parts().size());
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = a.part_or_zero(i) + b.part_or_zero(i);
    return Partition(std::move(out));
}

Partition pad(const Partition& p, int first, int ones)
{
    if (first < 0 || ones < 0)
        fail(ErrorKind::domain, "pad amounts must be non-negative");
    std::vector<int> out = p.parts();
    if (out.empty()) {
        if (first > 0)
            out.push_back(first);
    } else {
        out.front() += first;
    }
    out.insert(out.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(out));
}

Partition staircase(int k)
{
    if (k < 1)
        fail(ErrorKind::domain, "staircase needs k >= 1");
    std::vector<int> out;
    for (int i = k; i >= 1; --i)
        out.push_back(i);
    return Partition(std::move(out));
}

Partition rectangle(int n)
{
    if (n < 1)
        fail(ErrorKind::domain, "rectangle needs n >= 1");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), n));
}

Partition hook_partition(int n, int d)
{
    if (n < 1 || d < 0 || d >= n)
        fail(ErrorKind::domain, "hook partition needs 0 <= d < n");
    return pad(Partition({n - d}), 0, d);
}

Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::vector<int> CellGrid::multiset() const
{
    std::vector<int> all;
    for (const auto& r : hooks)
        all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
}

int CellGrid::max_hook() const { return hooks.empty() ? 0 : hooks[0][0]; }

int CellGrid::cell_count() const
{
    int c = 0;
    for (const auto& r : hooks)
        c += static_cast<int>(r.size());
    return c;
}

bool CellGrid::contains(int hook_length) const
{
    for (const auto& r : hooks)
        if (std::find(r.begin(), r.end(), hook_length) != r.end())
            return true;
    return false;
}

CellGrid hook_lengths(const Partition& p)
{
    const Partition conj = conjugate(p);
    CellGrid g{p, {}};
    g.hooks.resize(p.parts().size());
    for (int i = 0; i < p.length(); ++i) {
        g.hooks[i].resize(p[i]);
        for (int j = 0; j < p[i]; ++j)
            g.hooks[i][j] = (p[i] - j) + (conj[j] - i) - 1;
    }
    return g;
}

bool is_t_core(const Partition& p, int t)
{
    if (t < 1)
        fail(ErrorKind::domain, "t must be positive");
    return !hook_lengths(p).contains(t);
}

std::vector<RibbonRemoval> remove_ribbons(const Partition& p, int m)
{
    if (m < 1)
        fail(ErrorKind::domain, "ribbon size must be positive");
    // Beta-set: row i sits at position p_i + (len - 1 - i). Removing an
    // m-rim-hook with corner in row i slides that bead from x to x - m; the
    // beads strictly between count the extra rows the ribbon covers.
    const int len = p.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i)
        beta[i] = p[i] + (len - 1 - i);

    std::vector<RibbonRemoval> out;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - m;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++height;
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(len);
        for (int j = 0; j < len; ++j)
            parts[j] = moved[j] - (len - 1 - j);
        out.push_back({Partition(std::move(parts)), height, i});
    }
    return out;
}

CoreResult t_core(const Partition& p, int t)
{
    if (t < 1)
        fail(ErrorKind::domain, "t must be positive");
    CoreResult r{p, 0};
    while (true) {
        auto removals = remove_ribbons(r.core, t);
        if (removals.empty())
            break;
        r.core = std::move(removals.front().rest);
        ++r.weight;
    }
    return r;
}

std::vector<int> t_core_set(const Partition& p, int bound)
{
    if (bound < 1)
        fail(ErrorKind::domain, "bound must be positive");
    const CellGrid g = hook_lengths(p);
    std::vector<int> out;
    for (int t = 1; t <= bound; ++t)
        if (!g.contains(t))
            out.push_back(t);
    return out;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int bound)
{
    if (n < 0)
        fail(ErrorKind::domain, "n must be non-negative");
    if (n > bound)
        fail(ErrorKind::feasibility, "n = " + std::to_string(n) + " exceeds the feasibility bound " + std::to_string(bound));
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(n, n, prefix, out);
    return out;
}

bool is_t_singular(const Partition& cycle_type, int t)
{
    if (t < 1)
        fail(ErrorKind::domain, "t must be positive");
    return std::any_of(cycle_type.begin(), cycle_type.end(), [t](int part) { return part % t == 0; });
}

std::uint32_t boundary_code(const Partition& p)
{
    // Leading sentinel bit, then for each row from the bottom: one 0 per
    // column step followed by a 1 for the row step.
    std::uint32_t code = 1;
    int prev = 0;
    for (int i = p.length() - 1; i >= 0; --i) {
        code <<= (p[i] - prev);
        code = (code << 1) | 1u;
        prev = p[i];
    }
    return code;
}

}  // namespace kronforge
