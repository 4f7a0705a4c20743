#include "kronforge/saxl.hpp"

#include <algorithm>
#include <set>

#include "kronforge/error.hpp"
#include "kronforge/parallel.hpp"

namespace kronforge {

int floor_log2(int k)
{
    if (k < 1)
        fail(ErrorKind::domain, "log2 needs k >= 1");
    int m = 0;
    while ((k >> (m + 1)) != 0)
        ++m;
    return m;
}

// ---------------------------------------------------------------------------
// Good pairs

namespace {

void require_km(int k, int m)
{
    if (m < 1 || m > k)
        fail(ErrorKind::domain, "good pairs need 1 <= m <= k (got k = " + std::to_string(k) + ", m = " + std::to_string(m) + ")");
}

/// reach[j][s]: s is a subset sum of {m+1+j, ..., k}.
std::vector<std::vector<char>> suffix_reach(int k, int m)
{
    const int len = k - m;
    const int total = triangular(k) - triangular(m);
    std::vector<std::vector<char>> reach(len + 1, std::vector<char>(total + 1, 0));
    reach[len][0] = 1;
    for (int j = len - 1; j >= 0; --j) {
        const int e = m + 1 + j;
        for (int s = 0; s <= total; ++s)
            reach[j][s] = reach[j + 1][s] || (s >= e && reach[j + 1][s - e]);
    }
    return reach;
}

std::vector<int> smallest_witness(int m, const std::vector<std::vector<char>>& reach, int a)
{
    // Greedy over ascending elements: take the smallest element that still
    // leaves a reachable remainder among the larger ones.
    std::vector<int> out;
    const int len = static_cast<int>(reach.size()) - 1;
    int rem = a;
    int j = 0;
    while (rem > 0) {
        while (j < len && !(rem >= m + 1 + j && reach[j + 1][rem - (m + 1 + j)]))
            ++j;
        if (j == len)
            fail(ErrorKind::internal, "subset-sum witness reconstruction failed");
        out.push_back(m + 1 + j);
        rem -= m + 1 + j;
        ++j;
    }
    return out;
}

}  // namespace

std::vector<GoodPair> good_pairs(int k, int m)
{
    require_km(k, m);
    const int total = triangular(k) - triangular(m);
    const auto reach = suffix_reach(k, m);
    std::vector<GoodPair> out;
    for (int a = total; a >= 0; --a)
        if (reach[0][a])
            out.push_back({a, total - a, smallest_witness(m, reach, a), k, m});
    return out;
}

std::optional<GoodPair> find_good_pair(int k, int m, int a, int b)
{
    require_km(k, m);
    const int total = triangular(k) - triangular(m);
    if (a < 0 || b < 0 || a + b != total)
        return std::nullopt;
    const auto reach = suffix_reach(k, m);
    if (!reach[0][a])
        return std::nullopt;
    return GoodPair{a, b, smallest_witness(m, reach, a), k, m};
}

namespace {

void require_good(const GoodPair& pair, int k, int m)
{
    require_km(k, m);
    bool ok = pair.a >= 0 && pair.b >= 0 && pair.a + pair.b == triangular(k) - triangular(m);
    int sum = 0;
    int prev = m;
    for (int i : pair.witness) {
        ok = ok && i > prev && i <= k;
        prev = i;
        sum += i;
    }
    if (!ok || sum != pair.a)
        fail(ErrorKind::domain,
             "(" + std::to_string(pair.a) + "," + std::to_string(pair.b) + ") is not a (" + std::to_string(k) + "," + std::to_string(m) +
                 ")-good pair with the given witness");
}

}  // namespace

// ---------------------------------------------------------------------------
// Certificates

const char* step_name(StepKind kind)
{
    switch (kind) {
    case StepKind::base_kron: return "base-kron";
    case StepKind::lift_a: return "lift-a";
    case StepKind::combine_b: return "combine-b";
    case StepKind::telescopic: return "telescopic";
    case StepKind::doubling: return "corollary16";
    }
    return "?";
}

bool Certificate::chain_composes() const
{
    if (derivation.empty() || derivation.front().kind != StepKind::base_kron)
        return false;
    for (std::size_t i = 1; i < derivation.size(); ++i)
        if (!derivation[i].input || *derivation[i].input != derivation[i - 1].output)
            return false;
    return derivation.back().output == alpha;
}

namespace {

std::string rho_name(int m) { return "rho_" + std::to_string(m); }
std::string rect_name(int j) { return "rect_" + std::to_string(j); }

/// Records how `l` is known to lie in Kron(rho_m); ErrorKind::domain when
/// it cannot be established.
std::string establish_staircase_member(Engine& engine, const Partition& l, int m, bool certified, std::vector<std::string>& assumptions)
{
    if (l.size() != triangular(m))
        fail(ErrorKind::domain, "(" + l.str() + ") is not a partition of " + std::to_string(triangular(m)));
    if (engine.feasible(l.size())) {
        const Partition rho = staircase(m);
        if (kronecker_coefficient(engine, rho, rho, l) == 0)
            fail(ErrorKind::domain, "(" + l.str() + ") is not in Kron(" + rho_name(m) + ")");
        return "brute-force";
    }
    if (!certified)
        fail(ErrorKind::domain, "membership of (" + l.str() + ") in Kron(" + rho_name(m) +
                                    ") cannot be computed within the feasibility bound and was not certified by the caller");
    assumptions.push_back(l.str() + " in Kron(" + rho_name(m) + ") [caller-certified]");
    return "caller-certified";
}

void establish_rectangle_member(Engine& engine, const Partition& nu, int j, bool certified, std::vector<std::string>& assumptions)
{
    if (nu.size() != j * j)
        fail(ErrorKind::domain, "(" + nu.str() + ") is not a partition of " + std::to_string(j * j));
    if (engine.feasible(nu.size())) {
        const Partition rect = rectangle(j);
        if (kronecker_coefficient(engine, rect, rect, nu) == 0)
            fail(ErrorKind::domain, "(" + nu.str() + ") is not in Kron(" + rect_name(j) + ")");
        return;
    }
    if (nu == rectangle(j)) {
        assumptions.push_back(rect_name(j) + " in Kron(" + rect_name(j) + ") [assumed]");
        return;
    }
    if (!certified)
        fail(ErrorKind::domain, "membership of (" + nu.str() + ") in Kron(" + rect_name(j) +
                                    ") cannot be computed within the feasibility bound and was not certified by the caller");
    assumptions.push_back(nu.str() + " in Kron(" + rect_name(j) + ") [caller-certified]");
}

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& from)
{
    for (const auto& s : from)
        if (std::find(into.begin(), into.end(), s) == into.end())
            into.push_back(s);
}

/// One pad step per index m+1..k: (i, 0) when i is in the witness, else (0, i).
Partition append_lift_steps(Certificate& c, Partition current, int m, int k, const GoodPair& pair)
{
    const Partition start = current;
    for (int i = m + 1; i <= k; ++i) {
        const bool first = std::find(pair.witness.begin(), pair.witness.end(), i) != pair.witness.end();
        DerivationStep step;
        step.kind = StepKind::lift_a;
        step.input = current;
        step.a = first ? i : 0;
        step.b = first ? 0 : i;
        step.level = i;
        current = pad(current, step.a, step.b);
        step.output = current;
        c.derivation.push_back(std::move(step));
    }
    if (current != pad(start, pair.a, pair.b))
        fail(ErrorKind::internal, "stepwise padding disagrees with the direct pad");
    return current;
}

DerivationStep base_step(const Partition& l, int m, std::string basis)
{
    DerivationStep step;
    step.kind = StepKind::base_kron;
    step.output = l;
    step.level = m;
    step.basis = std::move(basis);
    return step;
}

DerivationStep combine_step(const Partition& input, const Partition& mu, const Partition& nu, int m)
{
    DerivationStep step;
    step.kind = StepKind::combine_b;
    step.input = input;
    step.components = {mu, nu};
    step.output = add(add(input, mu), nu);
    step.level = m;
    return step;
}

/// g(rho_k, rho_k, .) for the certificates of one k, computed once.
class StaircaseConfirmer {
public:
    StaircaseConfirmer(Engine& engine, int k) : engine_(engine), k_(k)
    {
        enabled_ = engine.config().confirm && engine.feasible(triangular(k));
    }

    void confirm(Certificate& c)
    {
        if (!enabled_)
            return;
        if (!row_) {
            table_ = engine_.table(triangular(k_));
            const std::size_t r = table_->index_of(staircase(k_));
            row_ = product_coefficients(*table_, r, r, engine_.threads());
        }
        const std::int64_t g = (*row_)[table_->index_of(c.alpha)];
        if (g == 0)
            fail(ErrorKind::internal, "certified constituent (" + c.alpha.str() + ") of the square of " + rho_name(k_) +
                                          " has coefficient 0 by direct computation");
        c.confirmed = g;
    }

private:
    Engine& engine_;
    int k_;
    bool enabled_ = false;
    std::shared_ptr<const CharacterTable> table_;
    std::optional<std::vector<std::int64_t>> row_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Kron sources

std::optional<KronLevel> EngineKronSource::rectangle_level(int j)
{
    if (j < 1)
        return std::nullopt;
    if (auto it = rectangle_.find(j); it != rectangle_.end())
        return it->second;
    KronLevel level;
    if (engine_.feasible(j * j)) {
        level.members = kron_set(engine_, rectangle(j));
        level.exact = true;
    } else {
        level.members = {rectangle(j)};
        level.assumptions = {rect_name(j) + " in Kron(" + rect_name(j) + ") [assumed]"};
    }
    return rectangle_.emplace(j, std::move(level)).first->second;
}

std::optional<KronLevel> EngineKronSource::staircase_level(int i)
{
    if (i < 0 || i > 8)
        return std::nullopt;
    if (auto it = staircase_.find(i); it != staircase_.end())
        return it->second;
    const int height = 1 << i;
    KronLevel level;
    if (engine_.feasible(triangular(height))) {
        level.members = kron_set(engine_, staircase(height));
        level.exact = true;
    } else {
        auto lower = staircase_level(i - 1);
        auto rects = rectangle_level(height / 2);
        if (!lower || !rects)
            return std::nullopt;
        const std::size_t work = lower->members.size() * lower->members.size() * rects->members.size();
        if (work > 4'000'000)
            return std::nullopt;
        std::set<Partition, CanonicalOrder> sums;
        for (const auto& l : lower->members)
            for (const auto& mu : lower->members)
                for (const auto& nu : rects->members)
                    sums.insert(add(add(l, mu), nu));
        level.members.assign(sums.begin(), sums.end());
        level.assumptions = lower->assumptions;
        append_unique(level.assumptions, rects->assumptions);
    }
    return staircase_.emplace(i, std::move(level)).first->second;
}

// ---------------------------------------------------------------------------
// Constructions

Certificate lift_by_good_pair(Engine& engine, const Partition& l, int m, int k, const GoodPair& pair, bool input_certified)
{
    require_good(pair, k, m);
    Certificate c;
    c.k = k;
    const std::string basis = establish_staircase_member(engine, l, m, input_certified, c.assumptions);
    c.derivation.push_back(base_step(l, m, basis));
    c.alpha = append_lift_steps(c, l, m, k, pair);
    StaircaseConfirmer(engine, k).confirm(c);
    return c;
}

Certificate combine_staircases(Engine& engine, const Partition& l, const Partition& mu, const Partition& nu, int m, int k,
                               bool inputs_certified)
{
    if (m < 1 || (k != 2 * m && k != 2 * m + 1))
        fail(ErrorKind::domain, "combining needs k = 2m or 2m + 1 (got k = " + std::to_string(k) + ", m = " + std::to_string(m) + ")");
    Certificate c;
    c.k = k;
    const std::string basis = establish_staircase_member(engine, l, m, inputs_certified, c.assumptions);
    establish_staircase_member(engine, mu, m, inputs_certified, c.assumptions);
    establish_rectangle_member(engine, nu, k - m, inputs_certified, c.assumptions);
    c.derivation.push_back(base_step(l, m, basis));
    c.derivation.push_back(combine_step(l, mu, nu, m));
    c.alpha = c.derivation.back().output;
    if (c.alpha.size() != triangular(k))
        fail(ErrorKind::internal, "combined partition has the wrong size");
    StaircaseConfirmer(engine, k).confirm(c);
    return c;
}

namespace {

struct Partial {
    std::vector<DerivationStep> steps;
    std::vector<std::string> assumptions;
};

}  // namespace

TelescopicSet telescopic_partitions(Engine& engine, int k, KronSource& source)
{
    if (k < 1)
        fail(ErrorKind::domain, "telescopic partitions need k >= 1");
    TelescopicSet out;
    out.k = k;
    const int m = floor_log2(k);
    if (m == 0)
        return out;

    std::vector<KronLevel> stairs;
    std::vector<KronLevel> rects;
    for (int i = 0; i < m; ++i) {
        auto st = source.staircase_level(i);
        auto rc = source.rectangle_level(1 << i);
        if (!st || !rc)
            fail(ErrorKind::domain, "Kron source has no level for " + (st ? rect_name(1 << i) : rho_name(1 << i)));
        const Partition rect = rectangle(1 << i);
        if (std::find(rc->members.begin(), rc->members.end(), rect) == rc->members.end())
            fail(ErrorKind::domain, "Kron source does not list " + rect_name(1 << i) + " in its own square");
        stairs.push_back(std::move(*st));
        rects.push_back(std::move(*rc));
    }

    std::map<Partition, Certificate, CanonicalOrder> found;
    for (int s = 0; s < m; ++s) {
        // Chains lambda(t) for t = s, s+1, ..., keyed by partition, first derivation wins.
        std::map<Partition, Partial, CanonicalOrder> chain;
        const Partition rect_s = rectangle(1 << s);
        for (const auto& beta : stairs[s].members) {
            for (const auto& alpha : stairs[s].members) {
                DerivationStep step = combine_step(beta, alpha, rect_s, 1 << s);
                if (chain.count(step.output))
                    continue;
                Partial p;
                p.steps.push_back(base_step(beta, 1 << s, stairs[s].exact ? "brute-force" : "certified-subset"));
                p.assumptions = stairs[s].assumptions;
                append_unique(p.assumptions, rects[s].assumptions);
                const Partition key = step.output;
                p.steps.push_back(std::move(step));
                chain.emplace(key, std::move(p));
            }
        }
        out.exact = out.exact && stairs[s].exact;

        for (int t = s; t < m; ++t) {
            if (t > s) {
                std::map<Partition, Partial, CanonicalOrder> next;
                const Partition rect_t = rectangle(1 << t);
                for (const auto& [lambda, partial] : chain) {
                    for (const auto& alpha : stairs[t].members) {
                        DerivationStep step = combine_step(lambda, alpha, rect_t, 1 << t);
                        if (next.count(step.output))
                            continue;
                        Partial p = partial;
                        append_unique(p.assumptions, stairs[t].assumptions);
                        append_unique(p.assumptions, rects[t].assumptions);
                        const Partition key = step.output;
                        p.steps.push_back(std::move(step));
                        next.emplace(key, std::move(p));
                    }
                }
                chain = std::move(next);
                out.exact = out.exact && stairs[t].exact;
            }
            const int base_height = 1 << (t + 1);
            for (const auto& pair : good_pairs(k, base_height)) {
                for (const auto& [lambda, partial] : chain) {
                    const Partition alpha = pad(lambda, pair.a, pair.b);
                    if (found.count(alpha))
                        continue;
                    Certificate c;
                    c.k = k;
                    c.derivation = partial.steps;
                    c.assumptions = partial.assumptions;
                    DerivationStep mark;
                    mark.kind = StepKind::telescopic;
                    mark.input = lambda;
                    mark.output = lambda;
                    mark.level = base_height;
                    mark.s = s;
                    mark.t = t;
                    c.derivation.push_back(std::move(mark));
                    c.alpha = append_lift_steps(c, lambda, base_height, k, pair);
                    found.emplace(alpha, std::move(c));
                }
            }
        }
    }

    StaircaseConfirmer confirmer(engine, k);
    for (auto& [alpha, cert] : found) {
        confirmer.confirm(cert);
        out.entries.push_back({alpha, std::move(cert)});
    }
    return out;
}

TelescopicSet telescopic_partitions(Engine& engine, int k)
{
    EngineKronSource source(engine);
    return telescopic_partitions(engine, k, source);
}

namespace {

TelescopicEntry doubling_entry(Engine& engine, int k, const GoodPair& pair, StaircaseConfirmer& confirmer)
{
    const int m = floor_log2(k);
    require_good(pair, k, 1 << m);
    Certificate c;
    c.k = k;
    c.derivation.push_back(base_step(staircase(1), 1, "brute-force"));
    Partition current = staircase(1);
    for (int i = 0; i < m; ++i) {
        const int h = 1 << i;
        const Partition rho = staircase(h);
        const Partition rect = rectangle(h);
        if (engine.feasible(rho.size())) {
            if (kronecker_coefficient(engine, rho, rho, rho) == 0)
                fail(ErrorKind::internal, rho_name(h) + " is not in its own Kronecker square");
        } else {
            c.assumptions.push_back(rho_name(h) + " in Kron(" + rho_name(h) + ") [assumed]");
        }
        if (engine.feasible(rect.size())) {
            if (kronecker_coefficient(engine, rect, rect, rect) == 0)
                fail(ErrorKind::internal, rect_name(h) + " is not in its own Kronecker square");
        } else {
            c.assumptions.push_back(rect_name(h) + " in Kron(" + rect_name(h) + ") [assumed]");
        }
        c.derivation.push_back(combine_step(current, rho, rect, h));
        current = c.derivation.back().output;
    }
    current = append_lift_steps(c, current, 1 << m, k, pair);
    DerivationStep mark;
    mark.kind = StepKind::doubling;
    mark.input = current;
    mark.output = current;
    mark.level = k;
    c.derivation.push_back(std::move(mark));
    c.alpha = current;
    confirmer.confirm(c);
    return {current, std::move(c)};
}

}  // namespace

TelescopicEntry doubling_partition(Engine& engine, int k, const GoodPair& pair)
{
    if (k < 1)
        fail(ErrorKind::domain, "k must be positive");
    StaircaseConfirmer confirmer(engine, k);
    return doubling_entry(engine, k, pair, confirmer);
}

std::vector<TelescopicEntry> doubling_partitions(Engine& engine, int k)
{
    if (k < 1)
        fail(ErrorKind::domain, "k must be positive");
    StaircaseConfirmer confirmer(engine, k);
    std::vector<TelescopicEntry> out;
    for (const auto& pair : good_pairs(k, 1 << floor_log2(k)))
        out.push_back(doubling_entry(engine, k, pair, confirmer));
    return out;
}

// ---------------------------------------------------------------------------
// Witnesses and sweeps

namespace {

/// Earliest member of alpha's t-block, other than alpha, with a non-zero
/// coefficient; -1 if none.
std::ptrdiff_t find_partner(const std::vector<Partition>& parts, const std::vector<std::size_t>& core_id, const std::vector<std::int64_t>& coeffs,
                            std::size_t alpha)
{
    for (std::size_t nu = 0; nu < parts.size(); ++nu)
        if (nu != alpha && core_id[nu] == core_id[alpha] && coeffs[nu] != 0)
            return static_cast<std::ptrdiff_t>(nu);
    return -1;
}

/// Core ids and t-core flags for every partition of the table.
struct CoreIndex {
    std::vector<std::size_t> id;
    std::vector<char> is_core;

    CoreIndex(const std::vector<Partition>& parts, int t) : id(parts.size()), is_core(parts.size())
    {
        std::map<Partition, std::size_t> ids;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const CoreResult r = t_core(parts[i], t);
            id[i] = ids.try_emplace(r.core, ids.size()).first->second;
            is_core[i] = r.weight == 0;
        }
    }
};

std::string triple_str(const Partition& xi, const Partition& beta, const Partition& alpha, int t)
{
    return "xi = (" + xi.str() + "), beta = (" + beta.str() + "), alpha = (" + alpha.str() + "), t = " + std::to_string(t);
}

}  // namespace

DichotomyWitness block_dichotomy_witness(Engine& engine, const Partition& xi, const Partition& beta, const Partition& alpha, int t)
{
    if (xi.size() != beta.size() || xi.size() != alpha.size())
        fail(ErrorKind::domain, "dichotomy needs three partitions of the same n");
    if (t < 2)
        fail(ErrorKind::domain, "dichotomy needs t >= 2");
    if (xi.size() < 1)
        fail(ErrorKind::domain, "dichotomy needs n >= 1");
    engine.require_feasible(xi.size());
    if (!is_t_core(xi, t))
        fail(ErrorKind::domain, "(" + xi.str() + ") is not a " + std::to_string(t) + "-core");
    const auto table = engine.table(xi.size());
    const auto coeffs = product_coefficients(*table, table->index_of(xi), table->index_of(beta), engine.threads());
    const std::size_t a = table->index_of(alpha);
    if (coeffs[a] == 0)
        fail(ErrorKind::domain, "g(" + xi.str() + "; " + beta.str() + "; " + alpha.str() + ") is zero");
    if (is_t_core(alpha, t))
        return {DichotomyWitness::Case::core, std::nullopt};
    const CoreIndex cores(table->partitions(), t);
    const std::ptrdiff_t nu = find_partner(table->partitions(), cores.id, coeffs, a);
    if (nu < 0)
        fail(ErrorKind::internal, "no partner in the " + std::to_string(t) + "-block for " + triple_str(xi, beta, alpha, t));
    return {DichotomyWitness::Case::partner, table->partitions()[static_cast<std::size_t>(nu)]};
}

DichotomySweep dichotomy_sweep(Engine& engine, int n)
{
    if (n < 1)
        fail(ErrorKind::domain, "sweep needs n >= 1");
    DichotomySweep out;
    out.n = n;
    const auto table = engine.table(n);
    const auto& parts = table->partitions();
    const std::size_t p = parts.size();
    for (int t = 2; t <= n; ++t) {
        const CoreIndex cores(parts, t);
        std::vector<std::size_t> xis;
        for (std::size_t i = 0; i < p; ++i)
            if (cores.is_core[i])
                xis.push_back(i);
        std::int64_t triples = 0, core_cases = 0, partner_cases = 0, failures = 0;
        ParallelErrors errors;
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(engine.threads())) \
    reduction(+ : triples, core_cases, partner_cases, failures)
        for (std::ptrdiff_t x = 0; x < static_cast<std::ptrdiff_t>(xis.size()); ++x) {
            errors.run([&] {
                for (std::size_t b = 0; b < p; ++b) {
                    const auto coeffs = product_coefficients_serial(*table, xis[x], b);
                    for (std::size_t a = 0; a < p; ++a) {
                        if (coeffs[a] == 0)
                            continue;
                        ++triples;
                        if (cores.is_core[a])
                            ++core_cases;
                        else if (find_partner(parts, cores.id, coeffs, a) >= 0)
                            ++partner_cases;
                        else
                            ++failures;
                    }
                }
            });
        }
        errors.rethrow();
        out.triples += triples;
        out.core_cases += core_cases;
        out.partner_cases += partner_cases;
        out.failures += failures;
    }
    return out;
}

Partition hook_constituent(Engine& engine, const Partition& alpha)
{
    const int n = alpha.size();
    if (n < 1 || alpha == row(n) || alpha == column(n))
        fail(ErrorKind::domain, "hook constituent needs alpha different from (n) and (1^n)");
    engine.require_feasible(n);
    for (int d = 1; d <= n - 2; ++d) {
        const Partition hook = hook_partition(n, d);
        if (kronecker_coefficient(engine, alpha, alpha, hook) != 0)
            return hook;
    }
    fail(ErrorKind::internal, "no hook constituent other than (n) and (1^n) in the square of (" + alpha.str() + ")");
}

Partition odd_example_partition(int i)
{
    if (i < 1 || i > 12)
        fail(ErrorKind::domain, "odd example index must lie in [1, 12]");
    const int half = 1 << (i - 1);
    const int ones = (1 << (2 * i - 1)) - half;
    return pad(Partition({half, half}), 0, ones);
}

SaxlReport saxl_verify(Engine& engine, int k)
{
    if (k < 1)
        fail(ErrorKind::domain, "k must be positive");
    SaxlReport r;
    r.k = k;
    r.n = triangular(k);
    engine.require_feasible(r.n);
    const auto all = partitions_of(r.n, engine.n_max());
    r.total = all.size();
    r.kron_set = kron_set(engine, staircase(k));
    const std::set<Partition, CanonicalOrder> members(r.kron_set.begin(), r.kron_set.end());
    for (const auto& p : all)
        if (!members.count(p))
            r.missing.push_back(p);
    for (const auto& e : telescopic_partitions(engine, k).entries)
        r.telescopic.push_back({e.alpha, members.count(e.alpha) > 0});
    for (const auto& e : doubling_partitions(engine, k))
        r.doubling.push_back({e.alpha, members.count(e.alpha) > 0});
    return r;
}

BlockCheckReport kron_block_check(Engine& engine, int k, int t)
{
    if (k < 1)
        fail(ErrorKind::domain, "k must be positive");
    if (t < 1 || !(t % 2 == 0 || t >= 2 * k + 1))
        fail(ErrorKind::domain, "t = " + std::to_string(t) + " is neither even nor at least 2k + 1 = " + std::to_string(2 * k + 1));
    const int n = triangular(k);
    engine.require_feasible(n);
    const Partition rho = staircase(k);
    if (!is_t_core(rho, t))
        fail(ErrorKind::internal, rho_name(k) + " is not a " + std::to_string(t) + "-core");

    BlockCheckReport r;
    r.k = k;
    r.t = t;
    const auto table = engine.table(n);
    const std::size_t idx = table->index_of(rho);
    const auto coeffs = product_coefficients(*table, idx, idx, engine.threads());
    const CoreIndex cores(table->partitions(), t);
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        if (coeffs[a] == 0)
            continue;
        const Partition& alpha = table->partitions()[a];
        if (cores.is_core[a]) {
            r.entries.push_back({alpha, {DichotomyWitness::Case::core, std::nullopt}});
            ++r.core_cases;
            continue;
        }
        const std::ptrdiff_t nu = find_partner(table->partitions(), cores.id, coeffs, a);
        if (nu < 0)
            fail(ErrorKind::internal, "no partner in the " + std::to_string(t) + "-block for " + triple_str(rho, rho, alpha, t));
        r.entries.push_back({alpha, {DichotomyWitness::Case::partner, table->partitions()[static_cast<std::size_t>(nu)]}});
        ++r.partner_cases;
    }
    return r;
}

}  // namespace kronforge
