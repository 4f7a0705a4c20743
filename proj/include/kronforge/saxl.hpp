#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kronforge/engine.hpp"
#include "kronforge/kronecker.hpp"

namespace kronforge {

/// n(k) = k(k+1)/2, the size of the staircase of height k.
constexpr int triangular(int k) { return k * (k + 1) / 2; }
/// floor(log2 k) for k >= 1.
int floor_log2(int k);

// ---------------------------------------------------------------------------
// Good pairs

/// (a, b) with a + b = n(k) - n(m) and a the sum of some I in {m+1, ..., k}.
struct GoodPair {
    int a = 0;
    int b = 0;
    std::vector<int> witness;  // ascending, sums to a
    int k = 0;
    int m = 0;
};

/// G(k, m), ordered by a descending. Each pair keeps the lexicographically
/// smallest ascending witness. ErrorKind::domain unless 1 <= m <= k.
std::vector<GoodPair> good_pairs(int k, int m);

/// The good pair (a, b) for (k, m) with its witness, or nullopt.
std::optional<GoodPair> find_good_pair(int k, int m, int a, int b);

// ---------------------------------------------------------------------------
// Certificates

enum class StepKind { base_kron, lift_a, combine_b, telescopic, doubling };

const char* step_name(StepKind kind);

/// One link of a derivation chain. Each step's input is the previous
/// step's output.
struct DerivationStep {
    StepKind kind = StepKind::base_kron;
    std::optional<Partition> input;
    Partition output;
    int level = 0;                    // staircase height the output lives under
    std::vector<Partition> components;  // combine_b: the two summands added to `input`
    int a = 0;                        // lift_a
    int b = 0;                        // lift_a
    int s = 0;                        // telescopic
    int t = 0;                        // telescopic
    std::string basis;                // base_kron: how membership was established
};

/// A claim that g(rho_k, rho_k, alpha) > 0 with the chain that derives it.
struct Certificate {
    int k = 0;
    Partition alpha;
    std::vector<DerivationStep> derivation;
    /// Inputs taken on trust rather than computed, in order of use.
    std::vector<std::string> assumptions;
    /// g(rho_k, rho_k, alpha), computed independently when feasible.
    std::optional<std::int64_t> confirmed;

    bool chain_composes() const;
};

// ---------------------------------------------------------------------------
// Sources of Kron(rho_{2^i}) and Kron(rect_j)

struct KronLevel {
    std::vector<Partition> members;  // canonical order
    bool exact = false;              // false: a certified subset
    std::vector<std::string> assumptions;
};

/// Supplies the Kronecker-square supports that telescopic constructions are
/// built from. Implementations return nullopt for levels they cannot serve.
class KronSource {
public:
    virtual ~KronSource() = default;
    /// Kron(rho_{2^i}).
    virtual std::optional<KronLevel> staircase_level(int i) = 0;
    /// Kron(rect_j).
    virtual std::optional<KronLevel> rectangle_level(int j) = 0;
};

/// Exact levels by brute force inside the engine's bound. Above it,
/// staircase level i is the certified subset
/// { l + m + r : l, m in level(i-1), r in Kron(rect_{2^(i-1)}) }
/// and Kron(rect_j) is the assumed singleton { rect_j }.
class EngineKronSource : public KronSource {
public:
    explicit EngineKronSource(Engine& engine) : engine_(engine) {}
    std::optional<KronLevel> staircase_level(int i) override;
    std::optional<KronLevel> rectangle_level(int j) override;

private:
    Engine& engine_;
    std::map<int, KronLevel> staircase_;
    std::map<int, KronLevel> rectangle_;
};

// ---------------------------------------------------------------------------
// Constructions

/// Certificate for pad(l, a, b) in Kron(rho_k) from l in Kron(rho_m).
/// Membership of l is brute-forced when n(m) is feasible; otherwise the
/// caller must vouch for it with `input_certified`.
Certificate lift_by_good_pair(Engine& engine, const Partition& l, int m, int k, const GoodPair& pair, bool input_certified = false);

/// Certificate for l + mu + nu in Kron(rho_k) from l, mu in Kron(rho_m) and
/// nu in Kron(rect_{k-m}), k in {2m, 2m + 1}.
Certificate combine_staircases(Engine& engine, const Partition& l, const Partition& mu, const Partition& nu, int m, int k,
                               bool inputs_certified = false);

struct TelescopicEntry {
    Partition alpha;
    Certificate certificate;
};

struct TelescopicSet {
    int k = 0;
    std::vector<TelescopicEntry> entries;  // canonical order of alpha
    /// True when every level used was exact, so entries is the whole set.
    bool exact = true;
};

/// All telescopic partitions of n(k) buildable from `source`. Empty for
/// k = 1. Each entry keeps the first derivation found, scanning s, then t,
/// then summands in canonical order, then good pairs.
TelescopicSet telescopic_partitions(Engine& engine, int k, KronSource& source);
TelescopicSet telescopic_partitions(Engine& engine, int k);

/// (rho_1 + sum_{i < m} (rect_{2^i} + rho_{2^i}))^{(a,b)} for m = floor(log2 k).
TelescopicEntry doubling_partition(Engine& engine, int k, const GoodPair& pair);
std::vector<TelescopicEntry> doubling_partitions(Engine& engine, int k);

// ---------------------------------------------------------------------------
// Witnesses and sweeps

struct DichotomyWitness {
    enum class Case { core, partner };
    Case kind = Case::core;
    std::optional<Partition> partner;
};

/// For t-core xi with g(xi, beta, alpha) != 0: either alpha is a t-core, or
/// the earliest nu != alpha (canonical order) sharing alpha's t-core with
/// g(xi, beta, nu) != 0. Failing to find one is ErrorKind::internal.
DichotomyWitness block_dichotomy_witness(Engine& engine, const Partition& xi, const Partition& beta, const Partition& alpha, int t);

struct DichotomySweep {
    int n = 0;
    std::int64_t triples = 0;   // (t, xi, beta, alpha) checked
    std::int64_t core_cases = 0;
    std::int64_t partner_cases = 0;
    std::int64_t failures = 0;
};

/// Every t in [2, n], t-core xi, beta and alpha with g(xi, beta, alpha) != 0.
/// Parallel over xi; failures are counted rather than thrown.
DichotomySweep dichotomy_sweep(Engine& engine, int n);

/// The hook (n - d, 1^d) with smallest d in [1, n - 2] and g(alpha, alpha,
/// hook) != 0. ErrorKind::domain for alpha in {(n), (1^n)}.
Partition hook_constituent(Engine& engine, const Partition& alpha);

/// ((2^(i-1))^2, 1^(2^(2i-1) - 2^(i-1))), a partition of n(2^i).
Partition odd_example_partition(int i);

struct SaxlMembership {
    Partition alpha;
    bool found = false;
};

struct SaxlReport {
    int k = 0;
    int n = 0;
    std::size_t total = 0;
    std::vector<Partition> kron_set;
    std::vector<Partition> missing;
    std::vector<SaxlMembership> telescopic;
    std::vector<SaxlMembership> doubling;
};

SaxlReport saxl_verify(Engine& engine, int k);

struct BlockCheckEntry {
    Partition alpha;
    DichotomyWitness witness;
};

struct BlockCheckReport {
    int k = 0;
    int t = 0;
    std::vector<BlockCheckEntry> entries;
    int core_cases = 0;
    int partner_cases = 0;
};

/// Dichotomy witnesses for every alpha in Kron(rho_k) with xi = beta = rho_k.
/// ErrorKind::domain unless t is even or t >= 2k + 1.
BlockCheckReport kron_block_check(Engine& engine, int k, int t);

}  // namespace kronforge
