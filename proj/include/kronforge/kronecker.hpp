#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kronforge/characters.hpp"
#include "kronforge/engine.hpp"

namespace kronforge {

struct KroneckerQuery {
    Partition alpha;
    Partition beta;
    Partition nu;
};

/// g(alpha, beta, nu) = (1/n!) sum over classes of size * [alpha][beta][nu].
/// The division must be exact; a remainder is reported as ErrorKind::internal.
std::int64_t kronecker_coefficient(const CharacterTable& table, std::size_t a, std::size_t b, std::size_t c);
std::int64_t kronecker_coefficient(Engine& engine, const KroneckerQuery& q);
std::int64_t kronecker_coefficient(Engine& engine, const Partition& alpha, const Partition& beta, const Partition& nu);

/// g(a, b, nu) for every nu in canonical order. The parallel version
/// splits the nu loop over OpenMP threads; the serial one is the reference.
std::vector<std::int64_t> product_coefficients(const CharacterTable& table, std::size_t a, std::size_t b, int threads);
std::vector<std::int64_t> product_coefficients_serial(const CharacterTable& table, std::size_t a, std::size_t b);

/// Multiplicities of the constituents of [alpha]^2; zero terms are absent.
struct SquareDecomposition {
    Partition alpha;
    std::map<Partition, std::int64_t, CanonicalOrder> terms;
};

SquareDecomposition kron_square(Engine& engine, const Partition& alpha);

/// Kron(alpha): the support of kron_square, in canonical order.
std::vector<Partition> kron_set(Engine& engine, const Partition& alpha);

/// g(l', m', n) == g(l, m, n), and when l is self-conjugate also
/// g(l, m', n) == g(l, m, n).
bool conjugation_symmetry_check(Engine& engine, const Partition& l, const Partition& m, const Partition& n);

struct Block {
    Partition core;
    std::vector<Partition> members;  // canonical order

    friend bool operator==(const Block&, const Block&) = default;
};

/// Disjoint blocks covering all partitions of n, ordered by their first
/// member in canonical order.
struct BlockPartition {
    int n = 0;
    int t = 0;
    std::vector<Block> blocks;
};

/// Groups the partitions of n by t-core.
BlockPartition combinatorial_blocks(Engine& engine, int n, int t);

/// Classes of the transitive closure of "restricted inner product over
/// t-regular classes is non-zero". Each block is labeled with the t-core
/// of its first member.
BlockPartition linked_blocks(Engine& engine, int n, int t);

/// Equality as set partitions, labels ignored.
bool same_blocks(const BlockPartition& a, const BlockPartition& b);

/// Index of the block containing p, or -1.
int block_of(const BlockPartition& blocks, const Partition& p);

}  // namespace kronforge
