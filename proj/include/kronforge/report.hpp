#pragma once

#include <string>

#include <json.hpp>

#include "kronforge/characters.hpp"
#include "kronforge/kronecker.hpp"
#include "kronforge/saxl.hpp"

namespace kronforge {

/// Key order is insertion order, so output follows canonical partition order.
using Json = nlohmann::ordered_json;

Json partitions_json(const std::vector<Partition>& ps);
Json decomposition_json(const SquareDecomposition& d);
Json blocks_json(const BlockPartition& b);
Json certificate_json(const Certificate& c);
Json telescopic_json(const TelescopicSet& set);
Json doubling_json(int k, const std::vector<TelescopicEntry>& entries);
Json good_pairs_json(int k, int m, const std::vector<GoodPair>& pairs);
Json saxl_json(const SaxlReport& r);
Json block_check_json(const BlockCheckReport& r);
Json witness_json(const DichotomyWitness& w);
Json core_json(const CoreResult& r);
Json table_report_json(const CharacterTable& table, const OrthogonalityReport& check, const std::string& checksum);
Json blocks_report_json(const BlockPartition& combinatorial, const BlockPartition& linked);
Json dichotomy_sweep_json(const DichotomySweep& s);

/// Compact single-line serialization with a trailing newline.
std::string dump_json(const Json& j);

/// Plain-text rendering for --output table.
std::string render_text(const Json& j);

}  // namespace kronforge
