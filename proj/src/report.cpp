#include "kronforge/report.hpp"

#include <sstream>

namespace kronforge {

Json partitions_json(const std::vector<Partition>& ps)
{
    Json arr = Json::array();
    for (const auto& p : ps)
        arr.push_back(p.str());
    return arr;
}

Json decomposition_json(const SquareDecomposition& d)
{
    Json obj = Json::object();
    for (const auto& [nu, mult] : d.terms)
        obj[nu.str()] = mult;
    return obj;
}

Json blocks_json(const BlockPartition& b)
{
    Json arr = Json::array();
    for (const auto& block : b.blocks)
        arr.push_back({{"core", block.core.str()}, {"members", partitions_json(block.members)}});
    return arr;
}

namespace {

Json step_json(const DerivationStep& s)
{
    Json j;
    j["step"] = step_name(s.kind);
    switch (s.kind) {
    case StepKind::base_kron:
        j["m"] = s.level;
        j["partition"] = s.output.str();
        j["basis"] = s.basis;
        break;
    case StepKind::combine_b:
        j["m"] = s.level;
        j["input"] = s.input->str();
        j["components"] = partitions_json(s.components);
        j["output"] = s.output.str();
        break;
    case StepKind::lift_a:
        j["index"] = s.level;
        j["pad"] = {s.a, s.b};
        j["input"] = s.input->str();
        j["output"] = s.output.str();
        break;
    case StepKind::telescopic:
        j["s"] = s.s;
        j["t"] = s.t;
        j["input"] = s.input->str();
        j["output"] = s.output.str();
        break;
    case StepKind::doubling:
        j["k"] = s.level;
        j["input"] = s.input->str();
        j["output"] = s.output.str();
        break;
    }
    return j;
}

}  // namespace

Json certificate_json(const Certificate& c)
{
    Json j;
    j["k"] = c.k;
    j["alpha"] = c.alpha.str();
    Json steps = Json::array();
    for (const auto& s : c.derivation)
        steps.push_back(step_json(s));
    j["derivation"] = steps;
    j["assumptions"] = c.assumptions;
    if (c.confirmed)
        j["confirmed"] = std::to_string(*c.confirmed);
    else
        j["confirmed"] = nullptr;
    return j;
}

Json telescopic_json(const TelescopicSet& set)
{
    Json j;
    j["k"] = set.k;
    j["n"] = triangular(set.k);
    j["exact"] = set.exact;
    j["count"] = set.entries.size();
    Json arr = Json::array();
    for (const auto& e : set.entries)
        arr.push_back(certificate_json(e.certificate));
    j["certificates"] = arr;
    return j;
}

Json doubling_json(int k, const std::vector<TelescopicEntry>& entries)
{
    Json j;
    j["k"] = k;
    j["n"] = triangular(k);
    Json arr = Json::array();
    for (const auto& e : entries)
        arr.push_back(certificate_json(e.certificate));
    j["certificates"] = arr;
    return j;
}

Json good_pairs_json(int k, int m, const std::vector<GoodPair>& pairs)
{
    Json j;
    j["k"] = k;
    j["m"] = m;
    Json arr = Json::array();
    for (const auto& p : pairs)
        arr.push_back({{"a", p.a}, {"b", p.b}, {"witness", p.witness}});
    j["pairs"] = arr;
    return j;
}

namespace {

Json membership_json(const std::vector<SaxlMembership>& ms)
{
    Json arr = Json::array();
    for (const auto& m : ms)
        arr.push_back({{"partition", m.alpha.str()}, {"found", m.found}});
    return arr;
}

}  // namespace

Json saxl_json(const SaxlReport& r)
{
    Json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["total"] = r.total;
    j["found"] = r.kron_set.size();
    j["missing"] = partitions_json(r.missing);
    j["telescopic_hits"] = membership_json(r.telescopic);
    j["corollary16_hits"] = membership_json(r.doubling);
    j["kron_set"] = partitions_json(r.kron_set);
    return j;
}

Json witness_json(const DichotomyWitness& w)
{
    Json j;
    j["case"] = w.kind == DichotomyWitness::Case::core ? "core" : "partner";
    if (w.partner)
        j["partner"] = w.partner->str();
    else
        j["partner"] = nullptr;
    return j;
}

Json block_check_json(const BlockCheckReport& r)
{
    Json j;
    j["k"] = r.k;
    j["t"] = r.t;
    j["members"] = r.entries.size();
    j["core_cases"] = r.core_cases;
    j["partner_cases"] = r.partner_cases;
    Json arr = Json::array();
    for (const auto& e : r.entries) {
        Json w = witness_json(e.witness);
        w["alpha"] = e.alpha.str();
        arr.push_back(w);
    }
    j["witnesses"] = arr;
    return j;
}

Json core_json(const CoreResult& r) { return {{"core", r.core.str()}, {"weight", r.weight}}; }

Json table_report_json(const CharacterTable& table, const OrthogonalityReport& check, const std::string& checksum)
{
    Json j;
    j["n"] = table.n();
    j["classes"] = table.order();
    j["group_order"] = to_decimal(table.group_order());
    j["checksum"] = checksum;
    j["rows_orthonormal"] = check.rows_orthonormal;
    j["columns_orthogonal"] = check.columns_orthogonal;
    j["degrees_match"] = check.degrees_match;
    return j;
}

Json blocks_report_json(const BlockPartition& combinatorial, const BlockPartition& linked)
{
    Json j;
    j["n"] = combinatorial.n;
    j["t"] = combinatorial.t;
    j["equal"] = same_blocks(combinatorial, linked);
    j["combinatorial"] = blocks_json(combinatorial);
    j["linked"] = blocks_json(linked);
    return j;
}

Json dichotomy_sweep_json(const DichotomySweep& s)
{
    return {{"n", s.n}, {"triples", s.triples}, {"core_cases", s.core_cases}, {"partner_cases", s.partner_cases}, {"failures", s.failures}};
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

namespace {

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    return v.dump();
}

void render(std::ostringstream& out, const Json& j, const std::string& indent)
{
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            if (v.is_structured() && !v.empty() && !(v.is_array() && !v.front().is_structured())) {
                out << indent << key << ":\n";
                render(out, v, indent + "  ");
            } else if (v.is_array()) {
                out << indent << key << ":";
                for (const auto& x : v)
                    out << ' ' << (x.is_string() && x.get<std::string>().empty() ? "()" : scalar_text(x));
                out << '\n';
            } else {
                out << indent << key << ": " << scalar_text(v) << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                out << indent << "-\n";
                render(out, v, indent + "  ");
            } else {
                out << indent << "- " << scalar_text(v) << '\n';
            }
        }
    } else {
        out << indent << scalar_text(j) << '\n';
    }
}

}  // namespace

std::string render_text(const Json& j)
{
    std::ostringstream out;
    render(out, j, "");
    return out.str();
}

}  // namespace kronforge
