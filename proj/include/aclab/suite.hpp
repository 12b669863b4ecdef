#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aclab/graphs.hpp"
#include "aclab/unit_rings.hpp"
#include "aclab/wreath.hpp"

namespace aclab {

using Json = nlohmann::json;

inline constexpr const char* kCodeVersion = "1.0.0";

// JSON views of the report types (sorted keys, no timestamps)
Json to_json(const GraphAnalysis& a, const std::string& group_desc, int n, MoveSet moves);
Json to_json(const Gacc1Report& r);
Json to_json(const WeightOneReport& r, const GroupTable& g);
Json to_json(const DiameterInequalityReport& r);
Json to_json(const CoessentialityCertificate& c);
Json to_json(const WreathVerifyReport& r);
Json to_json(const GroupRecalcitrance& r);

// FNV-1a of the canonical serialization; used for cache keys and digests.
std::string fnv1a_hex(const std::string& data);

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string note;
    Json detail;
    double elapsed_ms = 0;
};

// Every generating n-vector of G_ab lifts to a generating n-vector of G,
// verified per Nielsen class representative.
bool coessential_by_lifting(const GroupTable& g, int n);

// The ten standing checks. Fixed lists and thresholds live in these
// functions; the suite runner and the acceptance binary both call them.
CheckResult check_abelian_classification();
CheckResult check_gacc1_catalog();
CheckResult check_recalcitrance_bound();
CheckResult check_bs_certificates();
CheckResult check_prime_power_scan();
CheckResult check_wreath_weight_one();
CheckResult check_w_structure();
CheckResult check_move_equivalence();
CheckResult check_diameter_inequalities();
CheckResult check_cyclotomic();

std::vector<CheckResult> run_all_checks();

// Suite runner behind `ac-lab suite run`. The catalog is a JSON array of
// descriptors: {"check": <name>} for the fixed checks, or
// {"check": "gacc1"|"move-equivalence"|"w-structure", "group": <spec>, "n": <n>}
// for per-group runs. An empty path selects the built-in default catalog.
struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::vector<CheckResult> results;
    std::string digest;  // over the concatenated check payloads
};

SuiteSummary run_acceptance_suite(const std::string& catalog_path,
                                  const std::string& output_dir);

Json default_catalog();

}  // namespace aclab
