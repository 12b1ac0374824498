#pragma once

#include "esw/oracle.hpp"
#include "esw/search.hpp"
#include "esw/series.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace esw {

using Json = nlohmann::json;

// Everything needed to reproduce a run. Every emitted report embeds one.
struct RunManifest {
    std::string command;       // solve | scan | series | oracle
    SearchConfig config;
    std::string timestamp;     // ISO 8601 UTC
    std::string tool_version;  // kToolVersion
    std::vector<std::pair<std::string, std::uint64_t>> input;  // n, s, ...
};

RunManifest make_manifest(
    std::string command, const SearchConfig& cfg,
    std::vector<std::pair<std::string, std::uint64_t>> input);

std::string iso8601_now();

// Stable hex digest of the bounds that determine which witnesses exist:
// x_multiplier, t_window, numerator, strategy. time_budget_ms is excluded
// on purpose -- a witness found under a tight budget is the same witness,
// and an Exhausted verdict is about the box, not the clock.
std::string config_hash(const SearchConfig& cfg);

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);
const char* status_name(SearchStatus s);
SearchStatus status_from_name(const std::string& name);

// JSON builders. All big integers and rationals are decimal strings
// ({"num": "...", "den": "..."} for rationals) because they exceed the
// range JSON numbers can carry losslessly.
Json to_json(const Rat& r);
Json to_json(const Witness& w);
Json to_json(const SearchConfig& cfg);
Json to_json(const RunManifest& m);
Json to_json(const ScanOutcome& out);
Json scan_report_json(const ScanReport& rep, const RunManifest& m);
Json series_report_json(const SeriesReport& rep, const RunManifest& m);
Json solve_report_json(const ScanOutcome& out, std::uint32_t s,
                       const RunManifest& m);
Json oracle_report_json(const Int& N, const Int& z_cap,
                        const std::vector<Triple>& triples,
                        const RunManifest& m);

// Parsers for round-tripping; throw Json::exception or
// std::invalid_argument on malformed input.
Rat rat_from_json(const Json& j);
Witness witness_from_json(const Json& j);
SearchConfig config_from_json(const Json& j);
ScanOutcome scan_outcome_from_json(const Json& j);
ScanReport scan_report_from_json(const Json& j);
SeriesReport series_report_from_json(const Json& j);

// CSV for scan reports: header n,found,x,t,q,y,z,x_tried,t_tried then one
// row per n; witness columns are empty when nothing was found.
std::string scan_csv(const ScanReport& rep);

// Directory-backed store of per-(n, s, config) outcomes. Only Found and
// Exhausted are kept: a TimedOut verdict depends on the machine and budget,
// so caching it would poison later runs. Stored witnesses are re-verified
// on load; anything unreadable or unverifiable is treated as a miss.
class WitnessCache {
public:
    explicit WitnessCache(std::filesystem::path dir);

    std::optional<ScanOutcome> load(std::uint64_t n, std::uint32_t s,
                                    const SearchConfig& cfg) const;
    void store(const ScanOutcome& out, std::uint32_t s,
               const SearchConfig& cfg) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path entry_path(std::uint64_t n, std::uint32_t s,
                                     const SearchConfig& cfg) const;
    std::filesystem::path dir_;
};

}  // namespace esw
