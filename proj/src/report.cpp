#include "esw/report.hpp"

#include "esw/version.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace esw {

namespace {

std::string int_str(const Int& v) { return v.get_str(); }

Int int_from_str(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer field");
    return Int(s);  // mpz_class(string) throws on junk
}

}  // namespace

RunManifest make_manifest(
    std::string command, const SearchConfig& cfg,
    std::vector<std::pair<std::string, std::uint64_t>> input) {
    RunManifest m;
    m.command = std::move(command);
    m.config = cfg;
    m.timestamp = iso8601_now();
    m.tool_version = kToolVersion;
    m.input = std::move(input);
    return m;
}

std::string iso8601_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string config_hash(const SearchConfig& cfg) {
    std::ostringstream key;
    key << "x=" << cfg.x_multiplier << ";t=" << cfg.t_window
        << ";a=" << cfg.numerator_a << ";strategy=" << strategy_name(cfg.strategy);
    // FNV-1a, 64 bit: tiny, stable across platforms, and collisions are a
    // non-issue at the handful-of-configs scale the cache sees.
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : key.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::FirstFound: return "first_found";
        case Strategy::SmallestX: return "smallest_x";
    }
    throw std::invalid_argument("unknown strategy");
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "first_found") return Strategy::FirstFound;
    if (name == "smallest_x") return Strategy::SmallestX;
    throw std::invalid_argument("unknown strategy: " + name);
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::TimedOut: return "timed_out";
    }
    throw std::invalid_argument("unknown status");
}

SearchStatus status_from_name(const std::string& name) {
    if (name == "found") return SearchStatus::Found;
    if (name == "exhausted") return SearchStatus::Exhausted;
    if (name == "timed_out") return SearchStatus::TimedOut;
    throw std::invalid_argument("unknown status: " + name);
}

Json to_json(const Rat& r) {
    return Json{{"num", int_str(r.numerator())},
                {"den", int_str(r.denominator())}};
}

Json to_json(const Witness& w) {
    return Json{{"x", int_str(w.x)},
                {"t", int_str(w.t)},
                {"q", int_str(w.q)},
                {"y", int_str(w.y)},
                {"z", int_str(w.z)}};
}

Json to_json(const SearchConfig& cfg) {
    return Json{{"x_multiplier", cfg.x_multiplier},
                {"t_window", cfg.t_window},
                {"numerator", cfg.numerator_a},
                {"strategy", strategy_name(cfg.strategy)},
                {"time_budget_ms", cfg.time_budget_ms}};
}

Json to_json(const RunManifest& m) {
    Json input = Json::object();
    for (const auto& [k, v] : m.input) input[k] = v;
    return Json{{"command", m.command},
                {"config", to_json(m.config)},
                {"config_hash", config_hash(m.config)},
                {"timestamp", m.timestamp},
                {"tool_version", m.tool_version},
                {"input", input}};
}

Json to_json(const ScanOutcome& out) {
    Json j{{"n", out.n},
           {"found", out.witness.has_value()},
           {"status", status_name(out.status)},
           {"x_tried", out.x_tried},
           {"t_tried", out.t_tried}};
    j["witness"] = out.witness ? to_json(*out.witness) : Json(nullptr);
    return j;
}

Json scan_report_json(const ScanReport& rep, const RunManifest& m) {
    Json outcomes = Json::array();
    for (const ScanOutcome& out : rep.outcomes) outcomes.push_back(to_json(out));
    return Json{{"manifest", to_json(m)},
                {"n_min", rep.n_min},
                {"n_max", rep.n_max},
                {"s", rep.s},
                {"outcomes", outcomes},
                {"captured", rep.captured},
                {"success_rate", rep.success_rate},
                {"failed_n", rep.failed_n}};
}

Json series_report_json(const SeriesReport& rep, const RunManifest& m) {
    return Json{{"manifest", to_json(m)},
                {"s", rep.s},
                {"n_max", rep.n_max},
                {"left_exact", to_json(rep.left_exact)},
                {"right_exact", to_json(rep.right_exact)},
                {"zeta_m_exact", to_json(rep.zeta_m_exact)},
                {"four_zeta_exact", to_json(rep.four_zeta_exact)},
                {"exact_equal", rep.exact_equal},
                {"left_float", rep.left_float},
                {"right_float", rep.right_float},
                {"abs_error_float", rep.abs_error_float},
                {"left_exact_double", rep.left_exact_double},
                {"right_exact_double", rep.right_exact_double},
                {"tail_bound", to_json(rep.tail_bound)},
                {"failures", rep.failures}};
}

Json solve_report_json(const ScanOutcome& out, std::uint32_t s,
                       const RunManifest& m) {
    Json j = to_json(out);
    j["s"] = s;
    j["manifest"] = to_json(m);
    return j;
}

Json oracle_report_json(const Int& N, const Int& z_cap,
                        const std::vector<Triple>& triples,
                        const RunManifest& m) {
    Json list = Json::array();
    for (const Triple& t : triples)
        list.push_back(Json{{"x", int_str(t.x)},
                            {"y", int_str(t.y)},
                            {"z", int_str(t.z)}});
    return Json{{"manifest", to_json(m)},
                {"N", int_str(N)},
                {"z_cap", int_str(z_cap)},
                {"count", triples.size()},
                {"triples", list}};
}

Rat rat_from_json(const Json& j) {
    return Rat(int_from_str(j.at("num").get<std::string>()),
               int_from_str(j.at("den").get<std::string>()));
}

Witness witness_from_json(const Json& j) {
    Witness w;
    w.x = int_from_str(j.at("x").get<std::string>());
    w.t = int_from_str(j.at("t").get<std::string>());
    w.q = int_from_str(j.at("q").get<std::string>());
    w.y = int_from_str(j.at("y").get<std::string>());
    w.z = int_from_str(j.at("z").get<std::string>());
    return w;
}

SearchConfig config_from_json(const Json& j) {
    SearchConfig cfg;
    cfg.x_multiplier = j.at("x_multiplier").get<std::uint64_t>();
    cfg.t_window = j.at("t_window").get<std::uint64_t>();
    cfg.numerator_a = j.at("numerator").get<std::uint64_t>();
    cfg.strategy = strategy_from_name(j.at("strategy").get<std::string>());
    cfg.time_budget_ms = j.at("time_budget_ms").get<std::uint64_t>();
    cfg.validate();
    return cfg;
}

ScanOutcome scan_outcome_from_json(const Json& j) {
    ScanOutcome out;
    out.n = j.at("n").get<std::uint64_t>();
    out.status = status_from_name(j.at("status").get<std::string>());
    out.x_tried = j.at("x_tried").get<std::uint64_t>();
    out.t_tried = j.at("t_tried").get<std::uint64_t>();
    if (!j.at("witness").is_null()) out.witness = witness_from_json(j["witness"]);
    if (out.witness.has_value() != j.at("found").get<bool>())
        throw std::invalid_argument("outcome: found flag contradicts witness");
    return out;
}

ScanReport scan_report_from_json(const Json& j) {
    ScanReport rep;
    rep.n_min = j.at("n_min").get<std::uint64_t>();
    rep.n_max = j.at("n_max").get<std::uint64_t>();
    rep.s = j.at("s").get<std::uint32_t>();
    for (const Json& o : j.at("outcomes"))
        rep.outcomes.push_back(scan_outcome_from_json(o));
    rep.captured = j.at("captured").get<std::uint64_t>();
    rep.success_rate = j.at("success_rate").get<double>();
    rep.failed_n = j.at("failed_n").get<std::vector<std::uint64_t>>();
    return rep;
}

SeriesReport series_report_from_json(const Json& j) {
    SeriesReport rep;
    rep.s = j.at("s").get<std::uint32_t>();
    rep.n_max = j.at("n_max").get<std::uint64_t>();
    rep.left_exact = rat_from_json(j.at("left_exact"));
    rep.right_exact = rat_from_json(j.at("right_exact"));
    rep.zeta_m_exact = rat_from_json(j.at("zeta_m_exact"));
    rep.four_zeta_exact = rat_from_json(j.at("four_zeta_exact"));
    rep.exact_equal = j.at("exact_equal").get<bool>();
    rep.left_float = j.at("left_float").get<double>();
    rep.right_float = j.at("right_float").get<double>();
    rep.abs_error_float = j.at("abs_error_float").get<double>();
    rep.left_exact_double = j.at("left_exact_double").get<double>();
    rep.right_exact_double = j.at("right_exact_double").get<double>();
    rep.tail_bound = rat_from_json(j.at("tail_bound"));
    rep.failures = j.at("failures").get<std::vector<std::uint64_t>>();
    return rep;
}

std::string scan_csv(const ScanReport& rep) {
    std::ostringstream os;
    os << "n,found,x,t,q,y,z,x_tried,t_tried\n";
    for (const ScanOutcome& out : rep.outcomes) {
        os << out.n << ',' << (out.witness ? 1 : 0) << ',';
        if (out.witness) {
            const Witness& w = *out.witness;
            os << int_str(w.x) << ',' << int_str(w.t) << ',' << int_str(w.q)
               << ',' << int_str(w.y) << ',' << int_str(w.z);
        } else {
            os << ",,,,";
        }
        os << ',' << out.x_tried << ',' << out.t_tried << '\n';
    }
    return os.str();
}

WitnessCache::WitnessCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path WitnessCache::entry_path(std::uint64_t n, std::uint32_t s,
                                               const SearchConfig& cfg) const {
    std::ostringstream name;
    name << "n" << n << "_s" << s << "_" << config_hash(cfg) << ".json";
    return dir_ / name.str();
}

std::optional<ScanOutcome> WitnessCache::load(std::uint64_t n, std::uint32_t s,
                                              const SearchConfig& cfg) const {
    const std::filesystem::path path = entry_path(n, s, cfg);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        const Json j = Json::parse(in);
        if (j.at("n").get<std::uint64_t>() != n ||
            j.at("s").get<std::uint32_t>() != s ||
            j.at("config_hash").get<std::string>() != config_hash(cfg))
            return std::nullopt;
        ScanOutcome out = scan_outcome_from_json(j.at("outcome"));
        if (out.n != n || out.status == SearchStatus::TimedOut)
            return std::nullopt;
        if (out.witness) {
            // Never trust bytes from disk: a cached witness must still pass
            // the full exact verification for this (n, s, a).
            const Instance inst(n, s);
            if (!verify_witness(inst.N, *out.witness, cfg.numerator_a))
                return std::nullopt;
        }
        return out;
    } catch (const std::exception&) {
        // Unreadable or stale entries degrade to a re-search, never an abort.
        return std::nullopt;
    }
}

void WitnessCache::store(const ScanOutcome& out, std::uint32_t s,
                         const SearchConfig& cfg) const {
    if (out.status == SearchStatus::TimedOut) return;
    const Json j{{"n", out.n},
                 {"s", s},
                 {"config_hash", config_hash(cfg)},
                 {"config", to_json(cfg)},
                 {"outcome", to_json(out)}};
    std::ofstream f(entry_path(out.n, s, cfg));
    f << j.dump(2) << '\n';
}

}  // namespace esw
