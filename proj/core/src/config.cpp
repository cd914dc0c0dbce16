#include "ndslab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ndslab/errors.hpp"
#include "ndslab/fixtures.hpp"
#include "ndslab/record.hpp"

namespace ndslab {

namespace {

const std::set<std::string> kKnownKeys = {
    "fixture", "second_fixture", "maps",      "analysis",       "v",
    "vs",      "u",              "box_u",     "box_v",          "center",
    "delta",   "epsilon",        "horizon",   "seed",           "trials",
    "length",  "density_min",    "thick_run_min", "ts_window_max",
    "format",  "out",            "orbit_file"};

[[noreturn]] void fail(const std::string& msg) { throw QueryError("config: " + msg); }

std::string want_string(const RecordValue& v, const std::string& key) {
    if (v.kind != RecordValue::Kind::String) fail("field '" + key + "' must be a quoted string");
    return v.text;
}

long long want_integer(const RecordValue& v, const std::string& key) {
    if (v.kind != RecordValue::Kind::Integer) fail("field '" + key + "' must be a bare integer");
    return v.integer;
}

Rational want_rational(const RecordValue& v, const std::string& key) {
    if (v.kind == RecordValue::Kind::Integer) return Rational(v.integer);
    if (v.kind == RecordValue::Kind::String) {
        try {
            return Rational::parse(v.text);
        } catch (const std::exception& e) {
            fail("field '" + key + "': " + e.what());
        }
    }
    fail("field '" + key + "' must be a rational like \"1/4\" or \"0.25\"");
}

PLMap map_from_record(const RecordValue& v, const std::string& key) {
    if (v.kind != RecordValue::Kind::Record || v.record_name != "pl-map")
        fail("field '" + key + "' entries must be pl-map records");
    const RecordValue* bp = v.find("breakpoints");
    const RecordValue* vals = v.find("values");
    if (!bp || !vals || bp->kind != RecordValue::Kind::List ||
        vals->kind != RecordValue::Kind::List)
        fail("pl-map needs 'breakpoints' and 'values' lists");
    std::vector<Rational> b, w;
    for (const RecordValue& e : bp->list) b.push_back(want_rational(e, key));
    for (const RecordValue& e : vals->list) w.push_back(want_rational(e, key));
    try {
        return PLMap(std::move(b), std::move(w));
    } catch (const std::exception& e) {
        fail("field '" + key + "': " + e.what());
    }
}

std::vector<OpenInterval> want_intervals(const RecordValue& v, const std::string& key) {
    std::vector<OpenInterval> out;
    if (v.kind == RecordValue::Kind::String) {
        out.push_back(parse_open_interval(v.text));
        return out;
    }
    if (v.kind != RecordValue::Kind::List)
        fail("field '" + key + "' must be an interval or a list of intervals");
    for (const RecordValue& e : v.list)
        out.push_back(parse_open_interval(want_string(e, key)));
    if (out.empty()) fail("field '" + key + "' must not be empty");
    return out;
}

FiniteSubset want_subset(const RecordValue& v, const std::string& key) {
    if (v.kind == RecordValue::Kind::List) {
        std::vector<Rational> pts;
        for (const RecordValue& e : v.list) pts.push_back(want_rational(e, key));
        try {
            return FiniteSubset(std::move(pts));
        } catch (const std::exception& e) {
            fail("field '" + key + "': " + e.what());
        }
    }
    fail("field '" + key + "' must be a list of rationals");
}

}  // namespace

OpenInterval parse_open_interval(const std::string& text) {
    std::string s = text;
    auto strip = [](std::string& t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    };
    strip(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        fail("interval must look like \"(1/4, 1/2)\": " + text);
    s = s.substr(1, s.size() - 2);
    auto comma = s.find(',');
    if (comma == std::string::npos) fail("interval needs two endpoints: " + text);
    std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    strip(a);
    strip(b);
    Rational lo = Rational::parse(a), hi = Rational::parse(b);
    if (!(Rational(0) <= lo && hi <= Rational(1)))
        fail("interval endpoints must lie in [0,1]: " + text);
    if (!(lo < hi)) fail("interval must be nondegenerate: " + text);
    return {lo, hi};
}

MapSchedule RunConfig::schedule() const {
    if (fixture_name) return fixture(*fixture_name).schedule;
    if (inline_maps) return *inline_maps;
    fail("either 'fixture' or 'maps' is required");
}

MapSchedule RunConfig::schedule_second() const {
    if (!second_fixture) fail("'second_fixture' is required for product analyses");
    return fixture(*second_fixture).schedule;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    for (const auto& [key, value] : parse_config_text(text)) {
        if (!kKnownKeys.count(key)) fail("unknown key '" + key + "'");
        if (!seen.insert(key).second) fail("duplicate key '" + key + "'");
        if (key == "fixture") {
            cfg.fixture_name = want_string(value, key);
        } else if (key == "second_fixture") {
            cfg.second_fixture = want_string(value, key);
        } else if (key == "maps") {
            if (value.kind != RecordValue::Kind::List) fail("'maps' must be a list of pl-map records");
            std::vector<PLMap> maps;
            for (const RecordValue& e : value.list) maps.push_back(map_from_record(e, key));
            if (maps.empty()) fail("'maps' must not be empty");
            cfg.inline_maps = MapSchedule(std::move(maps));
        } else if (key == "analysis") {
            cfg.analysis = want_string(value, key);
        } else if (key == "v" || key == "vs") {
            if (!cfg.vs.empty()) fail("give either 'v' or 'vs', not both");
            cfg.vs = want_intervals(value, key);
        } else if (key == "u") {
            cfg.u = parse_open_interval(want_string(value, key));
        } else if (key == "box_u") {
            cfg.box_u = VietorisBox{want_intervals(value, key)};
        } else if (key == "box_v") {
            cfg.box_v = VietorisBox{want_intervals(value, key)};
        } else if (key == "center") {
            cfg.center = want_subset(value, key);
        } else if (key == "delta") {
            cfg.delta = want_rational(value, key);
            if (!(*cfg.delta > Rational(0))) fail("'delta' must be positive");
        } else if (key == "epsilon") {
            cfg.epsilon = want_rational(value, key);
            if (!(*cfg.epsilon > Rational(0))) fail("'epsilon' must be positive");
        } else if (key == "horizon") {
            long long h = want_integer(value, key);
            if (h < 1) fail("'horizon' must be at least 1");
            cfg.horizon = static_cast<long>(h);
        } else if (key == "seed") {
            long long s = want_integer(value, key);
            if (s < 0) fail("'seed' must be non-negative");
            cfg.seed = static_cast<std::uint64_t>(s);
        } else if (key == "trials") {
            long long t = want_integer(value, key);
            if (t < 1) fail("'trials' must be at least 1");
            cfg.trials = static_cast<std::size_t>(t);
        } else if (key == "length") {
            long long m = want_integer(value, key);
            if (m < 1) fail("'length' must be at least 1");
            cfg.length = static_cast<std::size_t>(m);
        } else if (key == "density_min") {
            cfg.thresholds.density_min = want_rational(value, key);
            if (!(cfg.thresholds.density_min > Rational(0))) fail("'density_min' must be positive");
        } else if (key == "thick_run_min") {
            long long k = want_integer(value, key);
            if (k < 1) fail("'thick_run_min' must be at least 1");
            cfg.thresholds.thick_run_min = static_cast<long>(k);
        } else if (key == "ts_window_max") {
            long long k = want_integer(value, key);
            if (k < 1) fail("'ts_window_max' must be at least 1");
            cfg.thresholds.ts_window_max = static_cast<long>(k);
        } else if (key == "format") {
            std::string f = want_string(value, key);
            if (f != "records" && f != "table") fail("'format' must be records or table");
            cfg.format = f;
        } else if (key == "out") {
            cfg.out_path = want_string(value, key);
        } else if (key == "orbit_file") {
            cfg.orbit_file = want_string(value, key);
        }
    }
    if (cfg.fixture_name && cfg.inline_maps) fail("give either 'fixture' or 'maps', not both");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace ndslab
