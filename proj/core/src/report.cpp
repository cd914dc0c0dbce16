#include "ndslab/report.hpp"

#include <algorithm>
#include <sstream>

#include "ndslab/errors.hpp"
#include "ndslab/record.hpp"

namespace ndslab {

void Report::add_quoted(const std::string& key, const std::string& value) {
    add(key, quote_string(value));
}

std::string emit_records(const std::vector<Report>& reports) {
    std::ostringstream out;
    for (const Report& r : reports) {
        out << r.kind << " {";
        bool first = true;
        for (const auto& [k, v] : r.fields) {
            out << (first ? " " : ", ") << k << " = " << v;
            first = false;
        }
        out << " }\n";
    }
    return out.str();
}

std::string emit_table(const std::vector<Report>& reports) {
    std::ostringstream out;
    for (const Report& r : reports) {
        out << "== " << r.kind << " ==\n";
        std::size_t width = 0;
        for (const auto& [k, v] : r.fields) width = std::max(width, k.size());
        for (const auto& [k, v] : r.fields) {
            out << "  " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
        }
        out << "\n";
    }
    return out.str();
}

std::string emit(const std::vector<Report>& reports, const std::string& format) {
    if (format == "records") return emit_records(reports);
    if (format == "table") return emit_table(reports);
    throw QueryError("unknown report format: " + format);
}

namespace {

std::string opt_long(const std::optional<long>& v) {
    return v ? std::to_string(*v) : "none";
}

}  // namespace

Report timeset_report(const std::string& kind, const TimeSet& s, const ClassificationReport& c) {
    Report r;
    r.kind = kind;
    r.add("horizon", std::to_string(c.horizon));
    r.add_quoted("members", s.run_length_encoded());
    r.add("count", std::to_string(s.count()));
    r.add("syndetic_bound", opt_long(c.syndetic_bound));
    r.add("longest_run", std::to_string(c.longest_run));
    r.add("cofinite_from", opt_long(c.cofinite_from));
    r.add_quoted("density_estimate", c.density_estimate.str());
    r.add("tail_uncertain", c.tail_uncertain ? "true" : "false");
    std::string verdicts;
    auto tag = [&](const char* name, bool on) {
        if (!on) return;
        if (!verdicts.empty()) verdicts += ",";
        verdicts += name;
    };
    tag("cofinite", c.cofinite);
    tag("thickly-syndetic", c.thickly_syndetic);
    tag("syndetic", c.syndetic);
    tag("thick", c.thick);
    tag("positive-density", c.positive_density);
    r.add_quoted("verdicts", verdicts);
    return r;
}

}  // namespace ndslab
