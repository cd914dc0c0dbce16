#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ndslab/timeset.hpp"

namespace ndslab {

/// One output record: a kind plus ordered key/value pairs. Values are
/// pre-formatted (already quoted when they are strings), so emission is a
/// deterministic byte-for-byte join.
struct Report {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
    void add_quoted(const std::string& key, const std::string& value);
};

/// Line-delimited records, stable field order, one record per line.
std::string emit_records(const std::vector<Report>& reports);

/// Aligned two-column rendering for terminals; one block per record.
std::string emit_table(const std::vector<Report>& reports);

std::string emit(const std::vector<Report>& reports, const std::string& format);

/// Standard fields for a classified time-set.
Report timeset_report(const std::string& kind, const TimeSet& s, const ClassificationReport& c);

}  // namespace ndslab
