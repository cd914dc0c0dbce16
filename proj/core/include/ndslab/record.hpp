#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ndslab/errors.hpp"

namespace ndslab {

/// Value in the structured-record text format used for maps, query files and
/// reports: `name { key = value, ... }` with strings, integers and lists.
struct RecordValue {
    enum class Kind { String, Integer, List, Record };

    Kind kind = Kind::String;
    std::string text;                                          // String
    long long integer = 0;                                     // Integer
    std::vector<RecordValue> list;                             // List
    std::string record_name;                                   // Record
    std::vector<std::pair<std::string, RecordValue>> fields;   // Record

    const RecordValue* find(std::string_view key) const;
    const RecordValue& at(std::string_view key) const;
};

/// Parses a single `name { ... }` record.
RecordValue parse_record_text(std::string_view text);

/// Parses a config file: one `key = value` per line, '#' comments.
std::vector<std::pair<std::string, RecordValue>> parse_config_text(std::string_view text);

std::string quote_string(std::string_view s);

}  // namespace ndslab
