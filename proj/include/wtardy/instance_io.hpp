// Instance files.
//
// JSON: {"jobs":[{"p":2,"w":3,"d":2}, ...]}
// CSV:  header "p,w,d", then one job per row.
// Job ids are implicit: the 0-based position in the file.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wtardy/core.hpp"

namespace wtardy {

enum class InstanceFormat { kJson, kCsv };

/// Parse errors carry the line (CSV) or job index (JSON) and field name.
/// All failures throw InvalidInput.
Instance parse_instance_json(std::string_view text);
Instance parse_instance_csv(std::string_view text);

/// Picks the format from the first non-blank character ('{' means JSON).
Instance parse_instance(std::string_view text);

/// Reads a file, or stdin when path is "-".
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& instance, InstanceFormat format);

/// Format implied by a file extension (.json / .csv), JSON otherwise.
InstanceFormat format_for_path(const std::string& path);

}  // namespace wtardy
