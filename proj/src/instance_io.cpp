#include "wtardy/instance_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace wtardy {

namespace {

using nlohmann::json;

Value json_field(const json& job, std::size_t index, const char* name) {
  const std::string where = "job " + std::to_string(index) + ", field '" + name + "'";
  if (!job.contains(name)) throw InvalidInput(where + ": missing");
  const json& v = job.at(name);
  if (!v.is_number_integer()) throw InvalidInput(where + ": not an integer");
  const Value x = v.get<Value>();
  if (x < 1) throw InvalidInput(where + ": must be positive");
  return x;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Value csv_field(const std::string& cell, std::size_t line, const char* name) {
  const std::string where = "line " + std::to_string(line) + ", field '" + name + "'";
  if (cell.empty()) throw InvalidInput(where + ": empty");
  std::size_t used = 0;
  Value x = 0;
  try {
    x = std::stoll(cell, &used);
  } catch (const std::exception&) {
    throw InvalidInput(where + ": not an integer");
  }
  if (used != cell.size()) throw InvalidInput(where + ": not an integer");
  if (x < 1) throw InvalidInput(where + ": must be positive");
  return x;
}

}  // namespace

Instance parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("jobs") || !doc.at("jobs").is_array()) {
    throw InvalidInput("expected an object with a \"jobs\" array");
  }
  std::vector<Job> jobs;
  const json& arr = doc.at("jobs");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_object()) {
      throw InvalidInput("job " + std::to_string(i) + ": not an object");
    }
    jobs.push_back(Job{static_cast<JobId>(i), json_field(arr[i], i, "p"),
                       json_field(arr[i], i, "w"), json_field(arr[i], i, "d")});
  }
  return Instance(std::move(jobs));
}

Instance parse_instance_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<Job> jobs;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (!header_seen) {
      if (cells != std::vector<std::string>{"p", "w", "d"}) {
        throw InvalidInput("line " + std::to_string(line_no) +
                           ": expected header \"p,w,d\"");
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != 3) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                         std::to_string(cells.size()));
    }
    jobs.push_back(Job{static_cast<JobId>(jobs.size()),
                       csv_field(cells[0], line_no, "p"),
                       csv_field(cells[1], line_no, "w"),
                       csv_field(cells[2], line_no, "d")});
  }
  if (!header_seen) throw InvalidInput("empty file");
  return Instance(std::move(jobs));
}

Instance parse_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InvalidInput("empty file");
  return text[first] == '{' ? parse_instance_json(text) : parse_instance_csv(text);
}

Instance load_instance(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    buf << f.rdbuf();
  }
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& instance, InstanceFormat format) {
  std::ostringstream out;
  if (format == InstanceFormat::kCsv) {
    out << "p,w,d\n";
    for (const Job& j : instance.jobs()) out << j.p << ',' << j.w << ',' << j.d << '\n';
    return out.str();
  }
  json arr = json::array();
  for (const Job& j : instance.jobs()) arr.push_back({{"p", j.p}, {"w", j.w}, {"d", j.d}});
  out << json{{"jobs", arr}}.dump() << '\n';
  return out.str();
}

InstanceFormat format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".csv") return InstanceFormat::kCsv;
  return InstanceFormat::kJson;
}

}  // namespace wtardy
