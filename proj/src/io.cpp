#include "fairspan/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fairspan {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string kind_to_string(Kind kind) {
  return kind == Kind::chores ? "chores" : "goods";
}

Kind kind_from_string(std::string_view text) {
  if (text == "chores") return Kind::chores;
  if (text == "goods") return Kind::goods;
  throw std::invalid_argument("kind must be 'chores' or 'goods', got '" + std::string(text) + "'");
}

std::string instance_to_json_text(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["kind"] = kind_to_string(inst.kind());
  doc["machines"] = inst.machines();
  doc["jobs"] = inst.jobs();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < inst.machines(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < inst.jobs(); ++j) row.push_back(inst.cost(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["costs"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Instance instance_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("machines") ||
      !doc.contains("jobs") || !doc.contains("costs")) {
    throw std::invalid_argument("instance file must contain kind, machines, jobs, costs");
  }
  const Kind kind = kind_from_string(doc["kind"].get<std::string>());
  const int machines = doc["machines"].get<int>();
  const int jobs = doc["jobs"].get<int>();
  if (!doc["costs"].is_array() || static_cast<int>(doc["costs"].size()) != machines) {
    throw std::invalid_argument("costs must be an array with one row per machine");
  }
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(machines) * jobs);
  for (const auto& row : doc["costs"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != jobs) {
      throw std::invalid_argument("each costs row must list one entry per job");
    }
    for (const auto& cell : row) {
      if (!cell.is_string()) {
        throw std::invalid_argument("cost entries must be rational strings");
      }
      entries.push_back(Rational::parse(cell.get<std::string>()));
    }
  }
  return Instance(kind, machines, jobs, std::move(entries));
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json_text(buffer.str());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Allocation parse_assignment_text(std::string_view text, int machines, int jobs) {
  std::vector<std::string> parts = split(text, ',');
  if (static_cast<int>(parts.size()) != jobs) {
    throw std::invalid_argument("allocation must list exactly one machine per job");
  }
  std::vector<int> assignment;
  assignment.reserve(parts.size());
  for (const std::string& part : parts) {
    size_t used = 0;
    int machine = 0;
    try {
      machine = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed allocation entry '" + part + "'");
    }
    if (used != part.size() || machine < 1 || machine > machines) {
      throw std::invalid_argument("allocation entry '" + part + "' is not a machine in 1.." +
                                  std::to_string(machines));
    }
    assignment.push_back(machine - 1);
  }
  return Allocation(machines, std::move(assignment));
}

std::string assignment_to_text(const Allocation& alloc) {
  std::string out;
  for (int j = 0; j < alloc.job_count(); ++j) {
    if (j) out += ',';
    out += std::to_string(alloc.machine_of(j) + 1);
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  for (const std::string& part : split(text, ',')) values.push_back(Rational::parse(part));
  return values;
}

std::uint64_t enum_cap_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("FAIRSPAN_ENUM_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::string text(raw);
  size_t used = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("FAIRSPAN_ENUM_CAP is not a positive integer");
  }
  if (used != text.size() || cap == 0) {
    throw std::invalid_argument("FAIRSPAN_ENUM_CAP is not a positive integer");
  }
  return cap;
}

}  // namespace fairspan
