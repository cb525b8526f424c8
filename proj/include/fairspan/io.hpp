#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fairspan/instance.hpp"

namespace fairspan {

std::string kind_to_string(Kind kind);
Kind kind_from_string(std::string_view text);

/// Canonical instance file: a JSON object {kind, machines, jobs, costs} with
/// every rational as a canonical "p/q" string. Byte-stable: writing the same
/// instance always produces the same bytes.
std::string instance_to_json_text(const Instance& inst);

/// Accepts canonical "p/q" strings, integers, and decimal literals (converted
/// exactly). Throws std::invalid_argument on malformed input.
Instance instance_from_json_text(std::string_view text);

Instance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// "1,2,2": 1-based machine per job.
Allocation parse_assignment_text(std::string_view text, int machines, int jobs);
std::string assignment_to_text(const Allocation& alloc);

/// "0,5/8,-9/8"
std::vector<Rational> parse_rational_list(std::string_view text);

/// FAIRSPAN_ENUM_CAP override; returns the fallback when unset. Throws
/// std::invalid_argument on a malformed value.
std::uint64_t enum_cap_from_env(std::uint64_t fallback);

}  // namespace fairspan
