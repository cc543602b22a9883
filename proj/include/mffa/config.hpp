#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mffa/firefly.hpp"

namespace mffa {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct KeyValue {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

/// `key = value` lines; `#` starts a comment, blank lines are skipped.
std::vector<KeyValue> parse_key_values(std::istream& in);
std::vector<KeyValue> read_key_value_file(const std::string& path);

double parse_double(std::string_view text);
std::uint64_t parse_uint(std::string_view text);
bool parse_bool(std::string_view text);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

/// Items separated by commas and/or whitespace.
std::vector<std::string> split_list(std::string_view text);

/// Sets one FfaParams field by name. Returns false for unknown keys;
/// throws ConfigError on bad values.
bool apply_param(FfaParams& params, std::string_view key, std::string_view value);

/// Every FfaParams field as `key = value` lines, in a fixed order.
std::string format_params(const FfaParams& params);

/// Throws ConfigError on unknown keys.
FfaParams load_params(const std::string& path, FfaParams base = {});

}  // namespace mffa
