#include "mffa/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace mffa {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<KeyValue> parse_key_values(std::istream& in) {
    std::vector<KeyValue> out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        auto key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        out.push_back({std::string(key), std::string(trim(line.substr(eq + 1))), line_no});
    }
    return out;
}

std::vector<KeyValue> read_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    return parse_key_values(in);
}

double parse_double(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_uint(std::string_view text) {
    text = trim(text);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("not a non-negative integer: '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError("not a boolean: '" + std::string(text) + "'");
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

bool apply_param(FfaParams& params, std::string_view key, std::string_view value) {
    if (key == "np" || key == "population_size") {
        params.population_size = parse_uint(value);
    } else if (key == "lb") {
        params.lb = parse_double(value);
    } else if (key == "ub") {
        params.ub = parse_double(value);
    } else if (key == "alpha") {
        params.alpha = parse_double(value);
    } else if (key == "beta0") {
        params.beta0 = parse_double(value);
    } else if (key == "gamma") {
        params.gamma = parse_double(value);
    } else if (key == "max_fes") {
        params.max_fes = parse_uint(value);
    } else if (key == "attraction_source") {
        auto src = parse_attraction_source(trim(value));
        if (!src) throw ConfigError("attraction_source must be 'current' or 'sorted'");
        params.attraction_source = *src;
    } else if (key == "local_search") {
        params.local_search = parse_bool(value);
    } else if (key == "normalize_distance") {
        params.normalize_distance = parse_bool(value);
    } else if (key == "seed") {
        params.seed = parse_uint(value);
    } else {
        return false;
    }
    return true;
}

std::string format_params(const FfaParams& p) {
    std::ostringstream out;
    out << "np = " << p.population_size << '\n'
        << "lb = " << format_double(p.lb) << '\n'
        << "ub = " << format_double(p.ub) << '\n'
        << "alpha = " << format_double(p.alpha) << '\n'
        << "beta0 = " << format_double(p.beta0) << '\n'
        << "gamma = " << format_double(p.gamma) << '\n'
        << "max_fes = " << p.max_fes << '\n'
        << "attraction_source = " << to_string(p.attraction_source) << '\n'
        << "local_search = " << (p.local_search ? "true" : "false") << '\n'
        << "normalize_distance = " << (p.normalize_distance ? "true" : "false") << '\n'
        << "seed = " << p.seed << '\n';
    return out.str();
}

FfaParams load_params(const std::string& path, FfaParams base) {
    for (const auto& kv : read_key_value_file(path)) {
        try {
            if (!apply_param(base, kv.key, kv.value)) throw ConfigError("unknown key '" + kv.key + "'");
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(kv.line) + ": " + e.what());
        }
    }
    return base;
}

}  // namespace mffa
