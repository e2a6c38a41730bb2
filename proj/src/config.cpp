#include "constel/config.hpp"

#include <fstream>
#include <stdexcept>

namespace constel {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

uint64_t parse_u64(const std::string& value, const std::string& key, int line) {
    try {
        size_t pos = 0;
        uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config line " + std::to_string(line) + ": " + key +
                                 " needs an unsigned integer, got '" + value + "'");
    }
}

} // namespace

ToolConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");

    ToolConfig cfg;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line) + ": expected key=value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));

        if (key == "segment_slots") {
            cfg.segment_slots = parse_u64(value, key, line);
            if (cfg.segment_slots == 0)
                throw std::runtime_error("config line " + std::to_string(line) + ": segment_slots must be positive");
        } else if (key == "scan_cap") {
            cfg.scan_cap = parse_u64(value, key, line);
        } else if (key == "format") {
            if (value != "table" && value != "jsonl" && value != "csv")
                throw std::runtime_error("config line " + std::to_string(line) +
                                         ": format must be table, jsonl or csv");
            cfg.format = value;
        } else {
            throw std::runtime_error("config line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

} // namespace constel
