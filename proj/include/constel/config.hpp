// Tool configuration: key=value file, overridable by flags.
//
// Recognized keys: segment_slots, scan_cap, format. Lines starting with
// '#' and blank lines are ignored. The config path comes from --config or
// the CONSTEL_CONFIG environment variable.

#pragma once

#include <cstdint>
#include <string>

namespace constel {

struct ToolConfig {
    uint64_t segment_slots = uint64_t{1} << 20;
    uint64_t scan_cap = uint64_t{1} << 62;
    std::string format = "table";
};

// Throws std::runtime_error with a line-numbered message on bad input.
ToolConfig load_config(const std::string& path);

} // namespace constel
