// Gap signatures and prime multiplets.
//
// A signature stores HALF gaps d_i; consecutive tuple members sit 2*d_i
// apart, so every offset from the base is even and parity never flips.
// User-facing layers print full distances 2*d_i; the halving happens at
// the parse boundary, nowhere else.

#pragma once

#include <cstdint>
#include <vector>

#include "constel/errors.hpp"

namespace constel {

// Tuples longer than this are rejected up front.
inline constexpr size_t kMaxTupleLength = 64;

class GapSignature {
public:
    // Validates: at least one gap, every d_i >= 1, length cap, offset cap.
    static GapSignature from_half_gaps(std::vector<uint64_t> half_gaps);

    const std::vector<uint64_t>& half_gaps() const { return half_gaps_; }
    size_t length() const { return half_gaps_.size() + 1; }

    // Cumulative half offsets c_0 = 0, c_i = d_1 + ... + d_i.
    const std::vector<uint64_t>& offsets() const { return offsets_; }
    uint64_t max_offset() const { return offsets_.back(); }

    bool operator==(const GapSignature& other) const { return half_gaps_ == other.half_gaps_; }

private:
    GapSignature() = default;
    std::vector<uint64_t> half_gaps_;
    std::vector<uint64_t> offsets_;
};

struct Multiplet {
    uint64_t base = 0;
    GapSignature signature;

    // base + 2*c_i for each offset, ascending.
    std::vector<uint64_t> elements() const;
};

} // namespace constel
