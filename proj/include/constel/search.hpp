// Range scanning for gap signatures.
//
// A scan sieves the base range in segments; each segment is extended past
// its end by the signature's span so every element lookup stays inside the
// one bit array. Segments are claimed by workers dynamically but results
// are keyed by segment index and concatenated in order, so output never
// depends on the worker count.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "constel/multiplet.hpp"
#include "constel/pattern_lab.hpp"
#include "constel/prime_engine.hpp"

namespace constel {

struct SearchOptions {
    SieveConfig sieve;
    // Base ranges must end at or below this; leaves headroom for offsets.
    uint64_t scan_cap = uint64_t{1} << 62;
};

struct SearchJob {
    GapSignature signature;
    uint64_t lo = 3;
    uint64_t hi = 3;
    unsigned parallelism = 1;
};

// Every base in [lo, hi] whose full tuple is prime, ascending.
std::vector<Multiplet> find_occurrences(const SearchJob& job, const SearchOptions& opts = {});

// Prime arithmetic progressions of the given length and common difference
// 2*half_step with base in [lo, hi].
std::vector<Multiplet> find_equal_ap(uint32_t length, uint64_t half_step, uint64_t lo, uint64_t hi,
                                     unsigned parallelism = 1, const SearchOptions& opts = {});

struct CountRecord {
    GapSignature signature;
    uint64_t upto = 0;  // bucket upper bound on the base
    uint64_t count = 0; // occurrences with base <= upto, cumulative
};

std::vector<CountRecord> count_occurrences(const GapSignature& sig, uint64_t n, uint32_t buckets,
                                           unsigned parallelism = 1, const SearchOptions& opts = {});

struct ExceptionalityReport {
    PatternStatus status;
    // Occurrences whose base is not an anchored candidate. Always expected
    // empty; anything here means the analyzer and the scan disagree, i.e.
    // an implementation bug.
    std::vector<Multiplet> violations;
    uint64_t scanned_to = 0;

    bool consistent() const { return violations.empty(); }
};

// Requires an Anchored or Blocked signature; throws on Admissible ones.
ExceptionalityReport verify_exceptionality(const GapSignature& sig, uint64_t hi,
                                           unsigned parallelism = 1, const SearchOptions& opts = {});

// Smallest d <= d_max with 3 | d, p !| d whose equal-distance p-tuple
// p, p+2d, ..., p+2(p-1)d is all prime; nullopt when none exists.
// Requires p >= 5 prime and tuple elements below the value cap.
std::optional<uint64_t> min_anchored_distance(uint64_t p, uint64_t d_max);

} // namespace constel
