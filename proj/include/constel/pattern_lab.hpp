// Residue analysis of gap signatures.
//
// For an odd prime q and a signature with offsets c_i, the base residue r
// decides which tuple positions land on multiples of q. When every residue
// class mod q has such a position ("full coverage"), a recurring pattern is
// impossible: any occurrence must place q itself at one of the hit
// positions. A position can host q only if it is the sole hit of its
// residue class and the implied base q - 2*c_i is at least 3.
//
// The candidate bases of an anchored signature are the intersection of the
// satisfiable per-prime constraints; they bound from above where the tuple
// can still sit. A fully covering prime with no viable position stays in
// the report but does not veto an anchor found elsewhere: it proves the
// surviving candidates contain a composite, which primality filtering of
// the materialized tuples establishes anyway. Blocked is the stronger
// verdict that no anchor position survives for any prime.

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "constel/multiplet.hpp"

namespace constel {

struct CoverageReport {
    uint64_t q = 0;
    // Indexed by base residue r in [0, q): positions i with q | (r + 2*c_i).
    std::vector<std::vector<uint32_t>> zero_positions;
    bool full_coverage = false;
};

// q must be an odd prime. q > length is fine; coverage is then never full.
CoverageReport residue_coverage(const GapSignature& sig, uint64_t q);

struct AnchorOption {
    uint32_t position = 0;
    uint64_t base = 0; // q - 2*c_position
};

struct AnchorConstraint {
    uint64_t q = 0;
    std::vector<AnchorOption> options;
};

struct Admissible {};

struct Anchored {
    // One constraint per fully covering prime, ascending in q; options may
    // be empty for primes that cannot host their own anchor.
    std::vector<AnchorConstraint> constraints;
    // Bases satisfying every satisfiable constraint; nonempty, ascending.
    std::vector<uint64_t> candidate_bases;
};

struct Blocked {
    // Smallest fully covering prime; no anchor position survived.
    uint64_t witness_q = 0;
};

using PatternStatus = std::variant<Admissible, Anchored, Blocked>;

const char* pattern_status_label(const PatternStatus& status);

PatternStatus classify_pattern(const GapSignature& sig);

// Candidate tuples of an anchored signature whose members are all prime.
// Admissible and blocked signatures yield an empty list.
std::vector<Multiplet> exceptional_candidates(const GapSignature& sig);

// The p-1 equal half gaps d of a p-tuple p, p+2d, ..., p+2(p-1)d.
// Requires p an odd prime, 3 | d and p !| d.
GapSignature equal_distance_signature(uint64_t p, uint64_t d);

// Coarse mod-3 family of a quartet signature [d1, d2, d3]: which of the
// known-productive congruence shapes it matches, if any.
enum class QuartetFamily : uint8_t {
    induced, // d1 = d2 (mod 3), 3 !| d1, 3 | d3
    new_a,   // d2 = d3 (mod 3), 3 !| d2, 3 | d1
    new_b,   // d1 = d3 (mod 3), 3 !| d1, 3 | d2
    none,
};

const char* quartet_family_label(QuartetFamily f);

// The congruence family and the full residue analysis, side by side. The
// two can disagree (a family match may still be blocked); both verdicts
// are reported, neither corrects the other.
struct QuartetConfig {
    QuartetFamily congruence_rule = QuartetFamily::none;
    PatternStatus analyzer;
};

QuartetConfig quartet_config_status(uint64_t d1, uint64_t d2, uint64_t d3);

// Extensions of a base-3 multiplet by one further prime member at half
// gap d <= d_next_max, ascending in d. Every member of m must be prime.
std::vector<Multiplet> induced_extension(const Multiplet& m, uint64_t d_next_max);

} // namespace constel
