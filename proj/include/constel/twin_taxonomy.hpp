// Classification of generalized twin pairs.
//
// A twin pair is two odd primes p < q at even distance 2D. Every pair
// lands in exactly one of three classes, keyed by D:
//
//   class I    D odd          p = 2a - D,        q = 2a + D
//   class II   D even, 3!|D   p = 3(2a-1) - D,   q = 3(2a-1) + D
//   class III  6 | D          p = (2a+1) - D,    q = (2a+1) + D
//
// Class II additionally contains the special pairs (3, 3+2D), whose
// median 3+D is not of the form 3(2a-1); they carry no parameter a.

#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "constel/multiplet.hpp"
#include "constel/prime_engine.hpp"

namespace constel {

struct TwinPair {
    // Invariants: both odd primes, 3 <= lo < hi. Use make_twin_pair() to
    // build one from untrusted input.
    uint64_t lo = 0, hi = 0;

    uint64_t half_distance() const { return (hi - lo) / 2; }
    uint64_t median() const { return lo + half_distance(); }
    bool operator==(const TwinPair& o) const { return lo == o.lo && hi == o.hi; }
};

// Full validation: ordering, oddness, primality. Throws ConstraintError.
TwinPair make_twin_pair(uint64_t p, uint64_t q);

enum class TwinClassKind : uint8_t { I, II, III };

const char* class_label(TwinClassKind kind);

struct ClassI {
    uint64_t a; // median = 2a
};
struct ClassII {
    // Empty exactly for the special pairs (3, 3+2D); otherwise median = 3(2a-1).
    std::optional<uint64_t> a;
    bool special() const { return !a.has_value(); }
};
struct ClassIII {
    uint64_t a; // median = 2a + 1
};

using TwinClassification = std::variant<ClassI, ClassII, ClassIII>;

// The functions below are pure arithmetic on pairs that already satisfy
// their invariants; they sit on the hot path of whole-range classification
// scans (billions of pairs), hence the inline definitions.

inline TwinClassKind kind_of(const TwinClassification& c) {
    if (std::holds_alternative<ClassI>(c)) return TwinClassKind::I;
    if (std::holds_alternative<ClassII>(c)) return TwinClassKind::II;
    return TwinClassKind::III;
}

inline bool is_special(const TwinClassification& c) {
    const auto* two = std::get_if<ClassII>(&c);
    return two != nullptr && two->special();
}

inline std::optional<uint64_t> param_a(const TwinClassification& c) {
    if (const auto* one = std::get_if<ClassI>(&c)) return one->a;
    if (const auto* two = std::get_if<ClassII>(&c)) return two->a;
    return std::get<ClassIII>(c).a;
}

// The class every pair at half distance D belongs to; D alone decides it.
inline TwinClassKind class_of_distance(uint64_t half_distance) {
    if (half_distance == 0) throw ConstraintError("half distance must be positive");
    if (half_distance & 1) return TwinClassKind::I;
    if (half_distance % 3 != 0) return TwinClassKind::II;
    return TwinClassKind::III;
}

// Assumes the TwinPair invariants hold (primality is the pair's contract);
// still rejects pairs that are structurally broken. O(1) arithmetic.
inline TwinClassification classify_twin(const TwinPair& pair) {
    if (pair.lo < 3 || pair.lo >= pair.hi || (pair.lo & 1) == 0 || (pair.hi & 1) == 0)
        throw ConstraintError("invalid twin pair: members must be odd with 3 <= p < q");
    uint64_t d = pair.half_distance();
    uint64_t median = pair.median();
    if (d & 1) return ClassI{median / 2};
    if (d % 3 != 0) {
        if (pair.lo == 3) return ClassII{std::nullopt};
        return ClassII{(median / 3 + 1) / 2};
    }
    return ClassIII{(median - 1) / 2};
}

// Convenience overload with full validation of untrusted p, q.
TwinClassification classify_twin(uint64_t p, uint64_t q);

namespace detail {

inline TwinPair pair_from_median(uint64_t median, uint64_t d) {
    if (median < d + 3) throw ConstraintError("reconstruction puts the smaller member below 3");
    if (median >= kValueCap - d) throw ConstraintError("reconstruction exceeds the value cap");
    return TwinPair{median - d, median + d};
}

} // namespace detail

// Exact inverse of classify_twin at half distance D. Throws ConstraintError
// when the class is inconsistent with D (parity or divisibility mismatch)
// or the smaller member would fall below 3. Members are NOT re-checked for
// primality; reconstruction is pure arithmetic.
inline TwinPair reconstruct_twin(const TwinClassification& c, uint64_t d) {
    if (const auto* one = std::get_if<ClassI>(&c)) {
        if ((d & 1) == 0) throw ConstraintError("class I needs an odd half distance");
        return detail::pair_from_median(2 * one->a, d);
    }
    if (const auto* two = std::get_if<ClassII>(&c)) {
        if ((d & 1) || d % 3 == 0)
            throw ConstraintError("class II needs an even half distance not divisible by 3");
        if (two->special()) return detail::pair_from_median(3 + d, d);
        return detail::pair_from_median(3 * (2 * two->a.value() - 1), d);
    }
    if (d < 6 || d % 6 != 0) throw ConstraintError("class III needs a half distance divisible by 6");
    return detail::pair_from_median(2 * std::get<ClassIII>(c).a + 1, d);
}

struct TwinParam {
    uint64_t a = 0;
    TwinPair pair;
};

// All a in [1, a_max] whose reconstructed pair at half distance D has two
// prime members, ascending in a. Special pairs carry no a and never appear.
std::vector<TwinParam> enumerate_twin_params(uint64_t half_distance, uint64_t a_max);

// Special pairs (3, 3+2D) for even D with 3!|D, D <= d_max, ascending in D.
std::vector<TwinPair> list_special_twins(uint64_t d_max);

// Position of a pair on the 6m +/- 1 rails. 3 sits on neither rail; a pair
// containing it is flagged and only the fields of the other member hold.
struct Mod6Form {
    int8_t residue_lo = 0; // -1 or +1
    int8_t residue_hi = 0;
    uint64_t m = 0;    // lo = 6m + residue_lo
    uint64_t step = 0; // hi = 6(m + step) + residue_hi
    bool singlet_exception = false;
};

Mod6Form mod6_descriptor(const TwinPair& pair);

// Class labels of each consecutive pair of a multiplet. Validates that the
// base is an odd prime >= 3 and every member is prime.
std::vector<TwinClassKind> class_signature(const Multiplet& m);

} // namespace constel
