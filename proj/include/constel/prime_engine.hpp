// Primality and prime enumeration backbone.
//
// is_prime() is a deterministic Miller-Rabin test, exact for every 64-bit
// input. PrimeSegment holds the sieve results for one contiguous range,
// one bit per odd number, so a 2^20-slot segment spans 2^21 integers in
// 128 KiB. Ranges anywhere below 2^63 are supported; above base_limit^2
// the segment is finished with Miller-Rabin on the sieve survivors, which
// keeps memory flat at any height.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "constel/errors.hpp"

namespace constel {

// Values (and range endpoints) must stay below this; gap arithmetic on
// accepted inputs then cannot overflow uint64_t.
inline constexpr uint64_t kValueCap = uint64_t{1} << 63;

struct SieveConfig {
    // Odd numbers per segment; one segment covers 2 * segment_slots integers.
    uint64_t segment_slots = uint64_t{1} << 20;
    // sieve_segment() rejects spans wider than this many segments.
    uint64_t max_segments_per_call = 16;
    // Largest base prime kept for marking. Ranges beyond base_limit^2 fall
    // back to Miller-Rabin on the survivors.
    uint64_t base_limit = 1'000'000;

    uint64_t max_span() const { return 2 * segment_slots * max_segments_per_call; }
};

// Deterministic for all n < 2^64 (fixed witness set 2..37).
bool is_prime(uint64_t n) noexcept;

class PrimeSegment {
public:
    // Sieves [lo, hi] inclusive. Throws ConstraintError when hi >= 2^63
    // ("overflow") or when the span exceeds cfg.max_span() ("range too wide").
    static PrimeSegment sieve(uint64_t lo, uint64_t hi, const SieveConfig& cfg = {});

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }
    bool contains(uint64_t n) const { return lo_ <= n && n <= hi_; }

    // Primality of any n in [lo, hi]. Evens answer via the n == 2 case,
    // odds via the bit array.
    bool is_prime(uint64_t n) const;

    // Ascending visit of every prime in [lo, hi], including 2 when covered.
    template <typename Fn>
    void for_each_prime(Fn&& fn) const {
        if (lo_ <= 2 && 2 <= hi_) fn(uint64_t{2});
        for (uint64_t i = 0; i < slot_count_; ++i) {
            if (bit(i)) fn(first_odd_ + 2 * i);
        }
    }

    std::vector<uint64_t> primes() const;

private:
    PrimeSegment(uint64_t lo, uint64_t hi);

    bool bit(uint64_t slot) const {
        return (words_[slot >> 6] >> (slot & 63)) & 1u;
    }
    void clear_bit(uint64_t slot) {
        words_[slot >> 6] &= ~(uint64_t{1} << (slot & 63));
    }

    uint64_t lo_ = 0, hi_ = 0;
    uint64_t first_odd_ = 0;  // smallest odd >= max(lo, 1)
    uint64_t slot_count_ = 0; // odd numbers in [first_odd_, hi]
    std::vector<uint64_t> words_;
};

// Primes in [lo, hi] in ascending order, stitching segments internally.
// Only the cap applies; the span may exceed one sieve call's limit.
void for_each_prime(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& fn,
                    const SieveConfig& cfg = {});

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi, const SieveConfig& cfg = {});

} // namespace constel
