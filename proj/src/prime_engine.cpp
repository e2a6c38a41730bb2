#include "constel/prime_engine.hpp"

#include <algorithm>
#include <cmath>

namespace constel {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Returns true when a proves n composite. n odd, n > a.
bool witness(uint64_t a, uint64_t n, uint64_t d, int r) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

uint64_t integer_sqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd base primes up to at least `limit`, grown monotonically per thread.
const std::vector<uint32_t>& odd_base_primes(uint32_t limit) {
    thread_local std::vector<uint32_t> primes;
    thread_local uint32_t sieved_to = 0;
    if (limit <= sieved_to) return primes;

    uint32_t target = std::max<uint32_t>(limit, 1u << 10);
    std::vector<bool> composite(target + 1, false);
    for (uint32_t p = 3; static_cast<uint64_t>(p) * p <= target; p += 2) {
        if (composite[p]) continue;
        for (uint64_t q = static_cast<uint64_t>(p) * p; q <= target; q += 2 * p)
            composite[static_cast<uint32_t>(q)] = true;
    }
    primes.clear();
    for (uint32_t p = 3; p <= target; p += 2)
        if (!composite[p]) primes.push_back(p);
    sieved_to = target;
    return primes;
}

} // namespace

bool is_prime(uint64_t n) noexcept {
    if (n < 2) return false;
    for (uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;

    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : kWitnesses) {
        if (witness(a, n, d, r)) return false;
    }
    return true;
}

PrimeSegment::PrimeSegment(uint64_t lo, uint64_t hi) : lo_(lo), hi_(hi) {
    uint64_t start = std::max<uint64_t>(lo, 1);
    first_odd_ = start | 1;
    slot_count_ = first_odd_ > hi ? 0 : (hi - first_odd_) / 2 + 1;
    words_.assign((slot_count_ + 63) / 64, ~uint64_t{0});
}

PrimeSegment PrimeSegment::sieve(uint64_t lo, uint64_t hi, const SieveConfig& cfg) {
    if (lo > hi) throw ConstraintError("sieve range is empty: lo > hi");
    if (hi >= kValueCap) throw ConstraintError("sieve range overflows the 2^63 value cap");
    if (hi - lo > cfg.max_span()) throw ConstraintError("sieve range too wide for one segment call");

    PrimeSegment seg(lo, hi);
    if (seg.slot_count_ == 0) return seg;

    // 1 is odd but not prime.
    if (seg.first_odd_ == 1) seg.clear_bit(0);

    uint64_t root = integer_sqrt(hi);
    bool need_mr = root > cfg.base_limit;
    uint64_t mark_limit = need_mr ? cfg.base_limit : root;

    if (mark_limit >= 3) {
        const auto& bases = odd_base_primes(static_cast<uint32_t>(mark_limit));
        for (uint32_t p32 : bases) {
            if (p32 > mark_limit) break;
            uint64_t p = p32;
            uint64_t start = std::max(p * p, ((seg.first_odd_ + p - 1) / p) * p);
            if ((start & 1) == 0) start += p;
            for (uint64_t m = start; m <= hi; m += 2 * p)
                seg.clear_bit((m - seg.first_odd_) / 2);
        }
    }

    if (need_mr) {
        for (uint64_t i = 0; i < seg.slot_count_; ++i) {
            if (seg.bit(i) && !constel::is_prime(seg.first_odd_ + 2 * i))
                seg.clear_bit(i);
        }
    }
    return seg;
}

bool PrimeSegment::is_prime(uint64_t n) const {
    if (!contains(n)) throw ConstraintError("query outside the sieved segment");
    if (n == 2) return true;
    if (n < 2 || (n & 1) == 0) return false;
    return bit((n - first_odd_) / 2);
}

std::vector<uint64_t> PrimeSegment::primes() const {
    std::vector<uint64_t> out;
    for_each_prime([&](uint64_t p) { out.push_back(p); });
    return out;
}

void for_each_prime(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& fn,
                    const SieveConfig& cfg) {
    if (lo > hi) throw ConstraintError("prime range is empty: lo > hi");
    if (hi >= kValueCap) throw ConstraintError("prime range overflows the 2^63 value cap");

    uint64_t span = 2 * cfg.segment_slots;
    uint64_t cur = lo;
    for (;;) {
        uint64_t end = (hi - cur >= span) ? cur + span - 1 : hi;
        PrimeSegment seg = PrimeSegment::sieve(cur, end, cfg);
        seg.for_each_prime(fn);
        if (end == hi) break;
        cur = end + 1;
    }
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi, const SieveConfig& cfg) {
    std::vector<uint64_t> out;
    for_each_prime(lo, hi, [&](uint64_t p) { out.push_back(p); }, cfg);
    return out;
}

} // namespace constel
