#include "constel/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace constel {

namespace {

void validate_job(const SearchJob& job, const SearchOptions& opts) {
    if (job.lo < 3) throw ConstraintError("search bases start at 3");
    if (job.lo > job.hi) throw ConstraintError("search range is empty: lo > hi");
    if (job.hi > opts.scan_cap) throw ConstraintError("search range exceeds the scan cap");
    uint64_t span = 2 * job.signature.max_offset();
    if (job.hi >= kValueCap - span)
        throw ConstraintError("signature offsets push elements past the value cap");
    if (span > (opts.sieve.max_segments_per_call - 1) * 2 * opts.sieve.segment_slots)
        throw ConstraintError("signature offsets too wide for the configured segment size");
}

// Bases in [seg_lo, seg_hi] whose tuple is prime; the sieve window is
// extended by the signature span.
void scan_segment(const GapSignature& sig, uint64_t seg_lo, uint64_t seg_hi,
                  const SieveConfig& cfg, std::vector<Multiplet>& out) {
    uint64_t span = 2 * sig.max_offset();
    PrimeSegment window = PrimeSegment::sieve(seg_lo, seg_hi + span, cfg);
    const auto& offsets = sig.offsets();
    window.for_each_prime([&](uint64_t b) {
        if (b < 3 || b > seg_hi) return;
        for (size_t i = 1; i < offsets.size(); ++i)
            if (!window.is_prime(b + 2 * offsets[i])) return;
        out.push_back(Multiplet{b, sig});
    });
}

} // namespace

std::vector<Multiplet> find_occurrences(const SearchJob& job, const SearchOptions& opts) {
    validate_job(job, opts);

    uint64_t span = 2 * opts.sieve.segment_slots;
    uint64_t n_segments = (job.hi - job.lo) / span + 1;
    auto segment_bounds = [&](uint64_t idx) {
        uint64_t s_lo = job.lo + idx * span;
        uint64_t s_hi = (job.hi - s_lo >= span) ? s_lo + span - 1 : job.hi;
        return std::pair{s_lo, s_hi};
    };

    std::vector<std::vector<Multiplet>> per_segment(n_segments);
    unsigned workers = std::max(1u, job.parallelism);
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, n_segments));

    if (workers == 1) {
        for (uint64_t i = 0; i < n_segments; ++i) {
            auto [s_lo, s_hi] = segment_bounds(i);
            scan_segment(job.signature, s_lo, s_hi, opts.sieve, per_segment[i]);
        }
    } else {
        std::atomic<uint64_t> next{0};
        auto work = [&] {
            for (;;) {
                uint64_t i = next.fetch_add(1);
                if (i >= n_segments) return;
                auto [s_lo, s_hi] = segment_bounds(i);
                scan_segment(job.signature, s_lo, s_hi, opts.sieve, per_segment[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<Multiplet> out;
    for (auto& chunk : per_segment)
        for (auto& m : chunk) out.push_back(std::move(m));
    return out;
}

std::vector<Multiplet> find_equal_ap(uint32_t length, uint64_t half_step, uint64_t lo, uint64_t hi,
                                     unsigned parallelism, const SearchOptions& opts) {
    if (length < 3) throw ConstraintError("progressions need at least 3 members");
    if (half_step == 0) throw ConstraintError("half step must be positive");
    GapSignature sig = GapSignature::from_half_gaps(std::vector<uint64_t>(length - 1, half_step));
    return find_occurrences(SearchJob{std::move(sig), lo, hi, parallelism}, opts);
}

std::vector<CountRecord> count_occurrences(const GapSignature& sig, uint64_t n, uint32_t buckets,
                                           unsigned parallelism, const SearchOptions& opts) {
    if (buckets == 0) throw ConstraintError("bucket count must be positive");
    if (n < 3) throw ConstraintError("count range must reach at least 3");

    auto occurrences = find_occurrences(SearchJob{sig, 3, n, parallelism}, opts);

    std::vector<CountRecord> out;
    out.reserve(buckets);
    size_t consumed = 0;
    for (uint32_t b = 1; b <= buckets; ++b) {
        // Evenly spaced boundaries; the last one lands exactly on n.
        uint64_t bound = (b == buckets)
            ? n
            : 3 + static_cast<uint64_t>(static_cast<unsigned __int128>(n - 3) * b / buckets);
        while (consumed < occurrences.size() && occurrences[consumed].base <= bound) ++consumed;
        out.push_back(CountRecord{sig, bound, consumed});
    }
    return out;
}

ExceptionalityReport verify_exceptionality(const GapSignature& sig, uint64_t hi,
                                           unsigned parallelism, const SearchOptions& opts) {
    PatternStatus status = classify_pattern(sig);
    if (std::holds_alternative<Admissible>(status))
        throw ConstraintError("signature is admissible; exceptionality does not apply");

    std::vector<uint64_t> allowed;
    if (const auto* anchored = std::get_if<Anchored>(&status)) allowed = anchored->candidate_bases;

    ExceptionalityReport report{std::move(status), {}, hi};
    for (auto& occ : find_occurrences(SearchJob{sig, 3, hi, parallelism}, opts)) {
        if (!std::binary_search(allowed.begin(), allowed.end(), occ.base))
            report.violations.push_back(std::move(occ));
    }
    return report;
}

std::optional<uint64_t> min_anchored_distance(uint64_t p, uint64_t d_max) {
    if (p < 5 || !is_prime(p)) throw ConstraintError("anchored distances need a prime p >= 5");
    if (p > kMaxTupleLength) throw ConstraintError("tuple length exceeds the supported cap");
    if (d_max >= (kValueCap - p) / (2 * (p - 1)))
        throw ConstraintError("distance bound pushes elements past the value cap");

    for (uint64_t d = 3; d <= d_max; d += 3) {
        if (d % p == 0) continue;
        bool all_prime = true;
        for (uint64_t i = 1; i < p && all_prime; ++i)
            all_prime = is_prime(p + 2 * i * d);
        if (all_prime) return d;
    }
    return std::nullopt;
}

} // namespace constel
