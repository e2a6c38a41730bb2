#include "constel/pattern_lab.hpp"

#include <algorithm>

#include "constel/prime_engine.hpp"

namespace constel {

CoverageReport residue_coverage(const GapSignature& sig, uint64_t q) {
    if (q < 3 || (q & 1) == 0 || !is_prime(q))
        throw ConstraintError("residue coverage needs an odd prime modulus");

    CoverageReport rep;
    rep.q = q;
    rep.zero_positions.assign(q, {});
    const auto& offsets = sig.offsets();
    for (uint32_t i = 0; i < offsets.size(); ++i) {
        // Position i hits zero for the base residue r with r + 2*c_i = 0 (mod q).
        uint64_t r = (q - (2 * (offsets[i] % q)) % q) % q;
        rep.zero_positions[r].push_back(i);
    }
    rep.full_coverage = std::all_of(rep.zero_positions.begin(), rep.zero_positions.end(),
                                    [](const auto& v) { return !v.empty(); });
    return rep;
}

const char* pattern_status_label(const PatternStatus& status) {
    if (std::holds_alternative<Admissible>(status)) return "admissible";
    if (std::holds_alternative<Anchored>(status)) return "anchored";
    return "blocked";
}

PatternStatus classify_pattern(const GapSignature& sig) {
    const auto& offsets = sig.offsets();
    size_t k = sig.length();

    std::vector<AnchorConstraint> constraints;
    for (uint64_t q = 3; q <= k; q += 2) {
        if (!is_prime(q)) continue;
        CoverageReport rep = residue_coverage(sig, q);
        if (!rep.full_coverage) continue;

        AnchorConstraint con{q, {}};
        for (uint32_t i = 0; i < offsets.size(); ++i) {
            if (2 * offsets[i] + 3 > q) continue; // base would drop below 3
            uint64_t base = q - 2 * offsets[i];
            const auto& zeros = rep.zero_positions[base % q];
            if (zeros.size() == 1 && zeros[0] == i) con.options.push_back({i, base});
        }
        constraints.push_back(std::move(con));
    }
    if (constraints.empty()) return Admissible{};

    // Candidate bases: intersection of the satisfiable constraints. A fully
    // covering prime with no viable anchor position is kept in the report
    // but cannot veto another prime's anchor; it only proves the candidate
    // tuple contains a composite, which primality filtering establishes
    // anyway. Blocked means no anchor position survives anywhere.
    std::vector<uint64_t> bases;
    bool seeded = false;
    for (const auto& con : constraints) {
        if (con.options.empty()) continue;
        std::vector<uint64_t> own;
        for (const auto& opt : con.options) own.push_back(opt.base);
        std::sort(own.begin(), own.end());
        if (!seeded) {
            bases = std::move(own);
            seeded = true;
            continue;
        }
        std::vector<uint64_t> keep;
        for (uint64_t b : bases)
            if (std::binary_search(own.begin(), own.end(), b)) keep.push_back(b);
        bases = std::move(keep);
    }
    if (!seeded || bases.empty()) return Blocked{constraints[0].q};
    return Anchored{std::move(constraints), std::move(bases)};
}

std::vector<Multiplet> exceptional_candidates(const GapSignature& sig) {
    PatternStatus st = classify_pattern(sig);
    const auto* anchored = std::get_if<Anchored>(&st);
    if (anchored == nullptr) return {};

    std::vector<Multiplet> out;
    for (uint64_t base : anchored->candidate_bases) {
        Multiplet m{base, sig};
        auto elems = m.elements();
        if (std::all_of(elems.begin(), elems.end(), [](uint64_t e) { return is_prime(e); }))
            out.push_back(std::move(m));
    }
    return out;
}

GapSignature equal_distance_signature(uint64_t p, uint64_t d) {
    if (p < 3 || (p & 1) == 0 || !is_prime(p))
        throw ConstraintError("equal-distance tuples need an odd prime p");
    if (p > kMaxTupleLength) throw ConstraintError("tuple length exceeds the supported cap");
    if (d == 0 || d % 3 != 0) throw ConstraintError("half distance must be a positive multiple of 3");
    if (d % p == 0) throw ConstraintError("half distance must not be divisible by p");
    return GapSignature::from_half_gaps(std::vector<uint64_t>(p - 1, d));
}

const char* quartet_family_label(QuartetFamily f) {
    switch (f) {
        case QuartetFamily::induced: return "induced";
        case QuartetFamily::new_a: return "new_a";
        case QuartetFamily::new_b: return "new_b";
        case QuartetFamily::none: return "none";
    }
    return "?";
}

QuartetConfig quartet_config_status(uint64_t d1, uint64_t d2, uint64_t d3) {
    GapSignature sig = GapSignature::from_half_gaps({d1, d2, d3});

    QuartetFamily family = QuartetFamily::none;
    if (d1 % 3 == d2 % 3 && d1 % 3 != 0 && d3 % 3 == 0) family = QuartetFamily::induced;
    else if (d2 % 3 == d3 % 3 && d2 % 3 != 0 && d1 % 3 == 0) family = QuartetFamily::new_a;
    else if (d1 % 3 == d3 % 3 && d1 % 3 != 0 && d2 % 3 == 0) family = QuartetFamily::new_b;

    return QuartetConfig{family, classify_pattern(sig)};
}

std::vector<Multiplet> induced_extension(const Multiplet& m, uint64_t d_next_max) {
    if (m.base != 3) throw ConstraintError("induced extension starts from a multiplet based at 3");
    auto elems = m.elements();
    for (uint64_t e : elems)
        if (!is_prime(e)) throw ConstraintError("multiplet members must all be prime");

    uint64_t last = elems.back();
    std::vector<Multiplet> out;
    for (uint64_t d = 1; d <= d_next_max; ++d) {
        if (last + 2 * d >= kValueCap) break;
        if (!is_prime(last + 2 * d)) continue;
        std::vector<uint64_t> gaps = m.signature.half_gaps();
        gaps.push_back(d);
        out.push_back(Multiplet{3, GapSignature::from_half_gaps(std::move(gaps))});
    }
    return out;
}

} // namespace constel
