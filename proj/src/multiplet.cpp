#include "constel/multiplet.hpp"

#include "constel/prime_engine.hpp"

namespace constel {

GapSignature GapSignature::from_half_gaps(std::vector<uint64_t> half_gaps) {
    if (half_gaps.empty()) throw ConstraintError("gap signature needs at least one gap");
    if (half_gaps.size() + 1 > kMaxTupleLength)
        throw ConstraintError("gap signature longer than the supported tuple length");

    GapSignature sig;
    sig.offsets_.reserve(half_gaps.size() + 1);
    sig.offsets_.push_back(0);
    uint64_t c = 0;
    for (uint64_t d : half_gaps) {
        if (d == 0) throw ConstraintError("gap signature entries must be positive");
        c += d;
        if (c >= kValueCap / 2) throw ConstraintError("gap signature offsets overflow the value cap");
        sig.offsets_.push_back(c);
    }
    sig.half_gaps_ = std::move(half_gaps);
    return sig;
}

std::vector<uint64_t> Multiplet::elements() const {
    std::vector<uint64_t> out;
    out.reserve(signature.length());
    for (uint64_t c : signature.offsets()) out.push_back(base + 2 * c);
    return out;
}

} // namespace constel
