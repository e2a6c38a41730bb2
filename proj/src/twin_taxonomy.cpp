#include "constel/twin_taxonomy.hpp"

#include "constel/prime_engine.hpp"

namespace constel {

TwinPair make_twin_pair(uint64_t p, uint64_t q) {
    if (p < 3 || p >= q) throw ConstraintError("twin pair needs 3 <= p < q");
    if ((p & 1) == 0 || (q & 1) == 0) throw ConstraintError("twin pair members must be odd");
    if (q >= kValueCap) throw ConstraintError("twin pair member exceeds the value cap");
    if (!is_prime(p) || !is_prime(q)) throw ConstraintError("twin pair members must both be prime");
    return TwinPair{p, q};
}

const char* class_label(TwinClassKind kind) {
    switch (kind) {
        case TwinClassKind::I: return "I";
        case TwinClassKind::II: return "II";
        case TwinClassKind::III: return "III";
    }
    return "?";
}

TwinClassification classify_twin(uint64_t p, uint64_t q) {
    return classify_twin(make_twin_pair(p, q));
}

std::vector<TwinParam> enumerate_twin_params(uint64_t d, uint64_t a_max) {
    if (d == 0) throw ConstraintError("half distance must be positive");

    TwinClassKind kind = class_of_distance(d);
    std::vector<TwinParam> out;
    for (uint64_t a = 1; a <= a_max; ++a) {
        uint64_t median;
        if (kind == TwinClassKind::I) median = 2 * a;
        else if (kind == TwinClassKind::II) median = 3 * (2 * a - 1);
        else median = 2 * a + 1;
        if (median < d + 3) continue;
        TwinPair pair{median - d, median + d};
        if (is_prime(pair.lo) && is_prime(pair.hi)) out.push_back(TwinParam{a, pair});
    }
    return out;
}

std::vector<TwinPair> list_special_twins(uint64_t d_max) {
    std::vector<TwinPair> out;
    for (uint64_t d = 2; d <= d_max; d += 2) {
        if (d % 3 == 0) continue;
        if (is_prime(3 + 2 * d)) out.push_back(TwinPair{3, 3 + 2 * d});
    }
    return out;
}

Mod6Form mod6_descriptor(const TwinPair& pair) {
    Mod6Form form;
    auto rail = [](uint64_t p) -> std::pair<int8_t, uint64_t> {
        if (p % 6 == 1) return {+1, (p - 1) / 6};
        return {-1, (p + 1) / 6};
    };
    auto [r_hi, m_hi] = rail(pair.hi);
    form.residue_hi = r_hi;
    if (pair.lo == 3) {
        form.singlet_exception = true;
        return form;
    }
    auto [r_lo, m_lo] = rail(pair.lo);
    form.residue_lo = r_lo;
    form.m = m_lo;
    form.step = m_hi - m_lo;
    return form;
}

std::vector<TwinClassKind> class_signature(const Multiplet& m) {
    std::vector<uint64_t> elems = m.elements();
    if (m.base < 3 || (m.base & 1) == 0) throw ConstraintError("multiplet base must be an odd number >= 3");
    for (uint64_t e : elems)
        if (!is_prime(e)) throw ConstraintError("multiplet members must all be prime");

    std::vector<TwinClassKind> out;
    out.reserve(elems.size() - 1);
    for (size_t i = 0; i + 1 < elems.size(); ++i)
        out.push_back(kind_of(classify_twin(TwinPair{elems[i], elems[i + 1]})));
    return out;
}

} // namespace constel
