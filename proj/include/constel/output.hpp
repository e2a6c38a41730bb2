// Record output in table, JSONL or CSV form.
//
// All distances leaving this layer are FULL distances (twice the internal
// half gaps). JSONL emits one object per line; CSV emits a header the
// first time each record kind appears; the table form is for humans.

#pragma once

#include <iosfwd>
#include <set>
#include <string>

#include "constel/pattern_lab.hpp"
#include "constel/search.hpp"
#include "constel/twin_taxonomy.hpp"

namespace constel {

enum class Format { table, jsonl, csv };

// Throws std::runtime_error on anything but "table", "jsonl", "csv".
Format parse_format(const std::string& name);

class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void twin(const TwinPair& pair, const TwinClassification& cls);
    void special_twin(const TwinPair& pair);
    // kind "triplet" for three members, "multiplet" beyond; pairs go
    // through twin() instead.
    void tuple(const Multiplet& m, const std::vector<TwinClassKind>& classes);
    void pattern(const GapSignature& sig, const PatternStatus& status);
    void count(const CountRecord& rec);
    void verify(const GapSignature& sig, const ExceptionalityReport& report);

private:
    void csv_header(const std::string& kind, const std::string& columns);

    std::ostream& out_;
    Format format_;
    std::set<std::string> headers_done_;
};

} // namespace constel
