#include "constel/output.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace constel {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<uint64_t> full_distances(const GapSignature& sig) {
    std::vector<uint64_t> out;
    out.reserve(sig.half_gaps().size());
    for (uint64_t d : sig.half_gaps()) out.push_back(2 * d);
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        os << values[i];
    }
    return os.str();
}

std::string join_labels(const std::vector<TwinClassKind>& classes, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (i) os << sep;
        os << class_label(classes[i]);
    }
    return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "jsonl") return Format::jsonl;
    if (name == "csv") return Format::csv;
    throw std::runtime_error("unknown format '" + name + "' (expected table, jsonl or csv)");
}

void RecordWriter::csv_header(const std::string& kind, const std::string& columns) {
    if (headers_done_.insert(kind).second) out_ << columns << "\n";
}

void RecordWriter::twin(const TwinPair& pair, const TwinClassification& cls) {
    uint64_t distance = pair.hi - pair.lo;
    const char* label = class_label(kind_of(cls));
    auto a = param_a(cls);
    bool special = is_special(cls);
    Mod6Form form = mod6_descriptor(pair);

    switch (format_) {
        case Format::jsonl: {
            ordered_json j;
            j["kind"] = "twin";
            j["p"] = pair.lo;
            j["q"] = pair.hi;
            j["distance"] = distance;
            j["class"] = label;
            if (a) j["a"] = *a;
            j["special"] = special;
            j["singlet"] = form.singlet_exception;
            if (!form.singlet_exception) {
                j["rail_lo"] = form.residue_lo;
                j["m"] = form.m;
                j["step"] = form.step;
            }
            j["rail_hi"] = form.residue_hi;
            out_ << j.dump() << "\n";
            break;
        }
        case Format::csv: {
            csv_header("twin", "kind,p,q,distance,class,a,special,singlet,rail_lo,rail_hi,m,step");
            out_ << "twin," << pair.lo << ',' << pair.hi << ',' << distance << ',' << label << ',';
            if (a) out_ << *a;
            out_ << ',' << yesno(special) << ',' << yesno(form.singlet_exception) << ',';
            if (!form.singlet_exception) out_ << int(form.residue_lo);
            out_ << ',' << int(form.residue_hi) << ',';
            if (!form.singlet_exception) out_ << form.m;
            out_ << ',';
            if (!form.singlet_exception) out_ << form.step;
            out_ << "\n";
            break;
        }
        case Format::table: {
            out_ << "twin      p=" << pair.lo << " q=" << pair.hi << " distance=" << distance
                 << " class=" << label;
            if (a) out_ << " a=" << *a;
            if (special) out_ << " special";
            if (form.singlet_exception) out_ << " (3 sits on neither 6m+/-1 rail)";
            else out_ << " m=" << form.m << " step=" << form.step;
            out_ << "\n";
            break;
        }
    }
}

void RecordWriter::special_twin(const TwinPair& pair) {
    uint64_t distance = pair.hi - pair.lo;
    switch (format_) {
        case Format::jsonl: {
            ordered_json j;
            j["kind"] = "special";
            j["p"] = pair.lo;
            j["q"] = pair.hi;
            j["distance"] = distance;
            out_ << j.dump() << "\n";
            break;
        }
        case Format::csv:
            csv_header("special", "kind,p,q,distance");
            out_ << "special," << pair.lo << ',' << pair.hi << ',' << distance << "\n";
            break;
        case Format::table:
            out_ << "special   p=" << pair.lo << " q=" << pair.hi << " distance=" << distance << "\n";
            break;
    }
}

void RecordWriter::tuple(const Multiplet& m, const std::vector<TwinClassKind>& classes) {
    const char* kind = m.signature.length() == 3 ? "triplet" : "multiplet";
    auto elements = m.elements();
    auto distances = full_distances(m.signature);

    switch (format_) {
        case Format::jsonl: {
            ordered_json j;
            j["kind"] = kind;
            j["base"] = m.base;
            j["elements"] = elements;
            j["distances"] = distances;
            ordered_json labels = ordered_json::array();
            for (TwinClassKind c : classes) labels.push_back(class_label(c));
            j["classes"] = labels;
            out_ << j.dump() << "\n";
            break;
        }
        case Format::csv:
            csv_header(kind, "kind,base,elements,distances,classes");
            out_ << kind << ',' << m.base << ',' << join(elements, ' ') << ','
                 << join(distances, ' ') << ',' << join_labels(classes, ' ') << "\n";
            break;
        case Format::table:
            out_ << kind << (m.signature.length() == 3 ? "   " : " ") << "base=" << m.base
                 << " elements=" << join(elements, ',') << " distances=" << join(distances, ',')
                 << " classes=" << join_labels(classes, ',') << "\n";
            break;
    }
}

void RecordWriter::pattern(const GapSignature& sig, const PatternStatus& status) {
    auto distances = full_distances(sig);
    const char* label = pattern_status_label(status);
    const auto* anchored = std::get_if<Anchored>(&status);
    const auto* blocked = std::get_if<Blocked>(&status);

    switch (format_) {
        case Format::jsonl: {
            ordered_json j;
            j["kind"] = "pattern";
            j["distances"] = distances;
            j["status"] = label;
            if (anchored) {
                ordered_json cons = ordered_json::array();
                for (const auto& c : anchored->constraints) {
                    ordered_json jc;
                    jc["q"] = c.q;
                    ordered_json opts = ordered_json::array();
                    for (const auto& o : c.options)
                        opts.push_back({{"position", o.position}, {"base", o.base}});
                    jc["options"] = opts;
                    cons.push_back(jc);
                }
                j["anchors"] = cons;
                j["candidates"] = anchored->candidate_bases;
            }
            if (blocked) j["witness_q"] = blocked->witness_q;
            out_ << j.dump() << "\n";
            break;
        }
        case Format::csv: {
            csv_header("pattern", "kind,distances,status,witness_q,candidates");
            out_ << "pattern," << join(distances, ' ') << ',' << label << ',';
            if (blocked) out_ << blocked->witness_q;
            out_ << ',';
            if (anchored) out_ << join(anchored->candidate_bases, ' ');
            out_ << "\n";
            break;
        }
        case Format::table: {
            out_ << "pattern   distances=" << join(distances, ',') << " status=" << label;
            if (anchored) {
                for (const auto& c : anchored->constraints) {
                    out_ << " [q=" << c.q;
                    for (const auto& o : c.options)
                        out_ << " pos=" << o.position << ":base=" << o.base;
                    out_ << "]";
                }
                out_ << " candidates=" << join(anchored->candidate_bases, ',');
            }
            if (blocked) out_ << " witness_q=" << blocked->witness_q;
            out_ << "\n";
            break;
        }
    }
}

void RecordWriter::count(const CountRecord& rec) {
    auto distances = full_distances(rec.signature);
    switch (format_) {
        case Format::jsonl: {
            ordered_json j;
            j["kind"] = "count";
            j["distances"] = distances;
            j["upto"] = rec.upto;
            j["count"] = rec.count;
            out_ << j.dump() << "\n";
            break;
        }
        case Format::csv:
            csv_header("count", "kind,distances,upto,count");
            out_ << "count," << join(distances, ' ') << ',' << rec.upto << ',' << rec.count << "\n";
            break;
        case Format::table:
            out_ << "count     distances=" << join(distances, ',') << " upto=" << rec.upto
                 << " count=" << rec.count << "\n";
            break;
    }
}

void RecordWriter::verify(const GapSignature& sig, const ExceptionalityReport& report) {
    auto distances = full_distances(sig);
    const char* label = pattern_status_label(report.status);
    switch (format_) {
        case Format::jsonl: {
            ordered_json j;
            j["kind"] = "verify";
            j["distances"] = distances;
            j["upto"] = report.scanned_to;
            j["status"] = label;
            j["violations"] = report.violations.size();
            j["ok"] = report.consistent();
            out_ << j.dump() << "\n";
            break;
        }
        case Format::csv:
            csv_header("verify", "kind,distances,upto,status,violations,ok");
            out_ << "verify," << join(distances, ' ') << ',' << report.scanned_to << ',' << label
                 << ',' << report.violations.size() << ',' << yesno(report.consistent()) << "\n";
            break;
        case Format::table:
            out_ << "verify    distances=" << join(distances, ',') << " upto=" << report.scanned_to
                 << " status=" << label << " violations=" << report.violations.size()
                 << " ok=" << yesno(report.consistent()) << "\n";
            break;
    }
}

} // namespace constel
