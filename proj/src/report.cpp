#include "eulerq/report.hpp"

#include <iomanip>

namespace eulerq {

nlohmann::ordered_json to_json(const ComplexityReport& report) {
    nlohmann::ordered_json seq;
    seq["p"] = report.sequence.p;
    seq["r"] = report.sequence.r;
    seq["kind"] = report.sequence.kind;
    seq["I"] = report.sequence.index_set;

    nlohmann::ordered_json out;
    out["sequence"] = std::move(seq);
    out["lc"] = report.lc;
    out["method"] = std::string(to_string(report.method));
    out["kerror"] = nlohmann::ordered_json::array();
    for (const auto& e : report.kerror) {
        nlohmann::ordered_json entry;
        entry["k"] = e.k;
        entry["lc"] = e.lc;
        entry["exact"] = e.exact;
        out["kerror"].push_back(std::move(entry));
    }
    return out;
}

void render_text(std::ostream& out, const ComplexityReport& report) {
    const auto& s = report.sequence;
    out << "sequence  p=" << s.p << " r=" << s.r << " kind=" << s.kind;
    if (!s.index_set.empty()) {
        out << " I={";
        for (std::size_t i = 0; i < s.index_set.size(); ++i) out << (i ? "," : "") << s.index_set[i];
        out << '}';
    }
    out << "\nlc        " << report.lc << "\nmethod    " << to_string(report.method) << '\n';
    if (!report.kerror.empty()) {
        out << std::setw(6) << "k" << std::setw(8) << "lc_k" << "  exact\n";
        for (const auto& e : report.kerror)
            out << std::setw(6) << e.k << std::setw(8) << e.lc << "  " << (e.exact ? "yes" : "no") << '\n';
    }
    for (const auto& note : report.notes) out << "# " << note << '\n';
}

} // namespace eulerq
