#include "hodge/report.hpp"

#include <iomanip>
#include <sstream>

namespace hodge {

namespace {

Json pages_json(const std::vector<std::map<std::pair<int, int>, int>>& pages) {
    Json out = Json::array();
    for (int r = 1; r <= (int)pages.size(); ++r) {
        Json entries = Json::array();
        for (const auto& [pq, d] : pages[r - 1])
            entries.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", d}});
        out.push_back({{"r", r}, {"entries", entries}});
    }
    return out;
}

}  // namespace

Json to_json(const SSReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["r_stab"] = rep.r_stab;
    j["pages"] = pages_json(rep.pages);
    j["abutment"] = rep.abutment;
    j["derham_homology"] = rep.derham_homology;
    return j;
}

Json to_json(const IndependenceReport& rep) {
    Json j;
    j["shift"] = rep.shift;
    j["verdict"] = rep.verdict;
    j["pages_match"] = rep.pages_match;
    j["abutment_match"] = rep.abutment_match;
    j["e1_match"] = rep.e1_match;
    j["psi_checked"] = rep.psi_checked;
    if (rep.psi_checked) {
        j["psi_iso"] = rep.psi_iso;
        j["psi_iso_from_page"] = rep.psi_iso_from_page;
    }
    if (!rep.first_mismatch.empty()) j["first_mismatch"] = rep.first_mismatch;
    j["a"] = to_json(rep.report_a);
    j["b"] = to_json(rep.report_b);
    return j;
}

namespace {

std::string render_page(const std::map<std::pair<int, int>, int>& table, int r) {
    int pmax = 0, qmax = 0;
    for (const auto& [pq, d] : table) {
        pmax = std::max(pmax, pq.first);
        qmax = std::max(qmax, pq.second);
    }
    std::ostringstream os;
    os << "E_" << r << ":\n";
    if (table.empty()) {
        os << "  (zero)\n";
        return os.str();
    }
    for (int q = qmax; q >= 0; --q) {
        os << "  q=" << q << " |";
        for (int p = 0; p <= pmax; ++p) {
            auto it = table.find({p, q});
            os << std::setw(4) << (it == table.end() ? "." : std::to_string(it->second));
        }
        os << "\n";
    }
    os << "       ";
    for (int p = 0; p <= pmax; ++p) os << std::setw(4) << ("p=" + std::to_string(p));
    os << "\n";
    return os.str();
}

std::string render_dims(const char* label, const std::vector<int>& v) {
    std::ostringstream os;
    os << label << ":";
    for (int x : v) os << " " << x;
    os << "\n";
    return os.str();
}

}  // namespace

std::string render_tables(const SSReport& rep) {
    std::ostringstream os;
    os << render_page(rep.page(1), 1);
    os << render_page(rep.page(2), 2);
    if (rep.infinity() != rep.page(2)) os << render_page(rep.infinity(), rep.r_stab);
    os << "E_infinity = E_" << (rep.infinity() == rep.page(2) ? 2 : rep.r_stab) << "\n";
    os << render_dims("H^m(Tot)", rep.abutment);
    os << render_dims("H^dR_i", rep.derham_homology);
    return os.str();
}

std::string render_comparison(const IndependenceReport& rep) {
    std::ostringstream os;
    os << "shift: (" << rep.shift << "," << rep.shift << ")\n";
    os << "pages (r >= 2): " << (rep.pages_match ? "match" : "MISMATCH") << "\n";
    os << "abutment (degree shift " << 2 * rep.shift << "): "
       << (rep.abutment_match ? "match" : "MISMATCH") << "\n";
    os << "E_1 (informational): " << (rep.e1_match ? "match" : "differ") << "\n";
    if (rep.psi_checked)
        os << "psi chain map: " << (rep.psi_iso ? "isomorphism from page " : "NOT iso; iso from page ")
           << rep.psi_iso_from_page << "\n";
    if (!rep.first_mismatch.empty()) os << "first mismatch: " << rep.first_mismatch << "\n";
    os << "verdict: " << (rep.verdict ? "independent (shift verified)" : "FAILED") << "\n";
    return os.str();
}

EmbeddingSpec spec_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("generators"))
        throw input_error("input document must contain \"n\" and \"generators\"");
    if (!doc["n"].is_number_integer()) throw input_error("\"n\" must be an integer");
    int n = doc["n"].get<int>();
    if (!doc["generators"].is_array()) throw input_error("\"generators\" must be an array");
    std::vector<MultiDegree> gens;
    for (const Json& g : doc["generators"]) {
        if (!g.is_array()) throw input_error("each generator must be an array of exponents");
        MultiDegree m;
        for (const Json& e : g) {
            if (!e.is_number_integer() || e.get<int>() < 0)
                throw input_error("exponents must be nonnegative integers");
            m.push_back(e.get<int>());
        }
        gens.push_back(std::move(m));
    }
    return EmbeddingSpec(n, std::move(gens));
}

}  // namespace hodge
