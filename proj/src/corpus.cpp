#include "qehrhart/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qeh_corpus_data.hpp"

namespace qeh {

namespace {

using nlohmann::json;

std::vector<CorpusRow> from_json(const std::string& name, std::string_view text) {
    json j = json::parse(text);
    std::vector<CorpusRow> out;
    for (const auto& r : j.at("rows")) {
        CorpusRow row;
        row.id = r.at("id").get<std::string>();
        row.corpus = name;
        row.vertices = r.at("vertices").get<std::vector<Point>>();
        if (r.contains("hstar") && !r["hstar"].is_null()) row.hstar = r["hstar"].get<std::vector<long long>>();
        if (r.contains("form") && !r["form"].is_null()) row.form = r["form"].get<std::string>();
        if (r.contains("denominator")) row.denominator = r["denominator"].get<std::vector<std::pair<int, int>>>();
        if (r.contains("antiblocking_equivalent")) row.antiblocking_equivalent = r["antiblocking_equivalent"].get<bool>();
        row.provenance = r.at("provenance").get<std::string>();
        out.push_back(std::move(row));
    }
    return out;
}

std::string q_int_text(int n, int shift) {
    // q^shift [n]_q
    std::ostringstream os;
    for (int i = 0; i < n; ++i) os << (i ? "+" : "") << "q^" << shift + i;
    return os.str();
}

CorpusRow closed(const std::string& id, const LatticePolytope& p, std::string form) {
    CorpusRow r;
    r.id = id;
    r.corpus = "closedforms";
    r.vertices = p.input_vertices();
    r.form = std::move(form);
    r.provenance = "paper-verified";
    return r;
}

std::vector<CorpusRow> closed_forms() {
    std::vector<CorpusRow> out;
    for (int v = 1; v <= 6; ++v) {
        std::string num = v == 1 ? "1" : "1+t(" + q_int_text(v - 1, 1) + ")";
        out.push_back(closed("segment-" + std::to_string(v), segment(0, v),
                             "(" + num + ")/((1-t)(1-tq^" + std::to_string(v) + "))"));
    }
    for (int n = 1; n <= 4; ++n)
        out.push_back(closed("simplex-" + std::to_string(n - 1), standard_simplex(n),
                             n == 1 ? "1/(1-t)" : "1/((1-t)(1-tq)^" + std::to_string(n - 1) + ")"));
    for (int n = 1; n <= 4; ++n)
        out.push_back(closed("pyramid-simplex-" + std::to_string(n - 1), pyramid(standard_simplex(n)),
                             "1/((1-t)(1-tq)^" + std::to_string(n) + ")"));
    for (int n = 1; n <= 3; ++n) {
        const auto k = std::to_string(n);
        out.push_back(closed("cross-" + k, cross_polytope(n), "(1+qt)^" + k + "/((1-t)(1-q^2t)^" + k + ")"));
    }
    for (int n = 1; n <= 3; ++n) {
        std::string den = "(1-t)";
        for (int i = 1; i <= n; ++i) den += "(1-tq^" + std::to_string(i) + ")";
        out.push_back(closed("cube-" + std::to_string(n), cube(n), "(" + carlitz_numerator(n) + ")/(" + den + ")"));
    }
    out.push_back(closed("reeve-1", reeve(1), "1/((1-t)(1-tq)^3)"));
    out.push_back(closed("reeve-2", reeve(2), "(1+qt)(1+q^2t^2)(1+qt+q^2t^2)/((1-t)(1-qt)(1-q^3t^2)(1-q^4t^3))"));
    return out;
}

}  // namespace

std::string carlitz_numerator(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    std::map<std::pair<int, int>, int> count;
    do {
        int des = 0, maj = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] > w[i + 1]) {
                ++des;
                maj += i + 1;
            }
        ++count[{des, maj}];
    } while (std::next_permutation(w.begin(), w.end()));
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : count) {
        if (!first) os << "+";
        first = false;
        os << c << "t^" << k.first << "q^" << k.second;
    }
    return os.str();
}

std::vector<std::string> corpus_names() { return {"fig1", "fig2", "fig3", "closedforms", "extradata"}; }

std::vector<CorpusRow> corpus(const std::string& name) {
    if (name == "closedforms") return closed_forms();
    for (const auto& [n, text] : detail::kCorpusFiles)
        if (n == name) return from_json(name, text);
    throw std::invalid_argument("unknown corpus '" + name + "'");
}

std::optional<CorpusRow> corpus_row(const std::string& id) {
    for (const auto& name : corpus_names())
        for (auto& r : corpus(name))
            if (r.id == id) return r;
    return std::nullopt;
}

}  // namespace qeh
