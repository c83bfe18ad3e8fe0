#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qehrhart/polytope.hpp"

namespace qeh {

struct CorpusRow {
    std::string id;
    std::string corpus;
    std::vector<Point> vertices;
    std::optional<std::vector<long long>> hstar;
    std::optional<std::string> form;                              // printed rational form
    std::optional<std::vector<std::pair<int, int>>> denominator;  // (b, a) when only the denominator is printed
    std::optional<bool> antiblocking_equivalent;
    std::string provenance;  // "paper-verified" or "paper-guess"
    LatticePolytope polytope() const { return LatticePolytope(vertices, id); }
};

// fig1, fig2, fig3, extradata (embedded data files) and closedforms (generated families).
std::vector<std::string> corpus_names();
std::vector<CorpusRow> corpus(const std::string& name);
std::optional<CorpusRow> corpus_row(const std::string& id);

// sum over S_n of t^des q^maj, as a printable numerator
std::string carlitz_numerator(int n);

}  // namespace qeh
