#pragma once
// Degreewise normal forms modulo a homogeneous reduced Groebner basis.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qehrhart/poly.hpp"

namespace qeh::detail {

template <class F>
struct TopGen {
    Exponent lead;                                // monic leading monomial
    std::vector<std::pair<Exponent, F>> tail;     // same degree, standard monomials
};

template <class F>
struct DegreeNF {
    std::vector<Exponent> mons;      // grlex ascending
    std::vector<int> std_pos;        // position among std_mons, or -1
    std::vector<Exponent> std_mons;  // grlex ascending
    std::vector<std::vector<F>> nf;  // coefficients of NF(mons[i]) over std_mons
};

// x^a for nonstandard a reduces by the first generator whose leading monomial divides it;
// every monomial it produces is grlex-smaller, so one ascending pass suffices.
template <class F>
DegreeNF<F> degree_nf(int n, int d, const std::vector<Exponent>& standard, const std::vector<TopGen<F>>& gens,
                      const F& zero, const F& one) {
    DegreeNF<F> t;
    t.mons = monomials_of_degree(n, d);
    std::map<Exponent, std::size_t> where;
    for (std::size_t i = 0; i < t.mons.size(); ++i) where[t.mons[i]] = i;
    for (const auto& s : standard)
        if (total_degree(s) == d) t.std_mons.push_back(s);
    std::map<Exponent, int> spos;
    for (std::size_t j = 0; j < t.std_mons.size(); ++j) spos[t.std_mons[j]] = static_cast<int>(j);
    const std::size_t k = t.std_mons.size();
    t.std_pos.assign(t.mons.size(), -1);
    t.nf.assign(t.mons.size(), std::vector<F>(k, zero));
    for (std::size_t i = 0; i < t.mons.size(); ++i) {
        const Exponent& a = t.mons[i];
        auto it = spos.find(a);
        if (it != spos.end()) {
            t.std_pos[i] = it->second;
            t.nf[i][it->second] = one;
            continue;
        }
        if (k == 0) continue;
        const TopGen<F>* g = nullptr;
        for (const auto& cand : gens)
            if (total_degree(cand.lead) <= d && divides(cand.lead, a)) {
                g = &cand;
                break;
            }
        if (!g) throw std::logic_error("nonstandard monomial without a reducer");
        Exponent shift(n), b(n);
        for (int v = 0; v < n; ++v) shift[v] = a[v] - g->lead[v];
        for (const auto& [s, c] : g->tail) {
            for (int v = 0; v < n; ++v) b[v] = s[v] + shift[v];
            const auto& src = t.nf[where.at(b)];
            for (std::size_t j = 0; j < k; ++j) t.nf[i][j] -= c * src[j];
        }
    }
    return t;
}

}  // namespace qeh::detail
