#include "qehrhart/poly.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qeh {

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool grlex_less(const Exponent& a, const Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Exponent> monomials_of_degree(int n, int d) {
    std::vector<Exponent> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponent a(n, 0);
    // lexicographically ascending compositions of d into n parts
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == n - 1) {
            a[i] = rest;
            out.push_back(a);
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            a[i] = k;
            rec(i + 1, rest - k);
        }
    };
    rec(0, d);
    return out;
}

Int exponent_factorial(const Exponent& a) {
    Int r = 1;
    for (int x : a) r *= factorial(static_cast<unsigned>(x));
    return r;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(const Exponent& a, const Rat& c) {
    MultiPoly p(static_cast<int>(a.size()));
    p.add_term(a, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    Exponent a(nvars, 0);
    a.at(i) = 1;
    return monomial(a);
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rat MultiPoly::coeff(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponent& a, const Rat& c) {
    if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const Exponent& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(n_);
    for (const auto& [a, c] : terms_)
        if (total_degree(a) == d) r.terms_.emplace_hint(r.terms_.end(), a, c);
    return r;
}

Rat MultiPoly::eval(const std::vector<long long>& z) const {
    if (static_cast<int>(z.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rat s = 0;
    for (const auto& [a, c] : terms_) {
        Int v = 1;
        for (int i = 0; i < n_; ++i) {
            Int p;
            mpz_pow_ui(p.get_mpz_t(), Int(static_cast<long>(z[i])).get_mpz_t(), static_cast<unsigned long>(a[i]));
            v *= p;
        }
        s += c * Rat(v);
    }
    return s;
}

void MultiPoly::check(const MultiPoly& o) const {
    if (n_ != o.n_ && !terms_.empty() && !o.terms_.empty()) throw std::invalid_argument("variable count mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check(o);
    MultiPoly r = terms_.empty() && n_ == 0 ? MultiPoly(o.n_) : *this;
    if (r.n_ == 0) r.n_ = o.n_;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check(o);
    MultiPoly r(std::max(n_, o.n_));
    Exponent e(r.n_);
    for (const auto& [a, c] : terms_)
        for (const auto& [b, d] : o.terms_) {
            for (int i = 0; i < r.n_; ++i) e[i] = a[i] + b[i];
            r.add_term(e, c * d);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    MultiPoly r(n_);
    if (s == 0) return r;
    for (const auto& [a, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), a, c * s);
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / leading_coeff());
}

MultiPoly MultiPoly::mul_monomial(const Exponent& m, const Rat& s) const {
    MultiPoly r(n_);
    if (s == 0) return r;
    Exponent e(n_);
    for (const auto& [a, c] : terms_) {
        for (int i = 0; i < n_; ++i) e[i] = a[i] + m[i];
        r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    }
    return r;
}

std::string MultiPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << qeh::to_string(it->second);
        for (int i = 0; i < n_; ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << var << (i + 1);
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

Rat apolarity_pair(const MultiPoly& f, const MultiPoly& g) {
    Rat s = 0;
    for (const auto& [a, c] : f.terms()) {
        auto d = g.coeff(a);
        if (d != 0) s += c * d * Rat(exponent_factorial(a));
    }
    return s;
}

MultiPoly parse_multipoly(const std::string& text, int nvars, char var) {
    MultiPoly out(nvars);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> long {
        std::size_t st = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (st == i) throw std::invalid_argument("expected a number in '" + text + "'");
        return std::stol(text.substr(st, i - st));
    };
    skip();
    bool first = true;
    while (i < text.size()) {
        Rat sign = 1;
        skip();
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        Rat coef = sign;
        Exponent e(nvars, 0);
        bool any = false;
        for (;;) {
            skip();
            if (i >= text.size()) break;
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Rat v(number());
                skip();
                if (i < text.size() && text[i] == '/') {
                    ++i;
                    skip();
                    v /= Rat(number());
                }
                coef *= v;
                any = true;
            } else if (c == var) {
                ++i;
                long k = number();
                if (k < 1 || k > nvars) throw std::invalid_argument("variable index out of range in '" + text + "'");
                long p = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    p = number();
                }
                e[k - 1] += static_cast<int>(p);
                any = true;
            } else {
                break;
            }
            skip();
            if (i < text.size() && text[i] == '*') ++i;
        }
        if (!any) throw std::invalid_argument("empty term in '" + text + "'");
        out.add_term(e, coef);
        skip();
    }
    return out;
}

}  // namespace qeh
