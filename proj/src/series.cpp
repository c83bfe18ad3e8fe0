#include "qehrhart/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qeh {

// ---- QPoly ----

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int exponent, const Rat& c) {
    if (exponent < 0) throw std::invalid_argument("QPoly exponent must be >= 0");
    std::vector<Rat> v(static_cast<std::size_t>(exponent) + 1);
    v.back() = c;
    return QPoly(std::move(v));
}

QPoly QPoly::q_int(int n) {
    if (n < 0) throw std::invalid_argument("q-integer of negative n");
    return QPoly(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
}

QPoly QPoly::from_ints(const std::vector<long long>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (auto x : coeffs) v.emplace_back(static_cast<long>(x));
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::eval(const Rat& q) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
    return r;
}

Rat QPoly::at_one() const {
    Rat r = 0;
    for (const auto& x : c_) r += x;
    return r;
}

bool QPoly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return is_integer(x); });
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rat> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x *= s;
    return QPoly(std::move(v));
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < c_.size(); ++e) {
        const Rat& x = c_[e];
        if (x == 0) continue;
        Rat mag = abs(x);
        if (first) {
            if (x < 0) os << "-";
        } else {
            os << (x < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (e == 0 || !unit) os << mag.get_str();
        if (e > 0) {
            if (!unit) os << "*";
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---- TQSeries ----

TQSeries TQSeries::truncate(int order) const {
    if (order > T) throw std::invalid_argument("cannot extend a truncated series");
    TQSeries r(order);
    for (int m = 0; m <= order; ++m) r[m] = (*this)[m];
    return r;
}

std::vector<Rat> TQSeries::at_q_one() const {
    std::vector<Rat> v;
    for (const auto& x : c) v.push_back(x.at_one());
    return v;
}

TQSeries operator+(const TQSeries& a, const TQSeries& b) {
    TQSeries r(std::min(a.T, b.T));
    for (int m = 0; m <= r.T; ++m) r[m] = a[m] + b[m];
    return r;
}

TQSeries operator-(const TQSeries& a, const TQSeries& b) {
    TQSeries r(std::min(a.T, b.T));
    for (int m = 0; m <= r.T; ++m) r[m] = a[m] - b[m];
    return r;
}

TQSeries operator*(const TQSeries& a, const TQSeries& b) {
    TQSeries r(std::min(a.T, b.T));
    for (int i = 0; i <= r.T; ++i)
        for (int j = 0; i + j <= r.T; ++j) r[i + j] += a[i] * b[j];
    return r;
}

TQSeries hadamard(const TQSeries& a, const TQSeries& b) {
    TQSeries r(std::min(a.T, b.T));
    for (int m = 0; m <= r.T; ++m) r[m] = a[m] * b[m];
    return r;
}

// ---- BiPoly ----

BiPoly BiPoly::constant(const Int& c) { return term(0, 0, c); }

BiPoly BiPoly::term(int te, int qe, const Int& c) {
    BiPoly p;
    p.add_term(te, qe, c);
    return p;
}

Int BiPoly::coeff(int te, int qe) const {
    auto it = terms_.find({te, qe});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(int te, int qe, const Int& c) {
    if (c == 0) return;
    auto& slot = terms_[{te, qe}];
    slot += c;
    if (slot == 0) terms_.erase({te, qe});
}

int BiPoly::t_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::t_min() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.first;
}

int BiPoly::q_min() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        m = first ? k.second : std::min(m, k.second);
        first = false;
    }
    return m;
}

int BiPoly::q_max() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        m = first ? k.second : std::max(m, k.second);
        first = false;
    }
    return m;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, v);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, -v);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [k1, v1] : terms_)
        for (const auto& [k2, v2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return r;
}

BiPoly BiPoly::operator*(const Int& s) const {
    BiPoly r;
    if (s == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * s;
    return r;
}

BiPoly BiPoly::inverted() const {
    BiPoly r;
    for (const auto& [k, v] : terms_) r.terms_[{-k.first, -k.second}] = v;
    return r;
}

BiPoly BiPoly::shifted(int te, int qe) const {
    BiPoly r;
    for (const auto& [k, v] : terms_) r.terms_[{k.first + te, k.second + qe}] = v;
    return r;
}

BiPoly BiPoly::truncated_t(int maxT) const {
    BiPoly r;
    for (const auto& [k, v] : terms_)
        if (k.first <= maxT) r.terms_[k] = v;
    return r;
}

std::map<int, Int> BiPoly::at_q_one() const {
    std::map<int, Int> r;
    for (const auto& [k, v] : terms_) r[k.first] += v;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        Int mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        bool bare = k.first == 0 && k.second == 0;
        if (bare || !unit) os << mag.get_str();
        std::string sep = bare || unit ? "" : "*";
        if (k.second != 0) {
            os << sep << "q";
            if (k.second != 1) os << "^" << k.second;
            sep = "*";
        }
        if (k.first != 0) {
            os << sep << "t";
            if (k.first != 1) os << "^" << k.first;
        }
    }
    return os.str();
}

// ---- RatFun2 ----

RatFun2::RatFun2(BiPoly n, std::vector<std::pair<int, int>> d) : num(std::move(n)), den(std::move(d)) {
    for (const auto& f : den)
        if (f.first == 0 && f.second == 0) throw std::invalid_argument("denominator factor (1 - 1) is zero");
    std::sort(den.begin(), den.end());
}

int RatFun2::sum_b() const {
    int s = 0;
    for (const auto& f : den) s += f.first;
    return s;
}

int RatFun2::sum_a() const {
    int s = 0;
    for (const auto& f : den) s += f.second;
    return s;
}

BiPoly RatFun2::den_poly() const {
    BiPoly d = BiPoly::constant(1);
    for (const auto& [b, a] : den) d = d * (BiPoly::constant(1) - BiPoly::term(b, a));
    return d;
}

std::string RatFun2::to_string() const {
    std::ostringstream os;
    os << "(" << num.to_string() << ")/(";
    for (const auto& [b, a] : den) {
        os << "(1 - " << BiPoly::term(b, a).to_string() << ")";
    }
    if (den.empty()) os << "1";
    os << ")";
    return os.str();
}

// ---- expansion and fitting ----

TQSeries expand(const BiPoly& p, int T) {
    TQSeries s(T);
    for (const auto& [k, v] : p.terms()) {
        if (k.first < 0 || k.second < 0) throw std::invalid_argument("expand: negative exponent in numerator");
        if (k.first <= T) s[k.first] += QPoly::monomial(k.second, Rat(v));
    }
    return s;
}

TQSeries expand(const RatFun2& r, int T) {
    TQSeries s = expand(r.num, T);
    for (const auto& [b, a] : r.den) {
        if (b < 1 || a < 0) throw std::invalid_argument("expand: denominator factor needs b >= 1 and a >= 0");
        QPoly qa = QPoly::monomial(a);
        for (int m = b; m <= T; ++m) s[m] += qa * s[m - b];
    }
    return s;
}

bool same_function(const RatFun2& x, const RatFun2& y) {
    return x.num * y.den_poly() == y.num * x.den_poly();
}

namespace {

// Dense integer grid for series arithmetic during fitting and search.
struct Grid {
    int T = 0;
    int Q = 0;  // q exponents 0..Q-1
    std::vector<long long> v;
    long long& at(int t, int q) { return v[static_cast<std::size_t>(t) * Q + q]; }
    long long at(int t, int q) const { return v[static_cast<std::size_t>(t) * Q + q]; }
};

Grid to_grid(const TQSeries& s, int extraQ) {
    int qmax = 0;
    for (const auto& c : s.c) qmax = std::max(qmax, c.degree());
    Grid g{s.T, qmax + 1 + extraQ, {}};
    g.v.assign(static_cast<std::size_t>(g.T + 1) * g.Q, 0);
    for (int t = 0; t <= s.T; ++t) {
        const auto& cs = s[t].coeffs();
        for (std::size_t q = 0; q < cs.size(); ++q) {
            if (!is_integer(cs[q]) || !cs[q].get_num().fits_slong_p())
                throw std::domain_error("series coefficients must be machine-size integers");
            g.at(t, static_cast<int>(q)) = cs[q].get_num().get_si();
        }
    }
    return g;
}

// g <- g * (1 - q^a t^b), in place (descending t so sources are unmodified).
void mul_factor(Grid& g, int b, int a) {
    for (int t = g.T; t >= b; --t)
        for (int q = g.Q - 1; q >= a; --q) {
            long long src = g.at(t - b, q - a);
            if (src == 0) continue;
            long long out;
            if (__builtin_sub_overflow(g.at(t, q), src, &out)) throw std::overflow_error("series fit overflow");
            g.at(t, q) = out;
        }
}

bool tail_zero(const Grid& g, int fromT) {
    for (int t = std::max(fromT, 0); t <= g.T; ++t)
        for (int q = 0; q < g.Q; ++q)
            if (g.at(t, q) != 0) return false;
    return true;
}

BiPoly grid_head(const Grid& g, int maxT) {
    BiPoly p;
    for (int t = 0; t <= std::min(maxT, g.T); ++t)
        for (int q = 0; q < g.Q; ++q)
            if (g.at(t, q) != 0) p.add_term(t, q, Int(static_cast<long>(g.at(t, q))));
    return p;
}

}  // namespace

std::optional<BiPoly> fit_numerator(const TQSeries& s, const std::vector<std::pair<int, int>>& den, int tDegMax) {
    int sumB = 0, sumA = 0;
    for (const auto& [b, a] : den) {
        if (b < 1 || a < 0) throw std::invalid_argument("fit_numerator: factor needs b >= 1 and a >= 0");
        sumB += b;
        sumA += a;
    }
    if (s.T < tDegMax + sumB + 2)
        throw InsufficientTruncation("fit_numerator: need T >= tDegMax + sum(b) + 2");
    Grid g = to_grid(s, sumA);
    for (const auto& [b, a] : den) mul_factor(g, b, a);
    if (!tail_zero(g, tDegMax + 1)) return std::nullopt;
    return grid_head(g, tDegMax);
}

namespace {

struct SearchState {
    const SearchBounds* bounds;
    std::vector<std::pair<int, int>> pairs;  // candidate factors in canonical order
    std::vector<std::pair<int, int>> chosen;
    std::vector<RatFun2> found;
    int sumB = 0;
};

void dfs(SearchState& st, const Grid& g, std::size_t startIdx) {
    for (std::size_t i = startIdx; i < st.pairs.size(); ++i) {
        auto [b, a] = st.pairs[i];
        int sumB = st.sumB + b;
        int cap = st.bounds->tDegMax ? *st.bounds->tDegMax : sumB + st.bounds->tDegSlack;
        cap = std::min(cap, g.T - sumB - 2);
        if (cap < 0) continue;
        Grid next = g;
        mul_factor(next, b, a);
        st.chosen.emplace_back(b, a);
        if (tail_zero(next, cap + 1)) st.found.emplace_back(grid_head(next, cap), st.chosen);
        if (static_cast<int>(st.chosen.size()) < st.bounds->nuMax) {
            int saved = st.sumB;
            st.sumB = sumB;
            dfs(st, next, i);
            st.sumB = saved;
        }
        st.chosen.pop_back();
    }
}

}  // namespace

std::vector<RatFun2> denominator_search(const TQSeries& s, const SearchBounds& bounds) {
    if (bounds.bMax < 1 || bounds.aMax < 0 || bounds.nuMax < 1)
        throw std::invalid_argument("denominator_search: bounds must be positive");
    SearchState st;
    st.bounds = &bounds;
    for (int b = 1; b <= bounds.bMax; ++b)
        for (int a = 0; a <= bounds.aMax; ++a) st.pairs.emplace_back(b, a);
    Grid g = to_grid(s, bounds.nuMax * bounds.aMax);
    dfs(st, g, 0);
    auto key = [](const RatFun2& r) {
        int tot = 0;
        for (const auto& [b, a] : r.den) tot += a + b;
        return std::make_tuple(r.nu(), tot, r.den);
    };
    std::stable_sort(st.found.begin(), st.found.end(),
                     [&](const RatFun2& x, const RatFun2& y) { return key(x) < key(y); });
    return st.found;
}

std::vector<RatFun2> denominator_search(const TQSeries& s, int bMax, int aMax, int nuMax, int tDegMax) {
    SearchBounds b;
    b.bMax = bMax;
    b.aMax = aMax;
    b.nuMax = nuMax;
    b.tDegMax = tDegMax;
    return denominator_search(s, b);
}

// ---- parsing ----

namespace {

class Parser {
public:
    explicit Parser(std::string s) : s_(std::move(s)) {}

    BiPoly expr() {
        skip();
        BiPoly acc;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = get() == '-';
        }
        acc = neg ? -term() : term();
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            BiPoly t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    // Product of factors; each factor (with its power) recorded separately.
    std::vector<BiPoly> factor_list() {
        std::vector<BiPoly> out;
        for (;;) {
            skip();
            char c = peek();
            if (c == '*') {
                get();
                continue;
            }
            if (c != '(' && c != 't' && c != 'q' && !std::isdigit(static_cast<unsigned char>(c))) break;
            BiPoly base = primary();
            int e = exponent();
            for (int i = 0; i < e; ++i) out.push_back(base);
        }
        return out;
    }

    BiPoly term() {
        auto fs = factor_list();
        if (fs.empty()) fail("expected a factor");
        BiPoly r = BiPoly::constant(1);
        for (const auto& f : fs) r = r * f;
        return r;
    }

    bool done() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        return s_[pos_++];
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    BiPoly primary() {
        char c = get();
        if (c == '(') {
            BiPoly e = expr();
            if (get() != ')') fail("expected ')'");
            return e;
        }
        if (c == 't') return BiPoly::term(1, 0);
        if (c == 'q') return BiPoly::term(0, 1);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits(1, c);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            return BiPoly::constant(Int(digits));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    int exponent() {
        if (peek() != '^') return 1;
        get();
        skip();
        std::string digits;
        if (peek() == '{') {
            get();
            while (peek() != '}') digits += get();
            get();
        } else {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        }
        if (digits.empty()) fail("expected exponent");
        return std::stoi(digits);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::size_t top_level_slash(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == '/' && depth == 0) return i;
    }
    return std::string::npos;
}

}  // namespace

BiPoly parse_bipoly(const std::string& text) {
    Parser p(text);
    BiPoly r = p.expr();
    if (!p.done()) p.fail("trailing input");
    return r;
}

RatFun2 parse_ratfun(const std::string& text) {
    auto slash = top_level_slash(text);
    if (slash == std::string::npos) return RatFun2(parse_bipoly(text), {});
    BiPoly num = parse_bipoly(text.substr(0, slash));
    std::string dtext = text.substr(slash + 1);
    // "((1-t)(1-qt))" parses as one product; unwrap it
    Parser p(dtext);
    std::vector<BiPoly> fs = p.factor_list();
    if (!p.done()) p.fail("denominator must be a product of factors");
    if (fs.size() == 1 && fs[0].terms().size() > 2) {
        // a single parenthesized product: re-parse its inside
        std::string inner = dtext;
        auto l = inner.find('('), r = inner.rfind(')');
        Parser q(inner.substr(l + 1, r - l - 1));
        fs = q.factor_list();
        if (!q.done()) q.fail("denominator must be a product of factors");
    }
    std::vector<std::pair<int, int>> den;
    for (const auto& f : fs) {
        const auto& ts = f.terms();
        if (ts.size() == 1 && f.coeff(0, 0) == 1) continue;  // literal 1
        if (ts.size() != 2 || f.coeff(0, 0) != 1) throw std::invalid_argument("factor is not of the form 1 - q^a t^b: " + f.to_string());
        auto other = ts.begin()->first == BiPoly::Key{0, 0} ? std::next(ts.begin()) : ts.begin();
        if (other->second != -1) throw std::invalid_argument("factor is not of the form 1 - q^a t^b: " + f.to_string());
        den.emplace_back(other->first.first, other->first.second);
    }
    return RatFun2(num, den);
}

}  // namespace qeh
