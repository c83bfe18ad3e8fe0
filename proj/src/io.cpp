#include "qehrhart/io.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace qeh {

namespace {

Json int_json(const Int& x) {
    if (fits_ll(x)) return static_cast<long long>(x.get_si());
    return x.get_str();
}

template <class T>
T get_or_throw(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": bad \"" + key + "\": " + e.what());
    }
}

}  // namespace

Json rat_json(const Rat& x) {
    if (x.get_den() == 1) return int_json(x.get_num());
    return to_string(x);
}

Rat json_rat(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ParseError("expected an integer or a rational string");
}

Json qpoly_json(const QPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat_json(c));
    return a;
}

Json bipoly_json(const BiPoly& p) {
    Json a = Json::array();
    for (const auto& [k, c] : p.terms()) a.push_back(Json::array({k.first, k.second, int_json(c)}));
    return a;
}

Json ratfun_json(const RatFun2& r) {
    Json den = Json::array();
    for (auto [b, a] : r.den) den.push_back(Json::array({b, a}));
    return Json{{"den", den}, {"num", bipoly_json(r.num)}, {"text", r.to_string()}};
}

Json record_json(const QEhrhartRecord& r) {
    Json j;
    j["polytope"] = r.polytope;
    j["vertices"] = r.vertices;
    j["T"] = r.T;
    Json iq = Json::array(), iqi = Json::array();
    for (const auto& p : r.iq) iq.push_back(qpoly_json(p));
    for (const auto& p : r.iq_interior) iqi.push_back(qpoly_json(p));
    j["iq"] = iq;
    j["iqInterior"] = iqi;
    if (r.guessed_E || r.guessed_Ebar) {
        Json g;
        if (r.guessed_E) g = ratfun_json(*r.guessed_E);
        if (r.guessed_Ebar) g["interior"] = ratfun_json(*r.guessed_Ebar);
        j["guess"] = g;
    }
    j["verification"] = Json{{"level", r.verification.to_string()}};
    return j;
}

Json generation_json(const GenerationReport& r) {
    Json j;
    j["m0"] = r.m0;
    j["T"] = r.T;
    j["fullyGenerated"] = r.fully_generated();
    j["status"] = r.status;
    j["missingDims"] = r.missing;
    return j;
}

Json character_json(const GradedCharacter& c) {
    Json per = Json::object();
    for (const auto& id : c.ids) {
        Json a = Json::array();
        for (const auto& p : c.per_element.at(id)) a.push_back(qpoly_json(p));
        per[id] = a;
    }
    return Json{{"elements", c.ids}, {"perElement", per}};
}

Json multipoly_json(const MultiPoly& f, char var) { return f.to_string(var); }

LatticePolytope parse_polytope(const Json& j) {
    auto vs = get_or_throw<std::vector<Point>>(j, "vertices", "polytope");
    if (vs.empty()) throw ParseError("polytope: empty vertex list");
    for (const auto& v : vs)
        if (v.size() != vs[0].size()) throw ParseError("polytope: vertices of different lengths");
    std::string name = j.contains("name") ? get_or_throw<std::string>(j, "name", "polytope") : "";
    try {
        return LatticePolytope(vs, name);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("polytope: ") + e.what());
    }
}

Poset parse_poset(const Json& j) {
    auto n = get_or_throw<int>(j, "size", "poset");
    auto cov = get_or_throw<std::vector<std::pair<int, int>>>(j, "covers", "poset");
    try {
        return Poset(n, cov);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("poset: ") + e.what());
    }
}

std::vector<GroupElement> parse_group(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) throw ParseError("group: missing \"elements\"");
    std::vector<GroupElement> out;
    for (const auto& e : j["elements"])
        out.push_back({get_or_throw<std::string>(e, "id", "group element"), get_or_throw<IntMatrix>(e, "matrix", "group element")});
    if (out.empty()) throw ParseError("group: no elements");
    return out;
}

CharacterTable parse_table(const Json& j) {
    CharacterTable t;
    t.name = j.contains("name") ? get_or_throw<std::string>(j, "name", "character table") : "";
    t.classes = get_or_throw<std::vector<std::string>>(j, "classes", "character table");
    t.class_sizes = get_or_throw<std::vector<long>>(j, "class_sizes", "character table");
    t.irreps = get_or_throw<std::vector<std::string>>(j, "irreps", "character table");
    if (!j.contains("values") || !j["values"].is_array()) throw ParseError("character table: missing \"values\"");
    for (const auto& row : j["values"]) {
        std::vector<Rat> r;
        for (const auto& x : row) r.push_back(json_rat(x));
        t.values.push_back(r);
    }
    try {
        t.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return t;
}

PointLocus parse_locus(const Json& j) {
    auto pts = get_or_throw<std::vector<Point>>(j, "points", "locus");
    if (pts.empty()) throw ParseError("locus: no points");
    for (const auto& p : pts)
        if (p.size() != pts[0].size()) throw ParseError("locus: points of different lengths");
    return PointLocus(static_cast<int>(pts[0].size()), pts);
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::optional<RecordCache> RecordCache::from_env(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return RecordCache(*flag);
    if (const char* env = std::getenv("QEH_CACHE_DIR"); env && *env) return RecordCache(env);
    return std::nullopt;
}

std::string RecordCache::key(const Json& canonical_input) { return sha256_hex(canonical_input.dump()); }

std::optional<Json> RecordCache::load(const std::string& key) const {
    std::ifstream in(dir_ / (key + ".json"));
    if (!in) return std::nullopt;
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error&) {
        return std::nullopt;
    }
}

void RecordCache::store(const std::string& key, const Json& value) const {
    static std::atomic<unsigned long> counter{0};
    std::filesystem::create_directories(dir_);
    std::ostringstream tmpname;
    tmpname << "." << key << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++ << ".tmp";
    const auto tmp = dir_ / tmpname.str();
    {
        std::ofstream out(tmp);
        out << value.dump(1) << "\n";
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

}  // namespace qeh
