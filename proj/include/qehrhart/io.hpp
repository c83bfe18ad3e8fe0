#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/equivariant.hpp"
#include "qehrhart/halgebra.hpp"
#include "qehrhart/modp.hpp"
#include "qehrhart/polytope.hpp"

namespace qeh {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integers beyond 64 bits become decimal strings; non-integers become "p/q" strings.
Json rat_json(const Rat& x);
Rat json_rat(const Json& j);
Json qpoly_json(const QPoly& p);
Json bipoly_json(const BiPoly& p);  // [[tExp, qExp, coef], ...]
Json ratfun_json(const RatFun2& r);  // {"den": [[b,a],...], "num": [...], "text": "..."}

Json record_json(const QEhrhartRecord& r);
Json generation_json(const GenerationReport& r);
Json character_json(const GradedCharacter& c);
Json multipoly_json(const MultiPoly& f, char var = 'y');

// Input files; all throw ParseError with a readable message.
LatticePolytope parse_polytope(const Json& j);  // {"name": str?, "vertices": [[int,...],...]}
Poset parse_poset(const Json& j);               // {"size": n, "covers": [[a,b],...]}
std::vector<GroupElement> parse_group(const Json& j);  // {"elements": [{"id", "matrix"}]}
CharacterTable parse_table(const Json& j);      // {"name", "classes", "class_sizes", "irreps", "values"}
PointLocus parse_locus(const Json& j);          // {"points": [[int,...],...]}
Json read_json_file(const std::filesystem::path& path);

std::string sha256_hex(const std::string& data);

// One JSON object per file, written atomically (temporary file + rename).
class RecordCache {
public:
    explicit RecordCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
    // Flag value if given, otherwise QEH_CACHE_DIR, otherwise no cache.
    static std::optional<RecordCache> from_env(const std::optional<std::string>& flag);
    static std::string key(const Json& canonical_input);
    std::optional<Json> load(const std::string& key) const;
    void store(const std::string& key, const Json& value) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace qeh
