#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "multilat/concepts.hpp"

namespace multilat {

inline constexpr int kSchemaVersion = 1;

// File formats (all UTF-8; "bot"/"top" are accepted aliases for the Unicode
// bound labels and are normalized on load):
//   poset:    {"schema":1,"name":...,"elements":[...],"covers":[[lo,hi],...]}
//   algebra:  poset fields + "top", optional "bottom", "mul" ([[label]] rows
//             in element order), optional "imp"
//   context:  {"objects":[...],"attributes":[...],"incidence":[[g,m],...]}
//   function: {"domain":[...],"values":[...]}
//   galois:   {"type":"crisp","context":<path|inline>}
//           | {"type":"residuum-negation","algebra":<path|inline>,
//              "domain":[...],"r":{x:element,...}}
//           | {"type":"tables","algebra1":...,"algebra2":...,"objects":[...],
//              "attributes":[...],"phi":[[label]...],"psi":[[label]...]}
//             phi row k is the value tuple of the function of rank k
//             (big-endian in domain order).

nlohmann::json parse_file(const std::filesystem::path& path);

Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);
Poset load_poset(const std::filesystem::path& path);

Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);
Algebra load_algebra(const std::filesystem::path& path);

CrispContext context_from_json(const nlohmann::json& j);
nlohmann::json context_to_json(const CrispContext& c);

ValuedFunction function_from_json(const nlohmann::json& j, const Poset& carrier);
nlohmann::json function_to_json(const ValuedFunction& f, const Poset& carrier);

/// base_dir resolves string file references inside the pair description.
GaloisPair galois_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
GaloisPair load_galois(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace multilat
