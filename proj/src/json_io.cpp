#include "multilat/json_io.hpp"

#include <fstream>

namespace multilat {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(Err::ParseError, what); }

json get(const json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* key) {
  auto arr = get(j, key);
  if (!arr.is_array()) parse_fail(std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : arr) {
    if (!x.is_string()) parse_fail(std::string("'") + key + "' must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

OpTable table_from_json(const json& rows, const Poset& p, const char* key) {
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(p.size()))
    parse_fail(std::string("'") + key + "' must have one row per element");
  OpTable t(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(p.size()))
      parse_fail(std::string("'") + key + "' row " + std::to_string(i) + " is not square");
    for (int j2 = 0; j2 < p.size(); ++j2) {
      const auto& cell = row.at(static_cast<std::size_t>(j2));
      if (!cell.is_string()) parse_fail(std::string("'") + key + "' entries must be labels");
      t.set(i, j2, p.index_of(cell.get<std::string>()));
    }
  }
  return t;
}

json table_to_json(const OpTable& t, const Poset& p) {
  json rows = json::array();
  for (int i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < p.size(); ++j2) row.push_back(p.label(t.at(i, j2)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

Poset poset_from_json(const json& j) {
  try {
    auto elements = string_list(j, "elements");
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
      for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) parse_fail("each cover must be a [lower,upper] pair");
        covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
      }
    }
    return Poset::from_covers(j.value("name", ""), std::move(elements), covers);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

json poset_to_json(const Poset& p) {
  json j;
  j["schema"] = kSchemaVersion;
  j["name"] = p.name();
  j["elements"] = p.labels();
  json covers = json::array();
  for (auto [a, b] : p.cover_pairs()) covers.push_back(json::array({p.label(a), p.label(b)}));
  j["covers"] = std::move(covers);
  return j;
}

Poset load_poset(const std::filesystem::path& path) { return poset_from_json(parse_file(path)); }

Algebra algebra_from_json(const json& j) {
  Algebra a;
  a.poset = poset_from_json(j);
  try {
    if (!j.contains("top")) parse_fail("algebra needs a 'top'");
    a.top = a.poset.index_of(get(j, "top").get<std::string>());
    if (j.contains("bottom") && !j.at("bottom").is_null())
      a.bottom = a.poset.index_of(j.at("bottom").get<std::string>());
    if (j.contains("mul")) a.mul = table_from_json(j.at("mul"), a.poset, "mul");
    if (j.contains("imp")) a.imp = table_from_json(j.at("imp"), a.poset, "imp");
    if (!a.mul && !a.imp) parse_fail("algebra needs 'mul' or 'imp'");
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
  // files may omit the implication; derive it when the product residuates
  // (verification reports the failure otherwise)
  if (a.mul && !a.imp)
    if (auto derived = derive_implication(a.poset, *a.mul)) a.imp = std::move(derived);
  return a;
}

json algebra_to_json(const Algebra& a) {
  json j = poset_to_json(a.poset);
  j["top"] = a.poset.label(a.top);
  if (a.bottom) j["bottom"] = a.poset.label(*a.bottom);
  if (a.mul) j["mul"] = table_to_json(*a.mul, a.poset);
  if (a.imp) j["imp"] = table_to_json(*a.imp, a.poset);
  return j;
}

Algebra load_algebra(const std::filesystem::path& path) {
  return algebra_from_json(parse_file(path));
}

CrispContext context_from_json(const json& j) {
  try {
    std::vector<std::pair<std::string, std::string>> inc;
    for (const auto& c : get(j, "incidence")) {
      if (!c.is_array() || c.size() != 2) parse_fail("incidence entries are [object,attribute]");
      inc.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    }
    return make_context(string_list(j, "objects"), string_list(j, "attributes"), inc);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

json context_to_json(const CrispContext& c) {
  json j;
  j["schema"] = kSchemaVersion;
  j["objects"] = c.objects;
  j["attributes"] = c.attributes;
  json inc = json::array();
  for (std::size_t g = 0; g < c.objects.size(); ++g)
    for (std::size_t m = 0; m < c.attributes.size(); ++m)
      if (c.has(static_cast<int>(g), static_cast<int>(m)))
        inc.push_back(json::array({c.objects[g], c.attributes[m]}));
  j["incidence"] = std::move(inc);
  return j;
}

ValuedFunction function_from_json(const json& j, const Poset& carrier) {
  try {
    ValuedFunction f;
    f.domain = string_list(j, "domain");
    for (const auto& v : get(j, "values")) f.values.push_back(carrier.index_of(v.get<std::string>()));
    if (f.domain.size() != f.values.size()) parse_fail("'values' must parallel 'domain'");
    return f;
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

json function_to_json(const ValuedFunction& f, const Poset& carrier) {
  json j;
  j["domain"] = f.domain;
  json vals = json::array();
  for (int v : f.values) vals.push_back(carrier.label(v));
  j["values"] = std::move(vals);
  return j;
}

namespace {

json resolve_ref(const json& v, const std::filesystem::path& base_dir) {
  if (v.is_string()) {
    std::filesystem::path p = v.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return parse_file(p);
  }
  if (v.is_object()) return v;
  parse_fail("expected a file path or an inline object");
}

}  // namespace

GaloisPair galois_from_json(const json& j, const std::filesystem::path& base_dir) {
  try {
    std::string type = get(j, "type").get<std::string>();
    if (type == "crisp") {
      return GaloisPair::crisp(context_from_json(resolve_ref(get(j, "context"), base_dir)));
    }
    if (type == "residuum-negation") {
      Algebra alg = algebra_from_json(resolve_ref(get(j, "algebra"), base_dir));
      auto domain = string_list(j, "domain");
      ValuedFunction r{domain, {}};
      auto rj = get(j, "r");
      for (const auto& x : domain) {
        if (!rj.contains(x)) parse_fail("'r' must map every domain point");
        r.values.push_back(alg.poset.index_of(rj.at(x).get<std::string>()));
      }
      return GaloisPair::residuum_negation(std::move(alg), std::move(domain), std::move(r));
    }
    if (type == "tables") {
      Algebra a1 = algebra_from_json(resolve_ref(get(j, "algebra1"), base_dir));
      Algebra a2 = algebra_from_json(resolve_ref(get(j, "algebra2"), base_dir));
      auto objects = string_list(j, "objects");
      auto attributes = string_list(j, "attributes");
      auto parse_rows = [&](const char* key, const Poset& carrier, std::size_t arity) {
        std::vector<std::vector<int>> rows;
        for (const auto& row : get(j, key)) {
          std::vector<int> vals;
          for (const auto& v : row) vals.push_back(carrier.index_of(v.get<std::string>()));
          if (vals.size() != arity) parse_fail(std::string("'") + key + "' row arity mismatch");
          rows.push_back(std::move(vals));
        }
        return rows;
      };
      auto phi = parse_rows("phi", a2.poset, attributes.size());
      auto psi = parse_rows("psi", a1.poset, objects.size());
      return GaloisPair::explicit_tables(std::move(a1), std::move(a2), std::move(objects),
                                         std::move(attributes), std::move(phi), std::move(psi));
    }
    parse_fail("unknown galois type '" + type + "'");
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

GaloisPair load_galois(const std::filesystem::path& path) {
  return galois_from_json(parse_file(path), path.parent_path());
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(Err::ParseError, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace multilat
