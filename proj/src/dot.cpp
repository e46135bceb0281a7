#include "multilat/dot.hpp"

#include <sstream>

namespace multilat {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void poset_to_dot(const Poset& p, std::ostream& os) {
  os << "digraph " << quoted(p.name().empty() ? "poset" : p.name()) << " {\n";
  os << "  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) os << "  " << quoted(p.label(i)) << ";\n";
  for (auto [a, b] : p.cover_pairs())
    os << "  " << quoted(p.label(a)) << " -> " << quoted(p.label(b)) << ";\n";
  os << "}\n";
}

void concepts_to_dot(const GaloisPair& pair, const ConceptSystem& sys, std::ostream& os) {
  const Poset& p1 = pair.alg1().poset;
  const Poset& p2 = pair.alg2().poset;
  Poset order = sys.order_poset(p1, "concepts");
  os << "digraph \"concepts\" {\n  rankdir=BT;\n";
  auto tuple = [](const Poset& carrier, const ValuedFunction& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      if (i) s += ",";
      s += carrier.label(f.values[i]);
    }
    return s + ")";
  };
  for (int i = 0; i < sys.size(); ++i) {
    const auto& c = sys.concepts[static_cast<std::size_t>(i)];
    os << "  " << quoted(order.label(i)) << " [label="
       << quoted(order.label(i) + ": " + tuple(p1, c.extent) + " | " + tuple(p2, c.intent))
       << "];\n";
  }
  for (auto [a, b] : order.cover_pairs())
    os << "  " << quoted(order.label(a)) << " -> " << quoted(order.label(b)) << ";\n";
  os << "}\n";
}

std::string dot_string(const Poset& p) {
  std::ostringstream os;
  poset_to_dot(p, os);
  return os.str();
}

}  // namespace multilat
