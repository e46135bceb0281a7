#include "multilat/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace multilat {

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::optional<int> residual_of(const Poset& p, const OpTable& mul, int a, int b) {
  const int n = p.size();
  std::vector<int> sat;
  for (int c = 0; c < n; ++c)
    if (p.leq(mul.at(a, c), b)) sat.push_back(c);
  for (int m : sat) {
    bool greatest = true;
    for (int s : sat)
      if (!p.leq(s, m)) { greatest = false; break; }
    if (greatest) return m;
  }
  return std::nullopt;
}

std::optional<OpTable> derive_implication(const Poset& p, const OpTable& mul,
                                          std::pair<int, int>* first_failure) {
  const int n = p.size();
  OpTable imp(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto r = residual_of(p, mul, a, b);
      if (!r) {
        if (first_failure) *first_failure = {a, b};
        return std::nullopt;
      }
      imp.set(a, b, *r);
    }
  return imp;
}

namespace {

void require_shape(const Algebra& alg) {
  const int n = alg.poset.size();
  if (alg.top < 0 || alg.top >= n) fail(Err::ShapeMismatch, "top is not an element");
  if (alg.bottom && (*alg.bottom < 0 || *alg.bottom >= n))
    fail(Err::ShapeMismatch, "bottom is not an element");
  for (const auto* t : {&alg.mul, &alg.imp}) {
    if (!t->has_value()) continue;
    if ((*t)->size() != n) fail(Err::ShapeMismatch, "operation table is not n x n");
    for (int v : (*t)->flat())
      if (v < 0 || v >= n) fail(Err::ShapeMismatch, "table entry out of range");
  }
}

std::string tuple2(const Poset& p, int a, int b) {
  return "a=" + p.label(a) + " b=" + p.label(b);
}
std::string tuple3(const Poset& p, int a, int b, int c) {
  return tuple2(p, a, b) + " c=" + p.label(c);
}

}  // namespace

VerificationReport verify_pocrim(const Algebra& alg) {
  require_shape(alg);
  if (!alg.mul) fail(Err::ShapeMismatch, "pocrim verification needs a product table");
  const Poset& p = alg.poset;
  const OpTable& mul = *alg.mul;
  const int n = p.size();
  VerificationReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    bool ok = true;
    std::string d;
    for (int x = 0; x < n && ok; ++x)
      if (!p.leq(x, alg.top)) { ok = false; d = p.label(x) + " is not below the top"; }
    add("top-maximum", ok, d);
  }
  if (alg.bottom) {
    bool ok = true;
    std::string d;
    for (int x = 0; x < n && ok; ++x)
      if (!p.leq(*alg.bottom, x)) { ok = false; d = "bottom is not below " + p.label(x); }
    add("bottom-minimum", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int x = 0; x < n && ok; ++x)
      if (mul.at(alg.top, x) != x || mul.at(x, alg.top) != x) {
        ok = false;
        d = "top*" + p.label(x) + " = " + p.label(mul.at(alg.top, x));
      }
    add("identity", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (mul.at(a, b) != mul.at(b, a)) {
          ok = false;
          d = tuple2(p, a, b) + ": " + p.label(mul.at(a, b)) + " vs " + p.label(mul.at(b, a));
        }
    add("commutativity", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (mul.at(mul.at(a, b), c) != mul.at(a, mul.at(b, c))) {
            ok = false;
            d = tuple3(p, a, b, c) + ": (ab)c = " + p.label(mul.at(mul.at(a, b), c)) +
                ", a(bc) = " + p.label(mul.at(a, mul.at(b, c)));
          }
    add("associativity", ok, d);
  }
  {
    std::pair<int, int> miss{-1, -1};
    auto derived = derive_implication(p, mul, &miss);
    add("residuals-exist", derived.has_value(),
        derived ? "" : tuple2(p, miss.first, miss.second) + ": {c | a*c <= b} has no greatest element");

    const OpTable* imp = alg.imp ? &*alg.imp : (derived ? &*derived : nullptr);
    bool ok = imp != nullptr;
    std::string d = ok ? "" : "no implication table available";
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c) {
          bool lhs = p.leq(mul.at(a, c), b);
          bool rhs = p.leq(c, imp->at(a, b));
          if (lhs != rhs) {
            ok = false;
            d = tuple3(p, a, b, c) + ": a*c" + (lhs ? "" : " not") + " <= b but c" +
                (rhs ? "" : " not") + " <= a->b = " + p.label(imp->at(a, b));
          }
        }
    add("adjointness", ok, d);
  }
  return rep;
}

VerificationReport verify_rml(const Algebra& alg) {
  VerificationReport rep = verify_pocrim(alg);
  auto mx = alg.poset.maximum();
  auto mn = alg.poset.minimum();
  // finite posets are multilattices; completeness reduces to boundedness
  bool ok = mx.has_value() && mn.has_value();
  std::string d;
  if (!mx) d = "carrier has no maximum";
  else if (!mn) d = "carrier has no minimum";
  rep.checks.push_back({"complete-multilattice", ok, d});
  return rep;
}

VerificationReport check_properties(const Algebra& alg) {
  require_shape(alg);
  if (!alg.mul) fail(Err::ShapeMismatch, "property check needs a product table");
  const Poset& p = alg.poset;
  const OpTable& mul = *alg.mul;
  const int n = p.size();
  VerificationReport rep;

  std::optional<OpTable> derived;
  if (!alg.imp) derived = derive_implication(p, mul);
  const OpTable* imp_ptr = alg.imp ? &*alg.imp : (derived ? &*derived : nullptr);
  if (!imp_ptr) {
    for (const char* name : {"P1", "P2", "P3", "P4", "P5", "P6", "P7"})
      rep.checks.push_back({name, false, "no implication table available"});
    return rep;
  }
  const OpTable& imp = *imp_ptr;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (!p.leq(mul.at(a, b), a) || !p.leq(mul.at(a, b), b)) {
          ok = false;
          d = tuple2(p, a, b) + ": a*b = " + p.label(mul.at(a, b));
        }
    add("P1", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        int ab = mul.at(a, b);
        if (!p.leq(mul.at(a, imp.at(a, b)), a) || !p.leq(a, imp.at(b, ab)) ||
            !p.leq(mul.at(b, imp.at(a, b)), b) || !p.leq(b, imp.at(a, ab))) {
          ok = false;
          d = tuple2(p, a, b);
        }
      }
    add("P2", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (p.leq(a, b) != (imp.at(a, b) == alg.top)) {
          ok = false;
          d = tuple2(p, a, b) + ": a->b = " + p.label(imp.at(a, b));
        }
    add("P3", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (!p.leq(a, b)) continue;
        for (int c = 0; c < n && ok; ++c)
          if (!p.leq(mul.at(a, c), mul.at(b, c)) || !p.leq(imp.at(c, a), imp.at(c, b)) ||
              !p.leq(imp.at(b, c), imp.at(a, c))) {
            ok = false;
            d = tuple3(p, a, b, c);
          }
      }
    add("P4", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (imp.at(a, imp.at(b, c)) != imp.at(b, imp.at(a, c))) {
            ok = false;
            d = tuple3(p, a, b, c);
          }
    add("P5", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (!p.leq(mul.at(imp.at(a, b), imp.at(b, c)), imp.at(a, c))) {
            ok = false;
            d = tuple3(p, a, b, c);
          }
    add("P6", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c) {
          int ab = imp.at(a, b);
          if (!p.leq(ab, imp.at(mul.at(a, c), mul.at(b, c))) ||
              !p.leq(ab, imp.at(imp.at(c, a), imp.at(c, b))) ||
              !p.leq(ab, imp.at(imp.at(b, c), imp.at(a, c)))) {
            ok = false;
            d = tuple3(p, a, b, c);
          }
        }
    add("P7", ok, d);
  }
  return rep;
}

Algebra ordinal_sum(const Algebra& a, const Algebra& b) {
  if (!verify_pocrim(a).ok()) fail(Err::UnverifiedInput, "lower summand fails pocrim verification");
  if (!verify_pocrim(b).ok()) fail(Err::UnverifiedInput, "upper summand fails pocrim verification");
  if (!a.poset.minimum()) fail(Err::UnverifiedInput, "lower summand must be bounded below");

  const int na = a.poset.size(), nb = b.poset.size();
  const int n = na - 1 + nb;
  // new carrier: a's non-top elements, then all of b (the identified top keeps b's label)
  std::vector<int> a_to_new(static_cast<std::size_t>(na), -1);
  std::vector<int> b_to_new(static_cast<std::size_t>(nb), -1);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  std::vector<bool> from_a;  // per new index
  std::vector<int> orig;     // original index in its summand
  for (int i = 0; i < na; ++i) {
    if (i == a.top) continue;
    a_to_new[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
    labels.push_back("a." + a.poset.label(i));
    from_a.push_back(true);
    orig.push_back(i);
  }
  for (int j = 0; j < nb; ++j) {
    b_to_new[static_cast<std::size_t>(j)] = static_cast<int>(labels.size());
    labels.push_back("b." + b.poset.label(j));
    from_a.push_back(false);
    orig.push_back(j);
  }
  a_to_new[static_cast<std::size_t>(a.top)] = b_to_new[static_cast<std::size_t>(b.top)];

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool r;
      if (from_a[static_cast<std::size_t>(x)] && from_a[static_cast<std::size_t>(y)])
        r = a.poset.leq(orig[static_cast<std::size_t>(x)], orig[static_cast<std::size_t>(y)]);
      else if (!from_a[static_cast<std::size_t>(x)] && !from_a[static_cast<std::size_t>(y)])
        r = b.poset.leq(orig[static_cast<std::size_t>(x)], orig[static_cast<std::size_t>(y)]);
      else
        r = from_a[static_cast<std::size_t>(x)];  // lower part below every upper element
      leq[static_cast<std::size_t>(x) * n + y] = r ? 1 : 0;
    }

  Algebra out;
  out.poset = Poset::from_leq(a.poset.name() + "+" + b.poset.name(), std::move(labels),
                              std::move(leq));
  out.top = b_to_new[static_cast<std::size_t>(b.top)];
  out.bottom = a_to_new[static_cast<std::size_t>(*a.poset.minimum())];
  OpTable mul(n), imp(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool xa = from_a[static_cast<std::size_t>(x)], ya = from_a[static_cast<std::size_t>(y)];
      int xo = orig[static_cast<std::size_t>(x)], yo = orig[static_cast<std::size_t>(y)];
      if (xa && ya) {
        mul.set(x, y, a_to_new[static_cast<std::size_t>(a.mul_at(xo, yo))]);
        imp.set(x, y, a_to_new[static_cast<std::size_t>(a.imp ? a.imp_at(xo, yo)
                                                              : *residual_of(a.poset, *a.mul, xo, yo))]);
      } else if (!xa && !ya) {
        mul.set(x, y, b_to_new[static_cast<std::size_t>(b.mul_at(xo, yo))]);
        imp.set(x, y, b_to_new[static_cast<std::size_t>(b.imp ? b.imp_at(xo, yo)
                                                              : *residual_of(b.poset, *b.mul, xo, yo))]);
      } else if (xa) {  // x strictly below the upper summand
        mul.set(x, y, x);
        imp.set(x, y, out.top);
      } else {  // y in the lower part, x in the upper part
        mul.set(x, y, y);
        imp.set(x, y, y);
      }
    }
  out.mul = std::move(mul);
  out.imp = std::move(imp);
  return out;
}

namespace {

OpTable parse_table(const Poset& p, const std::vector<std::string>& rows) {
  OpTable t(p.size());
  for (int i = 0; i < p.size(); ++i) {
    std::istringstream is(rows[static_cast<std::size_t>(i)]);
    std::string tok;
    for (int j = 0; j < p.size(); ++j) {
      is >> tok;
      t.set(i, j, p.index_of(tok));
    }
  }
  return t;
}

const char* kBot = "⊥";
const char* kTop = "⊤";

Poset make_rml7_poset() {
  return Poset::from_covers("rml7", {kBot, "a", "b", "c", "d", "e", kTop},
                            {{kBot, "a"}, {kBot, "b"}, {"a", "c"}, {"a", "d"},
                             {"b", "c"}, {"b", "d"}, {"c", "e"}, {"d", "e"}, {"e", kTop}});
}

Poset make_fig2_poset() {
  return Poset::from_covers(
      "fig2", {kBot, "a", "b", "c", "d", "f", "g", "h", "i", "j", kTop},
      {{kBot, "a"}, {kBot, "b"}, {kBot, "c"}, {"a", "d"}, {"a", "f"}, {"b", "d"},
       {"b", "f"}, {"b", "g"}, {"c", "f"}, {"c", "g"}, {"d", "h"}, {"d", "i"},
       {"f", "h"}, {"f", "i"}, {"f", "j"}, {"g", "i"}, {"g", "j"},
       {"h", kTop}, {"i", kTop}, {"j", kTop}});
}

Algebra make_rml7() {
  Algebra alg;
  alg.poset = make_rml7_poset();
  alg.top = alg.poset.index_of(kTop);
  alg.bottom = alg.poset.index_of(kBot);
  alg.mul = parse_table(alg.poset,
                        {"⊥ ⊥ ⊥ ⊥ ⊥ ⊥ ⊥",
                         "⊥ ⊥ ⊥ ⊥ ⊥ ⊥ a",
                         "⊥ ⊥ ⊥ ⊥ ⊥ ⊥ b",
                         "⊥ ⊥ ⊥ ⊥ ⊥ ⊥ c",
                         "⊥ ⊥ ⊥ ⊥ a a d",
                         "⊥ ⊥ ⊥ ⊥ a a e",
                         "⊥ a b c d e ⊤"});
  alg.imp = parse_table(alg.poset,
                        {"⊤ ⊤ ⊤ ⊤ ⊤ ⊤ ⊤",
                         "e ⊤ e ⊤ ⊤ ⊤ ⊤",
                         "e e ⊤ ⊤ ⊤ ⊤ ⊤",
                         "e e e ⊤ e ⊤ ⊤",
                         "c e c e ⊤ ⊤ ⊤",
                         "c e c e e ⊤ ⊤",
                         "⊥ a b c d e ⊤"});
  return alg;
}

Algebra make_ml6_imp_table() {
  Algebra alg;
  alg.poset = ml6_pattern().renamed("ml6-imp-table");
  alg.top = alg.poset.index_of(kTop);
  alg.bottom = alg.poset.index_of(kBot);
  alg.imp = parse_table(alg.poset,
                        {"⊤ ⊤ ⊤ ⊤ ⊤ ⊤",
                         "b ⊤ b ⊤ ⊤ ⊤",
                         "a a ⊤ ⊤ ⊤ ⊤",
                         "⊥ a b ⊤ d ⊤",
                         "⊥ a b c ⊤ ⊤",
                         "⊥ a b c d ⊤"});
  return alg;
}

Algebra make_chain(int k, bool lukasiewicz, const std::string& name) {
  if (k < 1 || k > 200) fail(Err::UnknownName, "chain size out of range: " + std::to_string(k));
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(labels[static_cast<std::size_t>(i)],
                                                      labels[static_cast<std::size_t>(i + 1)]);
  Algebra alg;
  alg.poset = Poset::from_covers(name, std::move(labels), covers);
  alg.top = k - 1;
  alg.bottom = 0;
  OpTable mul(k), imp(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (lukasiewicz) {
        mul.set(i, j, std::max(0, i + j - (k - 1)));
        imp.set(i, j, std::min(k - 1, k - 1 - i + j));
      } else {
        mul.set(i, j, std::min(i, j));
        imp.set(i, j, i <= j ? k - 1 : j);
      }
    }
  alg.mul = std::move(mul);
  alg.imp = std::move(imp);
  return alg;
}

Algebra make_two() {
  Algebra alg;
  alg.poset = Poset::from_covers("two", {kBot, kTop}, {{kBot, kTop}});
  alg.top = 1;
  alg.bottom = 0;
  OpTable mul(2), imp(2);
  mul.set(0, 0, 0); mul.set(0, 1, 0); mul.set(1, 0, 0); mul.set(1, 1, 1);
  imp.set(0, 0, 1); imp.set(0, 1, 1); imp.set(1, 0, 0); imp.set(1, 1, 1);
  alg.mul = mul;
  alg.imp = imp;
  return alg;
}

struct ChainSpec {
  int k;
  bool lukasiewicz;
};

std::optional<ChainSpec> parse_chain(const std::string& name) {
  if (name.rfind("chain-", 0) != 0) return std::nullopt;
  auto rest = name.substr(6);
  auto dash = rest.find('-');
  if (dash == std::string::npos) return std::nullopt;
  std::string num = rest.substr(0, dash), kind = rest.substr(dash + 1);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  if (kind != "godel" && kind != "lukasiewicz") return std::nullopt;
  return ChainSpec{std::stoi(num), kind == "lukasiewicz"};
}

}  // namespace

BuiltinKind builtin_kind(const std::string& name) {
  if (name == "ml6-poset" || name == "fig2-poset") return BuiltinKind::PosetOnly;
  if (name == "ml6-imp-table") return BuiltinKind::ImpTableOnly;
  if (name == "rml7" || name == "two" || parse_chain(name)) return BuiltinKind::Pocrim;
  fail(Err::UnknownName, "no builtin named '" + name + "'");
}

Poset builtin_poset(const std::string& name) {
  switch (builtin_kind(name)) {
    case BuiltinKind::PosetOnly:
      return name == "ml6-poset" ? ml6_pattern().renamed("ml6") : make_fig2_poset();
    default:
      return builtin_algebra(name).poset;
  }
}

Algebra builtin_algebra(const std::string& name) {
  if (name == "rml7") return make_rml7();
  if (name == "two") return make_two();
  if (name == "ml6-imp-table") return make_ml6_imp_table();
  if (auto c = parse_chain(name)) return make_chain(c->k, c->lukasiewicz, name);
  if (builtin_kind(name) == BuiltinKind::PosetOnly)
    fail(Err::UnknownName, "'" + name + "' is a poset, not an algebra");
  fail(Err::UnknownName, "no builtin named '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"ml6-poset", "fig2-poset", "rml7", "two", "chain-<k>-godel", "chain-<k>-lukasiewicz",
          "ml6-imp-table"};
}

}  // namespace multilat
