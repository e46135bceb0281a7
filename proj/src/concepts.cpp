#include "multilat/concepts.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace multilat {

std::size_t enumeration_budget() {
  static const std::size_t value = [] {
    if (const char* env = std::getenv("MULTILAT_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1'000'000);
  }();
  return value;
}

CrispContext make_context(std::vector<std::string> objects, std::vector<std::string> attributes,
                          const std::vector<std::pair<std::string, std::string>>& incidence) {
  CrispContext ctx;
  ctx.objects = std::move(objects);
  ctx.attributes = std::move(attributes);
  ctx.incidence.assign(ctx.objects.size() * ctx.attributes.size(), 0);
  auto find = [](const std::vector<std::string>& v, const std::string& s) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == s) return static_cast<int>(i);
    fail(Err::UnknownLabel, "context does not list '" + s + "'");
  };
  for (const auto& [g, m] : incidence)
    ctx.incidence[static_cast<std::size_t>(find(ctx.objects, g)) * ctx.attributes.size() +
                  static_cast<std::size_t>(find(ctx.attributes, m))] = 1;
  return ctx;
}

GaloisPair GaloisPair::crisp(CrispContext ctx) {
  if (ctx.objects.empty() || ctx.attributes.empty())
    fail(Err::EmptySubset, "crisp context needs objects and attributes");
  GaloisPair p;
  p.rule_ = Rule::Crisp;
  p.a1_ = builtin_algebra("two");
  p.a2_ = p.a1_;
  p.g_ = ctx.objects;
  p.m_ = ctx.attributes;
  p.ctx_ = std::make_shared<CrispContext>(std::move(ctx));
  return p;
}

GaloisPair GaloisPair::residuum_negation(Algebra alg, std::vector<std::string> domain,
                                         ValuedFunction r) {
  if (r.domain != domain) fail(Err::DomainMismatch, "r must be defined on the shared domain");
  for (int v : r.values)
    if (v < 0 || v >= alg.poset.size()) fail(Err::DomainMismatch, "r takes values in the carrier");
  if (!alg.imp) {
    if (!alg.mul) fail(Err::ShapeMismatch, "algebra needs tables");
    auto imp = derive_implication(alg.poset, *alg.mul);
    if (!imp) fail(Err::UnverifiedInput, "product table is not residuable");
    alg.imp = std::move(imp);
  }
  GaloisPair p;
  p.rule_ = Rule::ResiduumNegation;
  p.a1_ = alg;
  p.a2_ = std::move(alg);
  p.g_ = domain;
  p.m_ = std::move(domain);
  p.r_ = std::move(r);
  return p;
}

GaloisPair GaloisPair::explicit_tables(Algebra a1, Algebra a2, std::vector<std::string> objects,
                                       std::vector<std::string> attributes,
                                       std::vector<std::vector<int>> phi_table,
                                       std::vector<std::vector<int>> psi_table) {
  GaloisPair p;
  p.rule_ = Rule::ExplicitTables;
  p.a1_ = std::move(a1);
  p.a2_ = std::move(a2);
  p.g_ = std::move(objects);
  p.m_ = std::move(attributes);
  std::uint64_t ns = function_count(p.a1_.poset.size(), p.g_.size());
  std::uint64_t ms = function_count(p.a2_.poset.size(), p.m_.size());
  if (phi_table.size() != ns || psi_table.size() != ms)
    fail(Err::ShapeMismatch, "phi/psi tables must cover the whole function spaces");
  for (const auto& row : phi_table)
    if (row.size() != p.m_.size()) fail(Err::ShapeMismatch, "phi row arity mismatch");
  for (const auto& row : psi_table)
    if (row.size() != p.g_.size()) fail(Err::ShapeMismatch, "psi row arity mismatch");
  p.phi_table_ = std::move(phi_table);
  p.psi_table_ = std::move(psi_table);
  return p;
}

ValuedFunction GaloisPair::phi(const ValuedFunction& h) const {
  if (h.domain != g_) fail(Err::DomainMismatch, "phi expects a function on G");
  switch (rule_) {
    case Rule::Crisp: {
      ValuedFunction f{m_, std::vector<int>(m_.size(), 1)};
      for (std::size_t mi = 0; mi < m_.size(); ++mi)
        for (std::size_t gi = 0; gi < g_.size(); ++gi)
          if (h.values[gi] == 1 && !ctx_->has(static_cast<int>(gi), static_cast<int>(mi))) {
            f.values[mi] = 0;
            break;
          }
      return f;
    }
    case Rule::ResiduumNegation: {
      ValuedFunction f{m_, {}};
      f.values.reserve(m_.size());
      for (std::size_t i = 0; i < m_.size(); ++i)
        f.values.push_back(a1_.imp_at(h.values[i], r_.values[i]));
      return f;
    }
    case Rule::ExplicitTables:
      return {m_, phi_table_[static_cast<std::size_t>(rank_of(h, a1_.poset.size()))]};
  }
  fail(Err::ShapeMismatch, "unreachable");
}

ValuedFunction GaloisPair::psi(const ValuedFunction& f) const {
  if (f.domain != m_) fail(Err::DomainMismatch, "psi expects a function on M");
  switch (rule_) {
    case Rule::Crisp: {
      ValuedFunction h{g_, std::vector<int>(g_.size(), 1)};
      for (std::size_t gi = 0; gi < g_.size(); ++gi)
        for (std::size_t mi = 0; mi < m_.size(); ++mi)
          if (f.values[mi] == 1 && !ctx_->has(static_cast<int>(gi), static_cast<int>(mi))) {
            h.values[gi] = 0;
            break;
          }
      return h;
    }
    case Rule::ResiduumNegation: {
      ValuedFunction h{g_, {}};
      h.values.reserve(g_.size());
      for (std::size_t i = 0; i < g_.size(); ++i)
        h.values.push_back(a2_.imp_at(f.values[i], r_.values[i]));
      return h;
    }
    case Rule::ExplicitTables:
      return {g_, psi_table_[static_cast<std::size_t>(rank_of(f, a2_.poset.size()))]};
  }
  fail(Err::ShapeMismatch, "unreachable");
}

GaloisPair GaloisPair::perturbed(std::uint64_t h_rank, ValuedFunction new_value) const {
  GaloisPair p = *this;
  if (p.rule_ != Rule::ExplicitTables) {
    // materialize tables first
    std::uint64_t ns = extent_space(), ms = intent_space();
    p.phi_table_.clear();
    p.psi_table_.clear();
    for (std::uint64_t r = 0; r < ns; ++r)
      p.phi_table_.push_back(phi(unrank(r, a1_.poset.size(), g_)).values);
    for (std::uint64_t r = 0; r < ms; ++r)
      p.psi_table_.push_back(psi(unrank(r, a2_.poset.size(), m_)).values);
    p.rule_ = Rule::ExplicitTables;
  }
  p.phi_table_[static_cast<std::size_t>(h_rank)] = std::move(new_value.values);
  return p;
}

VerificationReport verify_galois(const GaloisPair& pair, VerifyMode mode, std::size_t budget) {
  VerificationReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const Poset& p1 = pair.alg1().poset;
  const Poset& p2 = pair.alg2().poset;
  const std::uint64_t ns = pair.extent_space(), ms = pair.intent_space();

  auto h_of = [&](std::uint64_t r) { return unrank(r, p1.size(), pair.objects()); };
  auto f_of = [&](std::uint64_t r) { return unrank(r, p2.size(), pair.attributes()); };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> law_pairs;
  std::vector<std::uint64_t> hs, fs;
  if (mode.exhaustive) {
    if (ns * ms > budget || ns > budget || ms > budget)
      fail(Err::BudgetExceeded,
           "exhaustive verification needs " + std::to_string(ns * ms) + " pairs");
    for (std::uint64_t i = 0; i < ns; ++i) {
      hs.push_back(i);
      for (std::uint64_t j = 0; j < ms; ++j) law_pairs.emplace_back(i, j);
    }
    for (std::uint64_t j = 0; j < ms; ++j) fs.push_back(j);
  } else {
    std::mt19937_64 rng(mode.seed);
    for (int s = 0; s < mode.samples; ++s) {
      law_pairs.emplace_back(rng() % ns, rng() % ms);
      hs.push_back(rng() % ns);
      fs.push_back(rng() % ms);
    }
  }

  {
    bool ok = true;
    std::string d;
    for (auto [ri, rj] : law_pairs) {
      auto h = h_of(ri);
      auto f = f_of(rj);
      if (vf_leq(p1, h, pair.psi(f)) != vf_leq(p2, f, pair.phi(h))) {
        ok = false;
        d = "h rank " + std::to_string(ri) + ", f rank " + std::to_string(rj);
        break;
      }
    }
    add("galois-law", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (auto r : hs) {
      auto h = h_of(r);
      if (pair.phi(pair.psi(pair.phi(h))) != pair.phi(h)) {
        ok = false;
        d = "h rank " + std::to_string(r);
        break;
      }
    }
    add("phi-psi-phi", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (auto r : fs) {
      auto f = f_of(r);
      if (pair.psi(pair.phi(pair.psi(f))) != pair.psi(f)) {
        ok = false;
        d = "f rank " + std::to_string(r);
        break;
      }
    }
    add("psi-phi-psi", ok, d);
  }
  {
    // closure-operator law x <= c(y) iff c(x) <= c(y), for both composites
    bool ok = true;
    std::string d;
    auto check_closure = [&](auto&& cl, const Poset& p, const std::vector<std::uint64_t>& ranks,
                             auto&& of) {
      for (auto rx : ranks) {
        for (auto ry : ranks) {
          auto x = of(rx), y = of(ry);
          if (vf_leq(p, x, cl(y)) != vf_leq(p, cl(x), cl(y))) {
            d = "ranks " + std::to_string(rx) + ", " + std::to_string(ry);
            return false;
          }
        }
      }
      return true;
    };
    // cap the quadratic sweep in exhaustive mode
    std::vector<std::uint64_t> hs2 = hs, fs2 = fs;
    if (mode.exhaustive && hs2.size() > 256) hs2.resize(256);
    if (mode.exhaustive && fs2.size() > 256) fs2.resize(256);
    ok = check_closure([&](const ValuedFunction& v) { return pair.psi(pair.phi(v)); }, p1, hs2,
                       h_of) &&
         check_closure([&](const ValuedFunction& v) { return pair.phi(pair.psi(v)); }, p2, fs2,
                       f_of);
    add("closure-law", ok, d);
  }
  return rep;
}

int ConceptSystem::index_of_extent(const ValuedFunction& h) const {
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i].extent == h) return static_cast<int>(i);
  return -1;
}

Poset ConceptSystem::order_poset(const Poset& carrier1, const std::string& name) const {
  const int k = size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) labels.push_back("c" + std::to_string(i));
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      rel[static_cast<std::size_t>(i) * k + j] = leq(carrier1, i, j) ? 1 : 0;
  return Poset::from_leq(name, std::move(labels), std::move(rel));
}

ConceptSystem enumerate_concepts(const GaloisPair& pair, std::size_t budget) {
  if (pair.intent_space() > budget)
    fail(Err::BudgetExceeded, "intent space has " + std::to_string(pair.intent_space()) +
                                  " candidates, budget " + std::to_string(budget));
  {
    // the law is a hypothesis of everything downstream; never assume it
    VerifyMode mode;
    mode.exhaustive = pair.extent_space() * pair.intent_space() <= budget;
    if (!mode.exhaustive) {
      mode.samples = 512;
      mode.seed = 0;
    }
    auto rep = verify_galois(pair, mode, budget);
    if (!rep.ok()) fail(Err::UnverifiedInput, "the pair does not satisfy the Galois law");
  }
  const Poset& p2 = pair.alg2().poset;
  ConceptSystem sys;
  for (std::uint64_t r = 0; r < pair.intent_space(); ++r) {
    ValuedFunction f = unrank(r, p2.size(), pair.attributes());
    ValuedFunction h = pair.psi(f);
    if (pair.phi(h) == f) sys.concepts.push_back({std::move(h), std::move(f)});
  }
  std::sort(sys.concepts.begin(), sys.concepts.end(),
            [](const Concept& a, const Concept& b) { return a.extent < b.extent; });
  sys.concepts.erase(std::unique(sys.concepts.begin(), sys.concepts.end()), sys.concepts.end());
  sys.ext.resize(sys.concepts.size());
  for (std::size_t i = 0; i < sys.ext.size(); ++i) sys.ext[i] = i;
  return sys;
}

std::vector<Concept> concept_multi_bounds(const GaloisPair& pair, const ConceptSystem& sys,
                                          const std::vector<int>& j_indices, MSide side) {
  if (j_indices.empty()) fail(Err::EmptySelection, "concept bounds need a nonempty selection");
  const Poset& p1 = pair.alg1().poset;
  const Poset& p2 = pair.alg2().poset;

  std::vector<Concept> out;
  if (side == MSide::Inf) {
    std::vector<ValuedFunction> extents;
    for (int j : j_indices) extents.push_back(sys.concepts[static_cast<std::size_t>(j)].extent);
    for (auto& h : choice_bounds(p1, extents, MSide::Inf).functions)
      out.push_back({h, pair.phi(h)});
  } else {
    std::vector<ValuedFunction> intents;
    for (int j : j_indices) intents.push_back(sys.concepts[static_cast<std::size_t>(j)].intent);
    for (auto& f : choice_bounds(p2, intents, MSide::Inf).functions)
      out.push_back({pair.psi(f), f});
  }

  // each candidate must be a genuine concept and extreme within the system
  for (const auto& c : out) {
    if (pair.psi(c.intent) != c.extent || pair.phi(c.extent) != c.intent)
      fail(Err::UnverifiedInput, "bound candidate is not a concept");
    int ci = sys.index_of_extent(c.extent);
    if (ci < 0) fail(Err::UnverifiedInput, "bound candidate missing from the system");
    for (int other = 0; other < sys.size(); ++other) {
      if (other == ci) continue;
      bool other_is_bound = true;
      for (int j : j_indices) {
        bool below = sys.leq(p1, other, j);
        bool above = sys.leq(p1, j, other);
        if (side == MSide::Inf ? !below : !above) {
          other_is_bound = false;
          break;
        }
      }
      if (!other_is_bound) continue;
      bool strictly_beyond = side == MSide::Inf
                                 ? (sys.leq(p1, ci, other) && !sys.leq(p1, other, ci))
                                 : (sys.leq(p1, other, ci) && !sys.leq(p1, ci, other));
      if (strictly_beyond)
        fail(Err::UnverifiedInput, "bound candidate is not extreme in the system");
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Concept& a, const Concept& b) { return a.extent < b.extent; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValuedFunction closed_tensor(const GaloisPair& pair, int side, TensorOp op,
                             const ValuedFunction& u, const ValuedFunction& v) {
  if (side != 1 && side != 2) fail(Err::DomainMismatch, "side must be 1 or 2");
  const Algebra& alg = side == 1 ? pair.alg1() : pair.alg2();
  ValuedFunction w = pointwise(alg, op == TensorOp::Tensor ? PointwiseOp::Mul : PointwiseOp::Imp,
                               u, v);
  return side == 1 ? pair.psi(pair.phi(w)) : pair.phi(pair.psi(w));
}

bool check_closedness(const GaloisPair& pair, const ConceptSystem& sys, ClosedSide which) {
  if (which == ClosedSide::Ext) {
    for (const auto& c1 : sys.concepts)
      for (const auto& c2 : sys.concepts) {
        ValuedFunction w = pointwise(pair.alg1(), PointwiseOp::Imp, c1.extent, c2.extent);
        if (sys.index_of_extent(pair.psi(pair.phi(w))) < 0 || pair.psi(pair.phi(w)) != w)
          return false;
      }
  } else {
    for (const auto& c1 : sys.concepts)
      for (const auto& c2 : sys.concepts) {
        ValuedFunction w = pointwise(pair.alg2(), PointwiseOp::Imp, c1.intent, c2.intent);
        if (pair.phi(pair.psi(w)) != w) return false;
      }
  }
  return true;
}

namespace {

OpTable tensor_table(const GaloisPair& pair, const ConceptSystem& sys, TensorOp op) {
  const int k = sys.size();
  OpTable t(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ValuedFunction w = closed_tensor(pair, 1, op, sys.concepts[static_cast<std::size_t>(i)].extent,
                                       sys.concepts[static_cast<std::size_t>(j)].extent);
      int ci = sys.index_of_extent(w);
      if (ci < 0) fail(Err::UnverifiedInput, "closed tensor left the concept system");
      t.set(i, j, ci);
    }
  return t;
}

}  // namespace

Algebra build_concept_rml(const GaloisPair& pair, const ConceptSystem& sys) {
  if (sys.concepts.empty()) fail(Err::EmptySelection, "no concepts");
  if (!check_closedness(pair, sys, ClosedSide::Ext))
    fail(Err::ClosednessViolated, "Ext is not closed under the side-1 implication");
  if (!check_closedness(pair, sys, ClosedSide::Int))
    fail(Err::ClosednessViolated, "Int is not closed under the side-2 implication");

  const Poset& p1 = pair.alg1().poset;
  Algebra out;
  out.poset = sys.order_poset(p1, "concepts");
  out.mul = tensor_table(pair, sys, TensorOp::Tensor);
  out.imp = tensor_table(pair, sys, TensorOp::Arrow);
  ValuedFunction top_fn = constant_function(pair.objects(), pair.alg1().top);
  int ti = sys.index_of_extent(pair.psi(pair.phi(top_fn)));
  if (ti < 0) fail(Err::UnverifiedInput, "no top concept");
  out.top = ti;
  if (auto mn = out.poset.minimum()) out.bottom = *mn;
  return out;
}

ConceptTableDiagnostics concept_tables_diagnostic(const GaloisPair& pair,
                                                  const ConceptSystem& sys) {
  ConceptTableDiagnostics d{tensor_table(pair, sys, TensorOp::Tensor),
                            tensor_table(pair, sys, TensorOp::Arrow),
                            {}};
  const Poset& p1 = pair.alg1().poset;
  const int k = sys.size();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        bool lhs = sys.leq(p1, d.tensor.at(a, c), b);
        bool rhs = sys.leq(p1, c, d.arrow.at(a, b));
        if (lhs != rhs)
          d.adjointness_violations.push_back("c" + std::to_string(a) + ", c" + std::to_string(b) +
                                             ", c" + std::to_string(c));
      }
  return d;
}

}  // namespace multilat
