#include "multilat/funcspace.hpp"

#include <algorithm>
#include <random>

#include "multilat/reference.hpp"

namespace multilat {

bool same_domain(const ValuedFunction& f, const ValuedFunction& g) {
  return f.domain == g.domain;
}

void require_same_domain(const ValuedFunction& f, const ValuedFunction& g) {
  if (!same_domain(f, g)) fail(Err::DomainMismatch, "functions have different domains");
}

ValuedFunction apply_table(const OpTable& t, const ValuedFunction& f1, const ValuedFunction& f2) {
  require_same_domain(f1, f2);
  ValuedFunction out{f1.domain, {}};
  out.values.reserve(f1.values.size());
  for (std::size_t i = 0; i < f1.values.size(); ++i)
    out.values.push_back(t.at(f1.values[i], f2.values[i]));
  return out;
}

ValuedFunction pointwise(const Algebra& alg, PointwiseOp op, const ValuedFunction& f1,
                         const ValuedFunction& f2) {
  const auto& t = op == PointwiseOp::Mul ? alg.mul : alg.imp;
  if (!t) fail(Err::ShapeMismatch, "algebra lacks the requested table");
  for (const auto* f : {&f1, &f2})
    for (int v : f->values)
      if (v < 0 || v >= alg.poset.size()) fail(Err::DomainMismatch, "value outside the carrier");
  return apply_table(*t, f1, f2);
}

bool vf_leq(const Poset& p, const ValuedFunction& f1, const ValuedFunction& f2) {
  require_same_domain(f1, f2);
  for (std::size_t i = 0; i < f1.values.size(); ++i)
    if (!p.leq(f1.values[i], f2.values[i])) return false;
  return true;
}

ValuedFunction constant_function(const std::vector<std::string>& domain, int value) {
  return {domain, std::vector<int>(domain.size(), value)};
}

std::uint64_t function_count(int carrier_size, std::size_t domain_size) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < domain_size; ++i) {
    if (c > UINT64_MAX / static_cast<std::uint64_t>(carrier_size))
      fail(Err::BudgetExceeded, "function space too large to count");
    c *= static_cast<std::uint64_t>(carrier_size);
  }
  return c;
}

std::uint64_t rank_of(const ValuedFunction& f, int carrier_size) {
  std::uint64_t r = 0;
  for (int v : f.values) r = r * static_cast<std::uint64_t>(carrier_size) + static_cast<std::uint64_t>(v);
  return r;
}

ValuedFunction unrank(std::uint64_t rank, int carrier_size,
                      const std::vector<std::string>& domain) {
  ValuedFunction f{domain, std::vector<int>(domain.size(), 0)};
  for (std::size_t i = domain.size(); i-- > 0;) {
    f.values[i] = static_cast<int>(rank % static_cast<std::uint64_t>(carrier_size));
    rank /= static_cast<std::uint64_t>(carrier_size);
  }
  return f;
}

ChoiceBoundsResult choice_bounds(const Poset& p, const std::vector<ValuedFunction>& fs,
                                 MSide side, std::size_t cap) {
  if (fs.empty()) fail(Err::EmptySubset, "choice_bounds needs at least one function");
  for (const auto& f : fs) require_same_domain(fs.front(), f);
  const auto& domain = fs.front().domain;
  const std::size_t m = domain.size();

  std::vector<std::vector<int>> per_point(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> xs;
    xs.reserve(fs.size());
    for (const auto& f : fs) xs.push_back(f.values[i]);
    per_point[i] = multi_bounds(p, xs, side);
  }

  ChoiceBoundsResult out;
  for (const auto& choices : per_point)
    if (choices.empty()) return out;  // no bounds at some point: empty set

  std::vector<std::size_t> odo(m, 0);
  while (true) {
    if (out.functions.size() >= cap) {
      out.truncated = true;
      break;
    }
    ValuedFunction f{domain, {}};
    f.values.reserve(m);
    for (std::size_t i = 0; i < m; ++i) f.values.push_back(per_point[i][odo[i]]);
    out.functions.push_back(std::move(f));
    std::size_t i = m;
    while (i-- > 0) {
      if (++odo[i] < per_point[i].size()) break;
      odo[i] = 0;
      if (i == 0) goto done;
    }
    if (m == 0) break;
  }
done:
  std::sort(out.functions.begin(), out.functions.end());
  return out;
}

Algebra pointwise_algebra(const Algebra& alg, const std::vector<std::string>& domain,
                          std::size_t fn_budget) {
  if (!alg.mul || !alg.imp) fail(Err::ShapeMismatch, "pointwise lift needs both tables");
  const int n = alg.poset.size();
  std::uint64_t count = function_count(n, domain.size());
  if (count > fn_budget)
    fail(Err::BudgetExceeded, "function space has " + std::to_string(count) +
                                  " elements, budget " + std::to_string(fn_budget));
  const int N = static_cast<int>(count);

  std::vector<ValuedFunction> fns;
  fns.reserve(static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r) fns.push_back(unrank(static_cast<std::uint64_t>(r), n, domain));

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(N));
  for (const auto& f : fns) {
    std::string l = "(";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      if (i) l += ",";
      l += alg.poset.label(f.values[i]);
    }
    l += ")";
    labels.push_back(std::move(l));
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(N) * N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      leq[static_cast<std::size_t>(i) * N + j] =
          vf_leq(alg.poset, fns[static_cast<std::size_t>(i)], fns[static_cast<std::size_t>(j)]) ? 1 : 0;

  Algebra out;
  out.poset = Poset::from_leq(alg.poset.name() + "^" + std::to_string(domain.size()),
                              std::move(labels), std::move(leq));
  OpTable mul(N), imp(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto fm = apply_table(*alg.mul, fns[static_cast<std::size_t>(i)], fns[static_cast<std::size_t>(j)]);
      auto fi = apply_table(*alg.imp, fns[static_cast<std::size_t>(i)], fns[static_cast<std::size_t>(j)]);
      mul.set(i, j, static_cast<int>(rank_of(fm, n)));
      imp.set(i, j, static_cast<int>(rank_of(fi, n)));
    }
  out.mul = std::move(mul);
  out.imp = std::move(imp);
  out.top = static_cast<int>(rank_of(constant_function(domain, alg.top), n));
  if (alg.bottom) out.bottom = static_cast<int>(rank_of(constant_function(domain, *alg.bottom), n));
  return out;
}

VerificationReport verify_pointwise_pocrim(const Algebra& alg,
                                           const std::vector<std::string>& domain,
                                           VerifyMode mode, std::size_t fn_budget) {
  if (!alg.mul || !alg.imp) fail(Err::ShapeMismatch, "pointwise verification needs both tables");
  const int n = alg.poset.size();
  VerificationReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  if (mode.exhaustive) {
    // materialize the lifted algebra and run the ordinary verifiers on it
    Algebra lifted = pointwise_algebra(alg, domain, fn_budget);
    VerificationReport inner = verify_rml(lifted);
    for (auto& c : inner.checks) rep.checks.push_back(std::move(c));
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    auto random_fn = [&]() {
      ValuedFunction f{domain, {}};
      f.values.reserve(domain.size());
      for (std::size_t i = 0; i < domain.size(); ++i) f.values.push_back(pick(rng));
      return f;
    };
    bool monoid_ok = true, adj_ok = true;
    std::string monoid_d, adj_d;
    const ValuedFunction top_fn = constant_function(domain, alg.top);
    for (int s = 0; s < mode.samples; ++s) {
      auto f1 = random_fn(), f2 = random_fn(), f3 = random_fn();
      auto a12 = pointwise(alg, PointwiseOp::Mul, f1, f2);
      if (monoid_ok) {
        bool comm = a12 == pointwise(alg, PointwiseOp::Mul, f2, f1);
        bool assoc = pointwise(alg, PointwiseOp::Mul, a12, f3) ==
                     pointwise(alg, PointwiseOp::Mul, f1, pointwise(alg, PointwiseOp::Mul, f2, f3));
        bool ident = pointwise(alg, PointwiseOp::Mul, top_fn, f1) == f1;
        if (!comm || !assoc || !ident) {
          monoid_ok = false;
          monoid_d = "sample " + std::to_string(s);
        }
      }
      if (adj_ok) {
        bool lhs = vf_leq(alg.poset, pointwise(alg, PointwiseOp::Mul, f1, f3), f2);
        bool rhs = vf_leq(alg.poset, f3, pointwise(alg, PointwiseOp::Imp, f1, f2));
        if (lhs != rhs) {
          adj_ok = false;
          adj_d = "sample " + std::to_string(s);
        }
      }
    }
    add("monoid-sampled", monoid_ok, monoid_d);
    add("adjointness-sampled", adj_ok, adj_d);
  }

  {
    // constants: f*top = f, f->top = top, f*bot = bot
    std::mt19937_64 rng(mode.seed + 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const ValuedFunction top_fn = constant_function(domain, alg.top);
    bool ok = true;
    for (int s = 0; s < 32 && ok; ++s) {
      ValuedFunction f{domain, {}};
      for (std::size_t i = 0; i < domain.size(); ++i) f.values.push_back(pick(rng));
      ok = pointwise(alg, PointwiseOp::Mul, f, top_fn) == f &&
           pointwise(alg, PointwiseOp::Imp, f, top_fn) == top_fn;
      if (alg.bottom) {
        const ValuedFunction bot_fn = constant_function(domain, *alg.bottom);
        ok = ok && pointwise(alg, PointwiseOp::Mul, f, bot_fn) == bot_fn;
      }
    }
    add("bound-constants", ok);
  }
  {
    // choice-function bounds against the brute-force scan
    std::mt19937_64 rng(mode.seed + 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int pairs = mode.exhaustive ? 100 : std::max(1, mode.samples / 4);
    bool feasible = function_count(n, domain.size()) <= 100000;
    bool ok = true;
    std::string d;
    for (int s = 0; s < pairs && ok && feasible; ++s) {
      ValuedFunction f{domain, {}}, g{domain, {}};
      for (std::size_t i = 0; i < domain.size(); ++i) {
        f.values.push_back(pick(rng));
        g.values.push_back(pick(rng));
      }
      for (MSide side : {MSide::Sup, MSide::Inf}) {
        auto fast = choice_bounds(alg.poset, {f, g}, side).functions;
        auto slow = reference_multi_bounds(alg.poset, {f, g}, side);
        if (fast != slow) {
          ok = false;
          d = "pair sample " + std::to_string(s);
        }
      }
    }
    add("choice-bounds-exact", ok, d);
  }
  return rep;
}

}  // namespace multilat
