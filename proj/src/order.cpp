#include "multilat/order.hpp"

#include <algorithm>
#include <map>

namespace multilat {

std::vector<int> multi_bounds(const Poset& p, const std::vector<int>& xs, MSide side) {
  if (side == MSide::Sup) return p.extremal(p.bounds(xs, Side::Upper), Extreme::Minimal);
  return p.extremal(p.bounds(xs, Side::Lower), Extreme::Maximal);
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// literal definitional check: every bound of X lies beyond some multi-bound
bool definitional_sweep(const Poset& p, int max_size) {
  const int n = p.size();
  std::vector<int> xs;
  auto check = [&]() {
    auto sup = multi_bounds(p, xs, MSide::Sup);
    for (int u : p.bounds(xs, Side::Upper)) {
      bool ok = false;
      for (int m : sup)
        if (p.leq(m, u)) { ok = true; break; }
      if (!ok) return false;
    }
    auto inf = multi_bounds(p, xs, MSide::Inf);
    for (int u : p.bounds(xs, Side::Lower)) {
      bool ok = false;
      for (int m : inf)
        if (p.leq(u, m)) { ok = true; break; }
      if (!ok) return false;
    }
    return true;
  };
  // subsets of size 1..max_size via index recursion
  bool ok = true;
  auto rec = [&](auto&& self, int start) -> void {
    if (!ok) return;
    if (!xs.empty() && !check()) { ok = false; return; }
    if (static_cast<int>(xs.size()) == max_size) return;
    for (int i = start; i < n; ++i) {
      xs.push_back(i);
      self(self, i + 1);
      xs.pop_back();
    }
  };
  rec(rec, 0);
  return ok;
}

}  // namespace

MultiLatticeReport classify(const Poset& p) {
  MultiLatticeReport r;
  const int n = p.size();
  r.is_multilattice = true;
  if (n <= 32) r.is_multilattice = definitional_sweep(p, std::min(4, n));
  r.is_complete = p.maximum().has_value() && p.minimum().has_value();
  r.is_lattice = true;
  for (int a = 0; a < n && !r.witness; ++a)
    for (int b = a; b < n && !r.witness; ++b) {
      std::vector<int> xs{a, b};
      if (multi_bounds(p, xs, MSide::Sup).size() != 1 ||
          multi_bounds(p, xs, MSide::Inf).size() != 1) {
        r.is_lattice = false;
        r.witness = std::make_pair(a, b);
      }
    }
  r.is_pure = r.is_multilattice && !r.is_lattice;
  return r;
}

bool subml_check(const Poset& p, const std::vector<int>& s, SubmlKind kind) {
  if (s.empty()) fail(Err::EmptySubset, "submultilattice check needs a nonempty subset");
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i; j < sorted.size(); ++j) {
      std::vector<int> xs{sorted[i], sorted[j]};
      auto sup = multi_bounds(p, xs, MSide::Sup);
      auto inf = multi_bounds(p, xs, MSide::Inf);
      if (kind == SubmlKind::Full) {
        if (!subset_of(sup, sorted) || !subset_of(inf, sorted)) return false;
      } else {
        if (intersect(sup, sorted).empty() || intersect(inf, sorted).empty()) return false;
      }
    }
  return true;
}

namespace {

struct EmbeddingSearch {
  const Poset& pat;
  const Poset& host;
  std::vector<int> order;       // pattern vertices in assignment order
  std::vector<int> assign;      // pattern index -> host index or -1
  std::vector<bool> used;       // host occupancy
  std::vector<int> pat_down, pat_up, host_down, host_up;  // chain heights
  std::vector<int> pat_deg, host_deg;                     // comparability degrees
  std::vector<Embedding> out;

  static std::vector<int> heights(const Poset& p, bool down) {
    const int n = p.size();
    std::vector<int> h(static_cast<std::size_t>(n), 0);
    // longest chain strictly below (down) / above: iterate until fixpoint (n small)
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          bool rel = down ? p.lt(b, a) : p.lt(a, b);
          if (rel && h[static_cast<std::size_t>(b)] + 1 > h[static_cast<std::size_t>(a)]) {
            h[static_cast<std::size_t>(a)] = h[static_cast<std::size_t>(b)] + 1;
            changed = true;
          }
        }
    }
    return h;
  }

  static std::vector<int> degrees(const Poset& p) {
    const int n = p.size();
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && p.comparable(a, b)) ++d[static_cast<std::size_t>(a)];
    return d;
  }

  EmbeddingSearch(const Poset& pattern, const Poset& h) : pat(pattern), host(h) {
    pat_down = heights(pat, true);
    pat_up = heights(pat, false);
    host_down = heights(host, true);
    host_up = heights(host, false);
    pat_deg = degrees(pat);
    host_deg = degrees(host);
    order.resize(static_cast<std::size_t>(pat.size()));
    for (int i = 0; i < pat.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    // most-constrained first: high degree, then high height span
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return pat_deg[static_cast<std::size_t>(a)] > pat_deg[static_cast<std::size_t>(b)];
    });
    assign.assign(static_cast<std::size_t>(pat.size()), -1);
    used.assign(static_cast<std::size_t>(host.size()), false);
  }

  void run() { rec(0); }

  void rec(std::size_t k) {
    if (k == order.size()) {
      Embedding e;
      e.map = assign;
      e.image = assign;
      std::sort(e.image.begin(), e.image.end());
      out.push_back(std::move(e));
      return;
    }
    int u = order[k];
    for (int v = 0; v < host.size(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (host_down[static_cast<std::size_t>(v)] < pat_down[static_cast<std::size_t>(u)] ||
          host_up[static_cast<std::size_t>(v)] < pat_up[static_cast<std::size_t>(u)] ||
          host_deg[static_cast<std::size_t>(v)] < pat_deg[static_cast<std::size_t>(u)])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        int w = order[j];
        int hv = assign[static_cast<std::size_t>(w)];
        ok = (pat.leq(u, w) == host.leq(v, hv)) && (pat.leq(w, u) == host.leq(hv, v));
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = true;
      assign[static_cast<std::size_t>(u)] = v;
      rec(k + 1);
      assign[static_cast<std::size_t>(u)] = -1;
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

std::vector<Embedding> dedup_by_image(std::vector<Embedding> all) {
  std::map<std::vector<int>, Embedding> best;
  for (auto& e : all) {
    auto it = best.find(e.image);
    if (it == best.end() || e.map < it->second.map) best[e.image] = std::move(e);
  }
  std::vector<Embedding> out;
  out.reserve(best.size());
  for (auto& [img, e] : best) out.push_back(std::move(e));
  return out;
}

}  // namespace

std::vector<Embedding> find_order_embeddings(const Poset& pattern, const Poset& host) {
  EmbeddingSearch s(pattern, host);
  s.run();
  return dedup_by_image(std::move(s.out));
}

const Poset& ml6_pattern() {
  static const Poset p = Poset::from_covers(
      "ml6",
      {"⊥", "a", "b", "c", "d", "⊤"},
      {{"⊥", "a"}, {"⊥", "b"}, {"a", "c"}, {"a", "d"},
       {"b", "c"}, {"b", "d"}, {"c", "⊤"}, {"d", "⊤"}});
  return p;
}

std::vector<Embedding> find_ml6(const Poset& host, SubmlKind kind) {
  const Poset& pat = ml6_pattern();
  EmbeddingSearch s(pat, host);
  s.run();

  // pattern-side bound sets, precomputed
  const int m = pat.size();
  std::vector<std::vector<std::vector<int>>> psup(static_cast<std::size_t>(m)),
      pinf(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    psup[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m));
    pinf[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      psup[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          multi_bounds(pat, {i, j}, MSide::Sup);
      pinf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          multi_bounds(pat, {i, j}, MSide::Inf);
    }
  }

  std::vector<Embedding> kept;
  for (auto& e : s.out) {
    // the bijection must carry the induced bound structure onto the pattern's
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i; j < m && ok; ++j) {
        auto hsup = multi_bounds(host, {e.map[static_cast<std::size_t>(i)],
                                        e.map[static_cast<std::size_t>(j)]}, MSide::Sup);
        auto hinf = multi_bounds(host, {e.map[static_cast<std::size_t>(i)],
                                        e.map[static_cast<std::size_t>(j)]}, MSide::Inf);
        if (kind == SubmlKind::Full &&
            (!std::includes(e.image.begin(), e.image.end(), hsup.begin(), hsup.end()) ||
             !std::includes(e.image.begin(), e.image.end(), hinf.begin(), hinf.end()))) {
          ok = false;
          break;
        }
        auto restrict_to_image = [&](const std::vector<int>& xs) {
          std::vector<int> out;
          std::set_intersection(xs.begin(), xs.end(), e.image.begin(), e.image.end(),
                                std::back_inserter(out));
          return out;
        };
        auto expect = [&](const std::vector<int>& pat_set) {
          std::vector<int> out;
          out.reserve(pat_set.size());
          for (int x : pat_set) out.push_back(e.map[static_cast<std::size_t>(x)]);
          std::sort(out.begin(), out.end());
          return out;
        };
        if (restrict_to_image(hsup) !=
                expect(psup[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ||
            restrict_to_image(hinf) !=
                expect(pinf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
          ok = false;
      }
    if (ok) kept.push_back(std::move(e));
  }
  return dedup_by_image(std::move(kept));
}

bool check_homomorphism(const Poset& p, const Poset& q, const std::vector<int>& map,
                        HomMode mode) {
  if (static_cast<int>(map.size()) != p.size())
    fail(Err::UnknownLabel, "homomorphism map must be total on the source carrier");
  for (int v : map)
    if (v < 0 || v >= q.size()) fail(Err::UnknownLabel, "map target out of range");

  std::vector<int> image = map;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  auto h_of = [&](const std::vector<int>& xs) {
    std::vector<int> out;
    out.reserve(xs.size());
    for (int x : xs) out.push_back(map[static_cast<std::size_t>(x)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  for (int x = 0; x < p.size(); ++x)
    for (int y = x; y < p.size(); ++y) {
      for (MSide side : {MSide::Sup, MSide::Inf}) {
        auto lhs = h_of(multi_bounds(p, {x, y}, side));
        auto rhs = multi_bounds(q, {map[static_cast<std::size_t>(x)],
                                    map[static_cast<std::size_t>(y)]}, side);
        if (mode == HomMode::Benado) {
          if (!std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end())) return false;
        } else {
          std::vector<int> rhs_in_image;
          std::set_intersection(rhs.begin(), rhs.end(), image.begin(), image.end(),
                                std::back_inserter(rhs_in_image));
          if (lhs != rhs_in_image) return false;
        }
      }
    }
  return true;
}

}  // namespace multilat
