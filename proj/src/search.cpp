#include "multilat/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace multilat {

namespace {

struct Cell {
  int a, b;
  std::vector<int> domain;
};

// ---------- pocrim table search ----------

struct PocrimSearcher {
  const Poset& p;
  int top;
  std::size_t cap;
  std::vector<Cell> cells;
  OpTable t;
  std::vector<PocrimTables> found;
  std::uint64_t nodes = 0;
  bool capped = false;
  Algebra probe;

  PocrimSearcher(const Poset& poset, int top_, std::size_t cap_, std::vector<Cell> cells_)
      : p(poset), top(top_), cap(cap_), cells(std::move(cells_)), t(poset.size()) {
    for (int x = 0; x < p.size(); ++x) {
      t.set(top, x, x);
      t.set(x, top, x);
    }
    probe.poset = p;
    probe.top = top;
    if (auto mn = p.minimum()) probe.bottom = *mn;
  }

  bool decided(int a, int b) const { return t.at(a, b) >= 0; }

  bool mono_ok(int i, int j, int v) const {
    // against every decided cell sharing a coordinate
    for (int a = 0; a < p.size(); ++a) {
      if (a != i && decided(a, j)) {
        if (p.leq(a, i) && !p.leq(t.at(a, j), v)) return false;
        if (p.leq(i, a) && !p.leq(v, t.at(a, j))) return false;
      }
      if (a != j && decided(i, a)) {
        if (p.leq(a, j) && !p.leq(t.at(i, a), v)) return false;
        if (p.leq(j, a) && !p.leq(v, t.at(i, a))) return false;
      }
      if (i != j) {
        if (a != i && decided(a, i)) {
          if (p.leq(a, j) && !p.leq(t.at(a, i), v)) return false;
          if (p.leq(j, a) && !p.leq(v, t.at(a, i))) return false;
        }
        if (a != j && decided(j, a)) {
          if (p.leq(a, i) && !p.leq(t.at(j, a), v)) return false;
          if (p.leq(i, a) && !p.leq(v, t.at(j, a))) return false;
        }
      }
    }
    return true;
  }

  // products of the triple {i, j, k} that are already computable must agree
  bool assoc_ok(int i, int j) const {
    for (int k = 0; k < p.size(); ++k) {
      int vals[3];
      int cnt = 0;
      const int ij = t.at(i, j), jk = t.at(j, k), ik = t.at(i, k);
      if (ij >= 0 && decided(ij, k)) vals[cnt++] = t.at(ij, k);
      if (jk >= 0 && decided(i, jk)) vals[cnt++] = t.at(i, jk);
      if (ik >= 0 && decided(j, ik)) vals[cnt++] = t.at(j, ik);
      for (int x = 1; x < cnt; ++x)
        if (vals[x] != vals[0]) return false;
    }
    return true;
  }

  bool row_complete(int r) const {
    for (int x = 0; x < p.size(); ++x)
      if (!decided(r, x)) return false;
    return true;
  }

  bool residuals_ok(int r) const {
    for (int y = 0; y < p.size(); ++y)
      if (!residual_of(p, t, r, y)) return false;
    return true;
  }

  void run(std::size_t first_cell) { rec(first_cell); }

  void rec(std::size_t k) {
    if (found.size() >= cap) {
      capped = true;
      return;
    }
    if (k == cells.size()) {
      probe.mul = t;
      probe.imp.reset();
      if (verify_pocrim(probe).ok()) {
        auto imp = derive_implication(p, t);
        found.push_back({t, *imp});
      }
      return;
    }
    const auto& [i, j, domain] = cells[k];
    for (int v : domain) {
      if (!mono_ok(i, j, v)) continue;
      t.set(i, j, v);
      t.set(j, i, v);
      bool ok = assoc_ok(i, j);
      if (ok && row_complete(i)) ok = residuals_ok(i);
      if (ok && i != j && row_complete(j)) ok = residuals_ok(j);
      if (ok) {
        ++nodes;
        rec(k + 1);
      }
      t.set(i, j, -1);
      t.set(j, i, -1);
      if (capped) return;
    }
  }
};

std::vector<Cell> pocrim_cells(const Poset& p, int top) {
  std::vector<Cell> cells;
  for (int i = 0; i < p.size(); ++i) {
    if (i == top) continue;
    for (int j = i; j < p.size(); ++j) {
      if (j == top) continue;
      Cell c{i, j, {}};
      for (int z = 0; z < p.size(); ++z)
        if (p.leq(z, i) && p.leq(z, j)) c.domain.push_back(z);  // P1
      cells.push_back(std::move(c));
    }
  }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    return x.domain.size() < y.domain.size();
  });
  return cells;
}

// splits the first decision cell across tasks; each task is deterministic and
// results are concatenated in task order, so any worker count gives the same
// output.
template <typename Searcher, typename Result, typename Extract>
Result run_tasks(const Poset& p, int top, const SearchConfig& cfg, std::vector<Cell> cells,
                 Extract extract) {
  Result out;
  if (cells.empty()) {
    Searcher s(p, top, cfg.cap, cells);
    s.run(0);
    out.found = extract(s);
    out.nodes = s.nodes;
    out.exhaustive = !s.capped;
    return out;
  }

  const auto& first = cells.front();
  const std::size_t ntasks = first.domain.size();
  std::vector<Result> partial(ntasks);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    while (true) {
      std::size_t ti = next.fetch_add(1);
      if (ti >= ntasks) return;
      Searcher s(p, top, cfg.cap, cells);
      // pin the first cell to one candidate; keep full propagation
      s.cells[0].domain = {first.domain[ti]};
      s.run(0);
      partial[ti].found = extract(s);
      partial[ti].nodes = s.nodes;
      partial[ti].exhaustive = !s.capped;
    }
  };

  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& part : partial) {
    out.nodes += part.nodes;
    if (!part.exhaustive) out.exhaustive = false;
    for (auto& f : part.found) {
      if (out.found.size() >= cfg.cap) {
        out.exhaustive = false;
        break;
      }
      out.found.push_back(std::move(f));
    }
  }
  std::sort(out.found.begin(), out.found.end());
  return out;
}

}  // namespace

PocrimSearchResult enumerate_pocrims(const Poset& p, int top, SearchConfig cfg) {
  if (cfg.cap < 1) fail(Err::ShapeMismatch, "result cap must be at least 1");
  if (auto mx = p.maximum(); !mx || *mx != top)
    fail(Err::NotAMaximum, "designated top is not the maximum of the poset");
  return run_tasks<PocrimSearcher, PocrimSearchResult>(
      p, top, cfg, pocrim_cells(p, top), [](PocrimSearcher& s) { return std::move(s.found); });
}

namespace {

// ---------- implication table search ----------

struct ImpSearcher {
  const Poset& p;
  int top;
  std::size_t cap;
  std::vector<Cell> cells;
  unsigned axioms;
  OpTable t;
  std::vector<OpTable> found;
  std::uint64_t nodes = 0;
  bool capped = false;

  ImpSearcher(const Poset& poset, int top_, std::size_t cap_, std::vector<Cell> cells_,
              unsigned axioms_)
      : p(poset), top(top_), cap(cap_), cells(std::move(cells_)), axioms(axioms_),
        t(poset.size()) {}

  bool decided(int a, int b) const { return t.at(a, b) >= 0; }

  bool p4_ok(int i, int j, int v) const {
    for (int x = 0; x < p.size(); ++x) {
      if (x != j && decided(i, x)) {  // isotone in the right argument
        if (p.leq(x, j) && !p.leq(t.at(i, x), v)) return false;
        if (p.leq(j, x) && !p.leq(v, t.at(i, x))) return false;
      }
      if (x != i && decided(x, j)) {  // antitone in the left argument
        if (p.leq(x, i) && !p.leq(v, t.at(x, j))) return false;
        if (p.leq(i, x) && !p.leq(t.at(x, j), v)) return false;
      }
    }
    return true;
  }

  bool leaf_ok() const {
    if (axioms & kAxiomP4Imp) {
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
          if (!p.leq(a, b)) continue;
          for (int c = 0; c < p.size(); ++c)
            if (!p.leq(t.at(c, a), t.at(c, b)) || !p.leq(t.at(b, c), t.at(a, c))) return false;
        }
    }
    if (axioms & kAxiomP5) {
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
          for (int c = 0; c < p.size(); ++c)
            if (t.at(a, t.at(b, c)) != t.at(b, t.at(a, c))) return false;
    }
    return true;
  }

  void run(std::size_t first_cell) { rec(first_cell); }

  void rec(std::size_t k) {
    if (found.size() >= cap) {
      capped = true;
      return;
    }
    if (k == cells.size()) {
      if (leaf_ok()) found.push_back(t);
      return;
    }
    const auto& [i, j, domain] = cells[k];
    for (int v : domain) {
      if ((axioms & kAxiomP4Imp) && !p4_ok(i, j, v)) continue;
      t.set(i, j, v);
      ++nodes;
      rec(k + 1);
      t.set(i, j, -1);
      if (capped) return;
    }
  }
};

std::vector<Cell> imp_cells(const Poset& p, int top, unsigned axioms) {
  std::vector<Cell> cells;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      Cell c{i, j, {}};
      for (int v = 0; v < p.size(); ++v) {
        if (axioms & kAxiomP3) {
          if (p.leq(i, j) != (v == top)) continue;
        }
        if ((axioms & kAxiomWeakening) && !p.leq(j, v)) continue;
        if ((axioms & kAxiomTopIdentity) && i == top && v != j) continue;
        c.domain.push_back(v);
      }
      cells.push_back(std::move(c));
    }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    return x.domain.size() < y.domain.size();
  });
  return cells;
}

}  // namespace

ImpSearchResult enumerate_implications(const Poset& p, int top, unsigned axioms,
                                       SearchConfig cfg) {
  if (cfg.cap < 1) fail(Err::ShapeMismatch, "result cap must be at least 1");
  if (axioms == 0) fail(Err::EmptySelection, "pick at least one axiom");
  if (auto mx = p.maximum(); !mx || *mx != top)
    fail(Err::NotAMaximum, "designated top is not the maximum of the poset");
  struct Extract {
    std::vector<OpTable> operator()(ImpSearcher& s) const { return std::move(s.found); }
  };
  auto cells = imp_cells(p, top, axioms);
  auto mk = [&](std::vector<Cell> cs) {
    return ImpSearcher(p, top, cfg.cap, std::move(cs), axioms);
  };
  // same task scheme as the pocrim search, inlined because of the extra ctor arg
  ImpSearchResult out;
  if (cells.empty()) {
    auto s = mk(cells);
    s.run(0);
    out.found = std::move(s.found);
    out.nodes = s.nodes;
    out.exhaustive = !s.capped;
    return out;
  }
  const auto first = cells.front();
  const std::size_t ntasks = first.domain.size();
  std::vector<ImpSearchResult> partial(ntasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t ti = next.fetch_add(1);
      if (ti >= ntasks) return;
      auto s = mk(cells);
      s.cells[0].domain = {first.domain[ti]};
      s.run(0);
      partial[ti].found = std::move(s.found);
      partial[ti].nodes = s.nodes;
      partial[ti].exhaustive = !s.capped;
    }
  };
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& part : partial) {
    out.nodes += part.nodes;
    if (!part.exhaustive) out.exhaustive = false;
    for (auto& f : part.found) {
      if (out.found.size() >= cfg.cap) {
        out.exhaustive = false;
        break;
      }
      out.found.push_back(std::move(f));
    }
  }
  std::sort(out.found.begin(), out.found.end());
  return out;
}

namespace {

// ---------- unlabeled poset generation ----------

using Strict = std::vector<std::uint8_t>;  // m*m, lt matrix

Strict canonical_form(const Strict& lt, int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
  Strict best;
  Strict cur(static_cast<std::size_t>(m) * m);
  do {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        cur[static_cast<std::size_t>(i) * m + j] =
            lt[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * m +
               perm[static_cast<std::size_t>(j)]];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Strict> all_middle_posets(int m) {
  std::vector<Strict> level{Strict{}};
  for (int k = 0; k < m; ++k) {
    std::set<Strict> next;
    for (const auto& lt : level) {
      // add element k as a new maximal element above a down-closed subset
      for (unsigned bits = 0; bits < (1u << k); ++bits) {
        bool closed = true;
        for (int i = 0; i < k && closed; ++i) {
          if (!(bits >> i & 1u)) continue;
          for (int j = 0; j < k; ++j)
            if (lt[static_cast<std::size_t>(j) * k + i] && !(bits >> j & 1u)) {
              closed = false;
              break;
            }
        }
        if (!closed) continue;
        const int nk = k + 1;
        Strict ext(static_cast<std::size_t>(nk) * nk, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            ext[static_cast<std::size_t>(i) * nk + j] = lt[static_cast<std::size_t>(i) * k + j];
        for (int i = 0; i < k; ++i)
          if (bits >> i & 1u) ext[static_cast<std::size_t>(i) * nk + k] = 1;
        next.insert(canonical_form(ext, nk));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

}  // namespace

std::vector<Poset> enumerate_posets_with_maximum(int n) {
  if (n < 1) fail(Err::SizeTooLarge, "need at least one element");
  if (n > 6) fail(Err::SizeTooLarge, "poset generation is capped at 6 elements");
  const int m = n - 1;
  std::vector<Poset> out;
  int idx = 0;
  for (const auto& lt : all_middle_posets(m)) {
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("m" + std::to_string(i));
    labels.push_back("⊤");
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      leq[static_cast<std::size_t>(i) * n + i] = 1;
      leq[static_cast<std::size_t>(i) * n + (n - 1)] = 1;
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (lt[static_cast<std::size_t>(i) * m + j])
          leq[static_cast<std::size_t>(i) * n + j] = 1;
    out.push_back(Poset::from_leq("tp" + std::to_string(n) + "-" + std::to_string(idx++),
                                  std::move(labels), std::move(leq)));
  }
  return out;
}

std::vector<Poset> enumerate_bounded_posets(int n) {
  if (n < 1) fail(Err::SizeTooLarge, "need at least one element");
  if (n > 7) fail(Err::SizeTooLarge, "bounded poset generation is capped at 7 elements");
  std::vector<Poset> out;
  if (n == 1) {
    out.push_back(Poset::from_covers("bp1-0", {"⊤"}, {}));
    return out;
  }
  const int m = n - 2;
  auto mids = all_middle_posets(m);
  int idx = 0;
  for (const auto& lt : mids) {
    std::vector<std::string> labels;
    labels.push_back("⊥");
    for (int i = 0; i < m; ++i) labels.push_back("m" + std::to_string(i));
    labels.push_back("⊤");
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      leq[static_cast<std::size_t>(i) * n + i] = 1;
      leq[static_cast<std::size_t>(0) * n + i] = 1;
      leq[static_cast<std::size_t>(i) * n + (n - 1)] = 1;
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (lt[static_cast<std::size_t>(i) * m + j])
          leq[static_cast<std::size_t>(i + 1) * n + (j + 1)] = 1;
    out.push_back(Poset::from_leq("bp" + std::to_string(n) + "-" + std::to_string(idx++),
                                  std::move(labels), std::move(leq)));
  }
  return out;
}

}  // namespace multilat
