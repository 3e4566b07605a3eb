#include "nakayama/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <utility>

#include "nakayama/filtration.hpp"
#include "nakayama/text.hpp"

namespace nakayama {

namespace {

int resolve_jobs(const SearchConfig& cfg) {
  if (cfg.jobs > 0) return cfg.jobs;
  if (const char* env = std::getenv("NAKAYAMA_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void check_config(const SearchConfig& cfg) {
  if (cfg.rank < 2) throw validation_error("search rank must be at least 2");
  if (cfg.entry_bound() < 2) throw validation_error("max_entry must be at least 2");
}

/* is c the lexicographically smallest among its rotations?  The search fixes
   c_1 as the minimum entry, so only rotations starting at another minimum
   need the full comparison. */
bool minimal_rotation(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  for (int r = 1; r < n; ++r) {
    if (c[r] > c[0]) continue;
    if (c[r] < c[0]) return false;
    for (int k = 1; k < n; ++k) {
      const int a = c[(r + k) % n];
      const int b = c[k];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

/* fill positions pos..n-1 subject to 2 <= c_1 <= c_i <= E and
   c_{i+1} >= c_i - 1; at the leaf check the wrap constraint and canonicity */
template <class Fn>
void extend_cyclic(std::vector<int>& c, int pos, int max_entry, Fn&& fn) {
  const int n = static_cast<int>(c.size());
  if (pos == n) {
    if (c[0] >= c[n - 1] - 1 && minimal_rotation(c)) fn(std::as_const(c));
    return;
  }
  const int lo = std::max(c[0], c[pos - 1] - 1);
  for (int v = lo; v <= max_entry; ++v) {
    c[pos] = v;
    extend_cyclic(c, pos + 1, max_entry, fn);
  }
}

/* run the cyclic scan across jobs threads; tasks are (c_1, c_2) prefixes and
   leaf(worker, series) must be safe for concurrent calls with distinct
   worker indices */
template <class Leaf>
void scan_cyclic(const SearchConfig& cfg, Leaf&& leaf) {
  check_config(cfg);
  const int n = cfg.rank;
  const int bound = cfg.entry_bound();
  std::vector<std::pair<int, int>> tasks;
  for (int c1 = 2; c1 <= bound; ++c1)
    for (int c2 = c1; c2 <= bound; ++c2) tasks.emplace_back(c1, c2);

  const int jobs = std::min<int>(resolve_jobs(cfg), static_cast<int>(tasks.size()));
  std::atomic<size_t> next{0};
  auto run = [&](int worker) {
    std::vector<int> c(n);
    for (;;) {
      const size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      c[0] = tasks[t].first;
      c[1] = tasks[t].second;
      extend_cyclic(c, 2, bound, [&](const std::vector<int>& s) { leaf(worker, s); });
    }
  };
  if (jobs <= 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(run, w);
  for (auto& th : pool) th.join();
}

template <class Fn>
void extend_linear(std::vector<int>& c, int pos, int max_entry, Fn&& fn) {
  const int n = static_cast<int>(c.size());
  if (pos == n - 1) {
    c[pos] = 1;
    fn(std::as_const(c));
    return;
  }
  const int lo = pos == 0 ? 2 : std::max(2, c[pos - 1] - 1);
  const int hi = std::min(max_entry, n - pos);
  for (int v = lo; v <= hi; ++v) {
    c[pos] = v;
    extend_linear(c, pos + 1, max_entry, fn);
  }
}

bool all_equal(const std::vector<int>& c) {
  return std::all_of(c.begin(), c.end(), [&](int v) { return v == c[0]; });
}

void sort_records(std::vector<CatalogRecord>& records) {
  std::sort(records.begin(), records.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
    if (a.algebra.is_cyclic() != b.algebra.is_cyclic()) return a.algebra.is_cyclic();
    return a.algebra.series() < b.algebra.series();
  });
}

}  // namespace

void iterate_cyclic(const SearchConfig& cfg,
                    const std::function<void(const std::vector<int>&)>& fn) {
  check_config(cfg);
  std::vector<int> c(cfg.rank);
  const int bound = cfg.entry_bound();
  for (int c1 = 2; c1 <= bound; ++c1) {
    c[0] = c1;
    extend_cyclic(c, 1, bound, fn);
  }
}

void iterate_linear(const SearchConfig& cfg,
                    const std::function<void(const std::vector<int>&)>& fn) {
  check_config(cfg);
  std::vector<int> c(cfg.rank);
  extend_linear(c, 0, cfg.entry_bound(), fn);
}

std::set<int> expected_spectrum(int n) {
  if (n < 2) throw validation_error("spectrum is defined for rank >= 2");
  std::set<int> out;
  for (int k = 2; k <= 2 * n - 2; ++k) out.insert(k);
  out.erase(n - 1);
  if (n % 2 == 1) out.erase(2);
  return out;
}

std::set<int> spectrum(const SearchConfig& cfg) {
  std::vector<std::set<int>> partial(std::max(1, resolve_jobs(cfg)));
  scan_cyclic(cfg, [&](int worker, const std::vector<int>& s) {
    if (all_equal(s)) return;  /* self-injective, gldim is infinite */
    const Algebra a = Algebra::cyclic(s);
    const Dim g = gldim(a);
    if (g.finite() && domdim(a) == g) partial[worker].insert(g.value());
  });
  std::set<int> out;
  for (const auto& p : partial) out.insert(p.begin(), p.end());
  if (cfg.include_linear) {
    iterate_linear(cfg, [&](const std::vector<int>& s) {
      const Algebra a = Algebra::from_series(s);
      const Dim g = gldim(a);
      if (g.finite() && domdim(a) == g) out.insert(g.value());
    });
  }
  return out;
}

CatalogRecord make_record(const Algebra& a) {
  CatalogRecord r{a, summary(a), {}, {}};
  if (a.is_cyclic()) {
    const EpsilonChain chain = epsilon_chain(a);
    for (const Algebra& step : chain.steps) r.epsilon_ranks.push_back(step.rank());
    r.terminal = format_algebra(chain.steps.back());
  } else {
    r.epsilon_ranks.push_back(a.rank());
    r.terminal = format_algebra(a);
  }
  return r;
}

std::vector<CatalogRecord> catalog_search(const SearchConfig& cfg) {
  std::vector<std::vector<CatalogRecord>> partial(std::max(1, resolve_jobs(cfg)));
  scan_cyclic(cfg, [&](int worker, const std::vector<int>& s) {
    if (all_equal(s)) return;
    const Algebra a = Algebra::cyclic(s);
    const Dim g = gldim(a);
    if (g.finite() && domdim(a) == g) partial[worker].push_back(make_record(a));
  });
  std::vector<CatalogRecord> records;
  for (auto& p : partial)
    for (auto& r : p) records.push_back(std::move(r));
  if (cfg.include_linear) {
    iterate_linear(cfg, [&](const std::vector<int>& s) {
      const Algebra a = Algebra::from_series(s);
      const Dim g = gldim(a);
      if (g.finite() && domdim(a) == g) records.push_back(make_record(a));
    });
  }
  sort_records(records);
  return records;
}

std::vector<CatalogRecord> find_higher_auslander(int n, int k, SearchConfig cfg) {
  cfg.rank = n;
  std::vector<CatalogRecord> out;
  for (CatalogRecord& r : catalog_search(cfg))
    if (r.summary.gldim == k) out.push_back(std::move(r));
  return out;
}

Algebra cover(const Algebra& a, int m) {
  if (m < 1) throw validation_error("cover multiplicity must be at least 1");
  if (a.is_cyclic()) {
    std::vector<int> series;
    for (int i = 0; i < m; ++i)
      series.insert(series.end(), a.series().begin(), a.series().end());
    return Algebra::cyclic(std::move(series));
  }
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < m; ++i)
    for (const auto& comp : a.components()) comps.push_back(comp);
  return Algebra::cycle(std::move(comps));
}

namespace {

void append_copies(std::vector<int>& series, int value, int copies) {
  for (int i = 0; i < copies; ++i) series.push_back(value);
}

}  // namespace

Algebra family_ladder(int d) {
  if (d < 1) throw validation_error("ladder needs d >= 1");
  std::vector<int> s;
  append_copies(s, 2, d);
  s.push_back(1);
  return Algebra::from_series(s);
}

Algebra family_gustafson(int n) {
  if (n < 2) throw validation_error("gustafson needs n >= 2");
  std::vector<int> s;
  append_copies(s, n + 1, n - 1);
  s.push_back(n);
  return Algebra::cyclic(std::move(s));
}

Algebra family_comb(int a, int d) {
  if (a < 1 || d < 2) throw validation_error("comb needs a >= 1 and d >= 2");
  std::vector<int> s;
  for (int t = 0; t < a; ++t) {
    append_copies(s, 2, d - 1);
    s.push_back(3);
  }
  append_copies(s, 2, d);
  s.push_back(1);
  return Algebra::from_series(s);
}

Algebra family_staircase(int n, int alpha) {
  if (n < 2 || alpha < 0) throw validation_error("staircase needs n >= 2 and alpha >= 0");
  std::vector<int> s;
  append_copies(s, n, alpha * n);
  for (int v = n; v >= 1; --v) s.push_back(v);
  return Algebra::from_series(s);
}

Algebra family_bracket(int n, int j) {
  if (n < 2 || j < 1) throw validation_error("bracket needs n >= 2 and j >= 1");
  const int x = (j + 1) * n - j;
  const int y = j * n - j + 1;
  std::vector<int> s;
  for (int v = x; v > y; --v) s.push_back(v);
  append_copies(s, y, y);
  return Algebra::cyclic(std::move(s));
}

Algebra family_stacked(int n, int j, int alpha, int beta) {
  if (n < 2 || j < 1 || alpha < 0 || beta < 0)
    throw validation_error("stacked needs n >= 2, j >= 1, alpha >= 0, beta >= 0");
  const int x = (j + 1) * n - j;
  const int y = j * n - j + 1;
  std::vector<int> s;
  append_copies(s, x, alpha * x);
  for (int v = x; v > y; --v) s.push_back(v);
  append_copies(s, y, y);
  append_copies(s, y, beta * y);
  return Algebra::cyclic(std::move(s));
}

}  // namespace nakayama
