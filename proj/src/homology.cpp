#include "nakayama/homology.hpp"

#include <algorithm>

namespace nakayama {

Module projective(const Algebra& a, int i) { return Module{i, a.kupisch(i)}; }

bool is_projective(const Algebra& a, const Module& m) {
  return m.zero() || m.len == a.kupisch(m.top);
}

Module injective_envelope(const Algebra& a, int j) {
  const int n = a.rank();
  if (a.is_cyclic()) {
    /* over every top t, the longest length l <= c_t with l = j - t + 1 (mod n);
       lengths above n wrap the cycle and still end at the same socle vertex */
    Module best = Module::zero_module();
    for (int t = 1; t <= n; ++t) {
      int r = (j - t) % n;
      if (r < 0) r += n;
      r += 1;
      const int c = a.kupisch(t);
      if (c < r) continue;
      const int l = r + (c - r) / n * n;
      if (l > best.len) best = Module{t, l};
    }
    return best;
  }
  for (int t = a.comp_first(j); t <= j; ++t)
    if (a.kupisch(t) >= j - t + 1) return Module{t, j - t + 1};
  return Module{j, 1};  /* t == j always qualifies, so this is unreachable */
}

bool is_injective(const Algebra& a, const Module& m) {
  return !m.zero() && injective_envelope(a, a.socle(m)) == m;
}

Module syzygy(const Algebra& a, const Module& m) {
  const int c = a.kupisch(m.top);
  if (m.len == c) return Module::zero_module();
  return Module{a.vertex_after(m.top, m.len), c - m.len};
}

Module cosyzygy(const Algebra& a, const Module& m) {
  const Module i = injective_envelope(a, a.socle(m));
  if (i.len == m.len) return Module::zero_module();
  return Module{i.top, i.len - m.len};
}

namespace {

constexpr int kUnknown = -3;
constexpr int kOnPath = -2;
constexpr int kInfinite = -1;

/* Memo table for projective dimensions over the whole uniserial state space
   of one algebra.  State (t,l) has id off[t-1] + l - 1 and the deterministic
   successor syzygy(t,l); projective states are terminal with pdim 0 and a
   revisited in-progress state means the walk entered a cycle, i.e. infinite
   projective dimension for everything on the path.  The buffers are reused
   across calls on the same thread, which keeps the census loops allocation
   free. */
struct SyzygyTable {
  const Algebra* a = nullptr;
  std::vector<int> off;
  std::vector<int> memo;
  std::vector<int> path;

  void reset(const Algebra& alg) {
    a = &alg;
    const int n = alg.rank();
    off.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) off[v] = off[v - 1] + alg.kupisch(v);
    memo.assign(off[n], kUnknown);
  }

  int id(int top, int len) const { return off[top - 1] + len - 1; }

  /* pdim of the module (top,len); kInfinite for infinite */
  int solve(int top, int len) {
    if (memo[id(top, len)] != kUnknown) return memo[id(top, len)];
    path.clear();
    int t = top, l = len;
    int base;
    for (;;) {
      const int cur = id(t, l);
      const int known = memo[cur];
      if (known == kUnknown) {
        const int c = a->kupisch(t);
        if (l == c) {
          memo[cur] = 0;
          base = 0;
          break;
        }
        memo[cur] = kOnPath;
        path.push_back(cur);
        const int nt = a->vertex_after(t, l);
        l = c - l;
        t = nt;
      } else if (known == kOnPath) {
        base = kInfinite;
        break;
      } else {
        base = known;
        break;
      }
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      memo[*it] = base == kInfinite ? kInfinite : ++base;
    return memo[id(top, len)];
  }
};

SyzygyTable& syzygy_table() {
  thread_local SyzygyTable table;
  return table;
}

bool single_vertex_component(const Algebra& a, int v) {
  return !a.is_cyclic() && a.comp_first(v) == a.comp_last(v);
}

}  // namespace

Dim pdim(const Algebra& a, const Module& m) {
  if (is_projective(a, m)) return Dim::of(0);
  auto& table = syzygy_table();
  table.reset(a);
  const int p = table.solve(m.top, m.len);
  return p == kInfinite ? Dim::inf() : Dim::of(p);
}

Dim gldim(const Algebra& a) {
  auto& table = syzygy_table();
  table.reset(a);
  int best = 0;
  for (int v = 1; v <= a.rank(); ++v) {
    const int p = table.solve(v, 1);
    if (p == kInfinite) return Dim::inf();
    best = std::max(best, p);
  }
  return Dim::of(best);
}

int findim(const Algebra& a) {
  auto& table = syzygy_table();
  table.reset(a);
  int best = 0;
  for (int v = 1; v <= a.rank(); ++v)
    for (int l = 1; l <= a.kupisch(v); ++l) {
      const int p = table.solve(v, l);
      if (p != kInfinite) best = std::max(best, p);
    }
  return best;
}

Dim domdim(const Algebra& a) {
  const int n = a.rank();
  std::vector<Module> env(n + 1);
  for (int j = 1; j <= n; ++j) env[j] = injective_envelope(a, j);

  std::vector<int> off(n + 1, 0);
  for (int v = 1; v <= n; ++v) off[v] = off[v - 1] + a.kupisch(v);
  std::vector<char> seen;

  Dim best = Dim::inf();
  bool all_projective_injective = true;
  for (int i = 1; i <= n; ++i) {
    const Module p = projective(a, i);
    if (env[a.socle(p)] == p) continue;
    all_projective_injective = false;

    /* count the projective prefix of the minimal injective coresolution of p;
       when the term under inspection is not projective the count stops, when
       the module itself became injective (or the walk revisits a state) every
       later term is projective too */
    seen.assign(off[n], 0);
    Module m = p;
    Dim count = Dim::inf();
    for (int k = 0;; ++k) {
      const Module term = env[a.socle(m)];
      if (term.len != a.kupisch(term.top)) {
        count = Dim::of(k);
        break;
      }
      if (m == term) break;
      const int sid = off[m.top - 1] + m.len - 1;
      if (seen[sid]) break;
      seen[sid] = 1;
      m = Module{term.top, term.len - m.len};
    }
    best = Dim::min(best, count);
  }
  return all_projective_injective ? Dim::inf() : best;
}

int defect(const Algebra& a) {
  /* injective modules that are not projective; a single-vertex component has
     none of those but carries defect one so that rank = relations + defect
     stays true componentwise */
  int count = 0;
  for (int j = 1; j <= a.rank(); ++j) {
    if (single_vertex_component(a, j)) {
      ++count;
      continue;
    }
    const Module i = injective_envelope(a, j);
    if (i.len != a.kupisch(i.top)) ++count;
  }
  return count;
}

int defect_of_projective(const Algebra& a, int i) {
  if (single_vertex_component(a, i)) return 1;
  int count = 0;
  for (int q = 1; q < a.kupisch(i); ++q)
    if (is_injective(a, Module{i, q})) ++count;
  return count;
}

RelationSystem relations(const Algebra& a) {
  RelationSystem rs;
  const int n = a.rank();
  std::vector<std::vector<int>> by_socle(n + 1);
  for (int i = 1; i <= n; ++i) by_socle[a.socle(projective(a, i))].push_back(i);
  for (int j = 1; j <= n; ++j)
    if (!by_socle[j].empty()) rs.projective_classes.push_back(by_socle[j]);
  for (int i = 1; i <= n; ++i)
    if (is_injective(a, projective(a, i))) rs.projective_injective_vertices.push_back(i);
  for (const auto& cls : rs.projective_classes) {
    int best = cls.front();
    for (int i : cls)
      if (a.kupisch(i) < a.kupisch(best)) best = i;
    if (single_vertex_component(a, best)) continue;
    rs.pairs.emplace_back(best, a.socle(projective(a, best)));
  }
  return rs;
}

int num_relations(const Algebra& a) {
  const int n = a.rank();
  std::vector<char> hit(n + 1, 0);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (single_vertex_component(a, i)) continue;
    const int s = a.socle(projective(a, i));
    if (!hit[s]) {
      hit[s] = 1;
      ++count;
    }
  }
  return count;
}

bool is_gorenstein(const Algebra& a) {
  for (int j = 1; j <= a.rank(); ++j)
    if (!pdim(a, injective_envelope(a, j)).finite()) return false;
  return true;
}

bool is_higher_auslander(const Algebra& a) {
  const Dim g = gldim(a);
  return g.finite() && g == domdim(a);
}

HomologicalSummary summary(const Algebra& a) {
  HomologicalSummary s;
  s.gldim = gldim(a);
  s.domdim = domdim(a);
  s.findim = findim(a);
  s.defect = defect(a);
  s.num_relations = num_relations(a);
  s.is_self_injective = a.is_self_injective();
  s.is_gorenstein = is_gorenstein(a);
  s.is_higher_auslander = s.gldim.finite() && s.gldim == s.domdim;
  return s;
}

std::vector<Module> module_census(const Algebra& a) {
  std::vector<Module> out;
  for (int v = 1; v <= a.rank(); ++v)
    for (int l = 1; l <= a.kupisch(v); ++l) out.push_back(Module{v, l});
  return out;
}

}  // namespace nakayama
