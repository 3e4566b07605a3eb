#include "nakayama/filtration.hpp"

#include <algorithm>

#include "nakayama/homology.hpp"

namespace nakayama {

namespace {

void require_cyclic(const Algebra& a, const char* op) {
  if (!a.is_cyclic())
    throw validation_error(std::string(op) + " is only defined for cyclic algebras");
}

}  // namespace

std::vector<int> socle_set(const Algebra& a) {
  require_cyclic(a, "socle_set");
  const int n = a.rank();
  std::vector<char> hit(n + 1, 0);
  for (int i = 1; i <= n; ++i) hit[a.socle(projective(a, i))] = 1;
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    if (hit[j]) out.push_back(j);
  return out;
}

BaseSet base_set(const Algebra& a) {
  require_cyclic(a, "base_set");
  const int n = a.rank();
  BaseSet b;
  b.socle_vertices = socle_set(a);
  std::vector<char> in_s(n + 1, 0);
  for (int s : b.socle_vertices) in_s[s] = 1;
  for (int s : b.socle_vertices) b.top_vertices.push_back(s % n + 1);
  std::sort(b.top_vertices.begin(), b.top_vertices.end());
  /* each Delta runs from a tau-translate of a socle down to the next socle;
     ascending top order is the cyclic order since every top is visited once */
  for (int t : b.top_vertices) {
    int len = 1;
    while (!in_s[a.vertex_after(t, len - 1)]) ++len;
    b.deltas.push_back(Module{t, len});
  }
  return b;
}

std::optional<BFiltration> b_filtration(const Algebra& a, const Module& m) {
  require_cyclic(a, "b_filtration");
  if (!a.valid_module(m)) throw validation_error("b_filtration: invalid module");
  const BaseSet b = base_set(a);
  const int n = a.rank();
  std::vector<int> delta_at_top(n + 1, -1);
  for (size_t k = 0; k < b.deltas.size(); ++k) delta_at_top[b.deltas[k].top] = static_cast<int>(k);
  std::vector<char> in_s(n + 1, 0);
  for (int s : b.socle_vertices) in_s[s] = 1;

  if (delta_at_top[m.top] < 0 || !in_s[a.socle(m)]) return std::nullopt;

  /* the Deltas tile the cycle, so walking blocks from the top consumes the
     length exactly (the module's socle is a block boundary) */
  BFiltration f;
  f.module = m;
  int remaining = m.len;
  int cur = m.top;
  while (remaining > 0) {
    const int k = delta_at_top[cur];
    f.factors.push_back(k);
    remaining -= b.deltas[k].len;
    cur = a.vertex_after(cur, b.deltas[k].len);
  }
  return f;
}

Algebra epsilon(const Algebra& a) {
  require_cyclic(a, "epsilon");
  if (a.is_self_injective()) return a;

  const BaseSet b = base_set(a);
  const int n = a.rank();
  std::vector<int> delta_at_top(n + 1, -1);
  for (size_t k = 0; k < b.deltas.size(); ++k) delta_at_top[b.deltas[k].top] = static_cast<int>(k);

  /* Kupisch entry of the new vertex at top vertex t = B-length of P(t);
     projectives of tau-translates of socles are always filtered */
  std::vector<int> entries;
  for (int t : b.top_vertices) {
    int remaining = a.kupisch(t);
    int cur = t;
    int blocks = 0;
    while (remaining > 0) {
      const Module& d = b.deltas[delta_at_top[cur]];
      remaining -= d.len;
      cur = a.vertex_after(cur, d.len);
      ++blocks;
    }
    entries.push_back(blocks);
  }

  auto one = std::find(entries.begin(), entries.end(), 1);
  if (one == entries.end()) return Algebra::cyclic(std::move(entries));

  /* entry 1 means a simple projective: the result is a cycle of linear
     components, each starting right after a 1-entry.  Rotate so the flat
     series ends with the last 1, keeping the inherited cyclic order. */
  const int r = static_cast<int>(entries.size());
  int last_one = 0;
  for (int k = 0; k < r; ++k)
    if (entries[k] == 1) last_one = k;
  std::vector<int> rotated(r);
  for (int k = 0; k < r; ++k) rotated[k] = entries[(last_one + 1 + k) % r];
  return Algebra::from_series(rotated);
}

EpsilonChain epsilon_chain(const Algebra& a, int max_steps) {
  require_cyclic(a, "epsilon_chain");
  EpsilonChain chain;
  chain.steps.push_back(a);
  while (chain.steps.back().is_cyclic() && !chain.steps.back().is_self_injective()) {
    if (static_cast<int>(chain.steps.size()) > max_steps) {
      chain.hit_step_limit = true;
      break;
    }
    chain.steps.push_back(epsilon(chain.steps.back()));
  }
  return chain;
}

}  // namespace nakayama
