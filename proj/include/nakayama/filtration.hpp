#pragma once

#include <optional>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/* The Delta-modules: each runs from the tau-translate of a socle vertex down
   to the next socle vertex; together they tile the cycle.  Listed in cyclic
   order starting at the Delta with the smallest top vertex. */
struct BaseSet {
  std::vector<Module> deltas;
  std::vector<int> socle_vertices;  /* S(a), ascending */
  std::vector<int> top_vertices;    /* S'(a), ascending */
};

struct BFiltration {
  Module module;
  std::vector<int> factors;  /* indices into BaseSet::deltas, top first */
  int b_length() const { return static_cast<int>(factors.size()); }
};

struct EpsilonChain {
  std::vector<Algebra> steps;  /* starts with the input algebra */
  bool hit_step_limit = false;
};

std::vector<int> socle_set(const Algebra& a);
BaseSet base_set(const Algebra& a);

/* a module is B-filtered iff its top lies in S'(a) and its socle in S(a);
   non-filtered modules get nullopt (a normal result, not an error) */
std::optional<BFiltration> b_filtration(const Algebra& a, const Module& m);

/* the syzygy filtered algebra: Kupisch entries are the B-lengths of the
   projectives indexed by S'(a); self-injective input is a fixed point */
Algebra epsilon(const Algebra& a);

EpsilonChain epsilon_chain(const Algebra& a, int max_steps = 64);

}  // namespace nakayama
