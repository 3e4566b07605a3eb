#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/homology.hpp"

namespace nakayama {

struct SearchConfig {
  int rank = 2;
  int max_entry = 0;  /* 0 means the default bound 2n-1 */
  bool include_linear = false;
  int jobs = 0;       /* 0: NAKAYAMA_JOBS env var, else hardware concurrency */

  int entry_bound() const { return max_entry > 0 ? max_entry : 2 * rank - 1; }
};

struct CatalogRecord {
  Algebra algebra;
  HomologicalSummary summary;
  std::vector<int> epsilon_ranks;  /* ranks along the epsilon chain */
  std::string terminal;            /* textual form of the chain's last algebra */
};

/* every cyclic Kupisch series with 2 <= c_i <= max_entry and
   c_{i+1} >= c_i - 1 cyclically, exactly once up to rotation (canonical
   representatives, lexicographic order) */
void iterate_cyclic(const SearchConfig& cfg,
                    const std::function<void(const std::vector<int>&)>& fn);

/* connected linear series of the given rank (c_n = 1), lexicographic order */
void iterate_linear(const SearchConfig& cfg,
                    const std::function<void(const std::vector<int>&)>& fn);

std::set<int> expected_spectrum(int n);

/* global dimensions of the higher Auslander algebras in the census */
std::set<int> spectrum(const SearchConfig& cfg);

std::vector<CatalogRecord> find_higher_auslander(int n, int k, SearchConfig cfg);

/* all higher Auslander records of the census, canonical series ascending
   (cyclic first, then linear when enabled) */
std::vector<CatalogRecord> catalog_search(const SearchConfig& cfg);

/* m-fold cover: the Kupisch series (or component list) repeated m times */
Algebra cover(const Algebra& a, int m);

Algebra family_ladder(int d);                            /* (2^d, 1) */
Algebra family_gustafson(int n);                         /* ((n+1)^(n-1), n) */
Algebra family_comb(int a, int d);                       /* ((2^(d-1),3)^a, 2^d, 1) */
Algebra family_staircase(int n, int alpha);              /* (n^(alpha n), n, n-1, ..., 1) */
Algebra family_bracket(int n, int j);                    /* [X,Y] = (X, X-1, ..., Y+1, Y^Y) */
Algebra family_stacked(int n, int j, int alpha, int beta);

CatalogRecord make_record(const Algebra& a);

}  // namespace nakayama
