#pragma once

#include <cstdint>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/* d(i) = defect of the projective at the tau-successor of vertex i; exactly
   d(i) new vertices are inserted after vertex i in the reverse construction */
std::vector<int> defect_vector(const Algebra& a);

/* The unique cyclic algebra L' with epsilon(L') isomorphic to a, of rank
   rank(a) + defect(a).  Always verifies epsilon(L') against a and the defect
   equality before returning; a failed check throws self_check_error. */
Algebra reverse_epsilon(const Algebra& a);

std::vector<Algebra> reverse_chain(const Algebra& a, int steps);

/* all distinct cyclic orderings of the component multiset, up to rotation */
std::vector<Algebra> cycle_orderings(const std::vector<std::vector<int>>& components);

/* necklace number N_t(n) = (1/n) sum over p | n of phi(p) t^(n/p) */
std::uint64_t necklace_count(std::uint64_t t, std::uint64_t n);

}  // namespace nakayama
