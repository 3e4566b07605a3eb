#include "nakayama/reverse.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nakayama/filtration.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/text.hpp"

namespace nakayama {

namespace {

/* ascending lengths q < c_v with (v,q) injective; a single-vertex component
   contributes the conventional list {1}, matching its defect of one */
std::vector<int> injective_quotient_lengths(const Algebra& a, int v) {
  if (!a.is_cyclic() && a.comp_first(v) == a.comp_last(v)) return {1};
  std::vector<int> out;
  for (int q = 1; q < a.kupisch(v); ++q)
    if (is_injective(a, Module{v, q})) out.push_back(q);
  return out;
}

}  // namespace

std::vector<int> defect_vector(const Algebra& a) {
  std::vector<int> d(a.rank());
  for (int i = 1; i <= a.rank(); ++i) d[i - 1] = defect_of_projective(a, a.tau(i));
  return d;
}

Algebra reverse_epsilon(const Algebra& a) {
  const int n = a.rank();

  /* vertex i of a becomes a block: the inherited vertex followed by d(i) new
     vertices, one per injective proper quotient of the projective at tau(i) */
  std::vector<std::vector<int>> quotients(n + 1);
  std::vector<int> block_len(n + 1, 0);
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    quotients[i] = injective_quotient_lengths(a, a.tau(i));
    block_len[i] = static_cast<int>(quotients[i].size()) + 1;
    total += block_len[i];
  }

  /* sum of `count` consecutive block lengths starting at block `first`;
     counts above n wrap around the whole cycle */
  auto span = [&](int first, int count) {
    int s = count / n * total;
    for (int u = 0; u < count % n; ++u) s += block_len[(first - 1 + u) % n + 1];
    return s;
  };

  std::vector<int> series;
  series.reserve(total);
  for (int i = 1; i <= n; ++i) {
    const int d = block_len[i] - 1;
    /* the inherited projective spans c_i blocks */
    series.push_back(span(i, a.kupisch(i)));
    /* the j-th new projective covers the rest of its own block and then the
       blocks spanned by the j-th smallest injective quotient */
    for (int j = 1; j <= d; ++j)
      series.push_back(d - j + 1 + span(i % n + 1, quotients[i][j - 1]));
  }

  Algebra out = Algebra::cyclic(std::move(series));
  if (!same_presented(epsilon(out), a))
    throw self_check_error("reverse construction of " + format_algebra(a) +
                           " failed the round trip: produced " + format_algebra(out));
  if (defect(out) != defect(a))
    throw self_check_error("reverse construction of " + format_algebra(a) +
                           " changed the defect: produced " + format_algebra(out));
  return out;
}

std::vector<Algebra> reverse_chain(const Algebra& a, int steps) {
  std::vector<Algebra> chain{a};
  for (int k = 0; k < steps; ++k) chain.push_back(reverse_epsilon(chain.back()));
  return chain;
}

std::vector<Algebra> cycle_orderings(const std::vector<std::vector<int>>& components) {
  if (components.empty()) throw validation_error("no components");
  std::vector<std::vector<int>> comps = components;
  std::sort(comps.begin(), comps.end());

  /* canonical representative per rotation class, collected over all
     permutations of the component multiset */
  std::set<std::vector<std::vector<int>>> reps;
  do {
    const int t = static_cast<int>(comps.size());
    std::vector<std::vector<int>> best = comps;
    for (int r = 1; r < t; ++r) {
      std::vector<std::vector<int>> rot(comps.begin() + r, comps.end());
      rot.insert(rot.end(), comps.begin(), comps.begin() + r);
      if (rot < best) best = rot;
    }
    reps.insert(best);
  } while (std::next_permutation(comps.begin(), comps.end()));

  std::vector<Algebra> out;
  for (const auto& rep : reps) out.push_back(Algebra::cycle(rep));
  return out;
}

namespace {

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

std::uint64_t necklace_count(std::uint64_t t, std::uint64_t n) {
  if (n == 0) throw validation_error("necklace length must be positive");
  std::uint64_t sum = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) sum += euler_phi(d) * ipow(t, n / d);
  return sum / n;
}

}  // namespace nakayama
