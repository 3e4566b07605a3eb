#include "doctest.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "nakayama/enumerate.hpp"
#include "nakayama/filtration.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/text.hpp"

using namespace nakayama;

TEST_CASE("socle sets of the projectives") {
  CHECK(socle_set(Algebra::cyclic({3, 2})) == std::vector<int>{1});
  CHECK(socle_set(Algebra::cyclic({3, 2, 2})) == std::vector<int>{1, 3});
  CHECK(socle_set(Algebra::cyclic({3, 4, 3, 3, 2})) == std::vector<int>{1, 3, 5});
  CHECK(socle_set(Algebra::cyclic({2, 2})) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(socle_set(Algebra::from_series({2, 1})), validation_error);
}

TEST_CASE("base set tiles the cycle between consecutive socles") {
  const BaseSet b = base_set(Algebra::cyclic({3, 2}));
  CHECK(b.socle_vertices == std::vector<int>{1});
  CHECK(b.top_vertices == std::vector<int>{2});
  CHECK(b.deltas == std::vector<Module>{{2, 2}});

  const BaseSet c = base_set(Algebra::cyclic({3, 2, 2}));
  CHECK(c.socle_vertices == std::vector<int>{1, 3});
  CHECK(c.top_vertices == std::vector<int>{1, 2});
  CHECK(c.deltas == std::vector<Module>{{1, 1}, {2, 2}});

  /* the Delta lengths always sum to the rank */
  for (const auto& s : {std::vector<int>{5, 4, 4, 4, 3}, {4, 3, 3, 4, 3, 3, 4}}) {
    const BaseSet bs = base_set(Algebra::cyclic(s));
    int total = 0;
    for (const Module& d : bs.deltas) total += d.len;
    CHECK(total == static_cast<int>(s.size()));
  }
}

TEST_CASE("B-filtrations exist exactly for modules framed by the base set") {
  const Algebra a = Algebra::cyclic({3, 2, 2});

  const auto p1 = b_filtration(a, Module{1, 3});
  REQUIRE(p1.has_value());
  CHECK(p1->factors == std::vector<int>{0, 1});
  CHECK(p1->b_length() == 2);

  const auto p2 = b_filtration(a, Module{2, 2});
  REQUIRE(p2.has_value());
  CHECK(p2->factors == std::vector<int>{1});
  CHECK(p2->b_length() == 1);

  const auto s1 = b_filtration(a, Module{1, 1});
  REQUIRE(s1.has_value());
  CHECK(s1->factors == std::vector<int>{0});

  /* top not in S'(a), or socle not in S(a): not filtered */
  CHECK_FALSE(b_filtration(a, Module{3, 1}).has_value());
  CHECK_FALSE(b_filtration(a, Module{1, 2}).has_value());

  CHECK_THROWS_AS(b_filtration(a, Module{1, 9}), validation_error);
  CHECK_THROWS_AS(b_filtration(Algebra::from_series({2, 1}), Module{1, 1}), validation_error);
}

TEST_CASE("epsilon fixtures") {
  auto eps = [](const std::vector<int>& s) { return epsilon(Algebra::cyclic(s)); };

  CHECK(eps({4, 3, 3, 3}) == Algebra::cyclic({3, 2, 2}));
  CHECK(eps({3, 2, 2}) == Algebra::from_series({2, 1}));
  CHECK(eps({5, 4, 4, 3}) == Algebra::cyclic({2, 2}));
  CHECK(eps({5, 4, 4, 4, 3}) == Algebra::cyclic({3, 2, 2}));
  CHECK(eps({4, 3, 3, 3, 4, 3, 3, 3}) == Algebra::cyclic({3, 2, 2, 3, 2, 2}));
  CHECK(eps({3, 2, 2, 3, 2, 2}) == Algebra::from_series({2, 1, 2, 1}));
  CHECK(eps({5, 4, 3, 3, 3}) == Algebra::from_series({3, 2, 1}));
  CHECK(eps({5, 4, 4, 4, 4}) == Algebra::cyclic({4, 3, 3, 3}));
  CHECK(eps({3, 2}) == Algebra::from_series({1}));
  CHECK(eps({2, 3}) == Algebra::from_series({1}));
  CHECK(eps({3, 2, 3, 2, 2}) == Algebra::from_series({2, 1, 1}));
  CHECK(same_presented(eps({3, 2, 3, 2, 2}), parse_algebra("2,1|1")));
  CHECK(same_presented(eps({3, 3, 3, 4, 3, 2, 4, 3, 3, 3}), parse_algebra("3,3,3,3,2,1|1")));
  CHECK(same_presented(eps({4, 3, 3, 4, 3, 3, 4}), Algebra::cyclic({3, 2, 3, 2, 2})));

  /* self-injective algebras are fixed points */
  const Algebra si = Algebra::cyclic({3, 3, 3});
  CHECK(epsilon(si) == si);

  CHECK_THROWS_AS(epsilon(Algebra::from_series({2, 1})), validation_error);
}

TEST_CASE("epsilon chains") {
  const EpsilonChain chain = epsilon_chain(Algebra::cyclic({4, 3, 3, 3}));
  REQUIRE(chain.steps.size() == 3);
  CHECK(chain.steps[0] == Algebra::cyclic({4, 3, 3, 3}));
  CHECK(chain.steps[1] == Algebra::cyclic({3, 2, 2}));
  CHECK(chain.steps[2] == Algebra::from_series({2, 1}));
  CHECK_FALSE(chain.hit_step_limit);

  /* chains stop at self-injective algebras as well as at cycles */
  const EpsilonChain fixed = epsilon_chain(Algebra::cyclic({2, 2}));
  CHECK(fixed.steps.size() == 1);
  CHECK_FALSE(fixed.hit_step_limit);

  const EpsilonChain cut = epsilon_chain(Algebra::cyclic({4, 3, 3, 3}), 1);
  CHECK(cut.steps.size() == 2);
  CHECK(cut.hit_step_limit);
}

TEST_CASE("epsilon agrees with the B-filtration lengths and relation count") {
  for (int n = 2; n <= 5; ++n) {
    SearchConfig cfg;
    cfg.rank = n;
    iterate_cyclic(cfg, [&](const std::vector<int>& s) {
      const Algebra a = Algebra::cyclic(s);
      if (a.is_self_injective()) return;
      CAPTURE(format_algebra(a));

      const Algebra e = epsilon(a);
      /* one new vertex per distinct projective socle */
      CHECK(e.rank() == num_relations(a));

      /* projectives at base-set tops are filtered, and their B-lengths are
         the new Kupisch entries (visible directly when no entry is 1) */
      const BaseSet b = base_set(a);
      std::vector<int> lengths;
      for (int t : b.top_vertices) {
        const auto f = b_filtration(a, projective(a, t));
        REQUIRE(f.has_value());
        lengths.push_back(f->b_length());
      }
      if (e.is_cyclic()) CHECK(e.series() == lengths);

      /* every Delta runs from a socle successor down to a socle vertex, and
         together the Deltas cover each vertex exactly once */
      int total = 0;
      for (const Module& d : b.deltas) {
        const auto& sv = b.socle_vertices;
        const auto& tv = b.top_vertices;
        CHECK(std::find(sv.begin(), sv.end(), a.socle(d)) != sv.end());
        CHECK(std::find(tv.begin(), tv.end(), d.top) != tv.end());
        total += d.len;
      }
      CHECK(total == n);
    });
  }
}
