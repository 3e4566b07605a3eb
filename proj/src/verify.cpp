#include "nakayama/verify.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/filtration.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/reverse.hpp"
#include "nakayama/text.hpp"

namespace nakayama {

namespace {

void expect(VerifyResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (!ok) r.failures.push_back(what);
}

std::string tag(const Algebra& a) { return format_algebra(a); }

/* gldim(a) = gldim(e) + 2 when 2 <= gldim(a) < inf, domdim(a) = domdim(e) + 2
   when domdim(a) >= 3, findim(a) = findim(e) + 2 when findim(a) >= 2 */
void check_reduction_identities(VerifyResult& r, const Algebra& a) {
  const Algebra e = epsilon(a);
  const Dim g = gldim(a);
  if (g.finite() && g.value() >= 2)
    expect(r, gldim(e) + 2 == g, "gldim reduction fails for " + tag(a));
  const Dim d = domdim(a);
  if (Dim::of(3) <= d)
    expect(r, domdim(e) + 2 == d, "domdim reduction fails for " + tag(a));
  const int f = findim(a);
  if (f >= 2)
    expect(r, findim(e) + 2 == f, "findim reduction fails for " + tag(a));
}

VerifyResult verify_reductions(int) {
  VerifyResult r{"reductions", 0, {}};
  for (int n = 2; n <= 6; ++n) {
    SearchConfig cfg;
    cfg.rank = n;
    cfg.max_entry = 2 * n;
    iterate_cyclic(cfg, [&](const std::vector<int>& series) {
      const Algebra a = Algebra::cyclic(series);
      if (a.is_self_injective()) return;
      check_reduction_identities(r, a);
    });
  }
  return r;
}

/* census of canonical cyclic higher Auslander algebras with gldim >= 3 */
std::vector<CatalogRecord> steep_census(int jobs) {
  std::vector<CatalogRecord> out;
  for (int n = 2; n <= 7; ++n) {
    SearchConfig cfg;
    cfg.rank = n;
    cfg.jobs = jobs;
    for (CatalogRecord& rec : catalog_search(cfg)) {
      if (Dim::of(3) <= rec.summary.gldim) out.push_back(std::move(rec));
    }
  }
  return out;
}

VerifyResult verify_theorem_a(int jobs) {
  VerifyResult r{"theorem-a", 0, {}};
  for (const CatalogRecord& rec : steep_census(jobs)) {
    const Algebra& a = rec.algebra;
    const Algebra e = epsilon(a);
    const HomologicalSummary se = summary(e);
    expect(r, se.is_higher_auslander,
           "image not higher Auslander for " + tag(a));
    expect(r, se.defect == rec.summary.defect,
           "defect not preserved for " + tag(a));
    expect(r, se.gldim + 2 == rec.summary.gldim,
           "gldim does not drop by 2 for " + tag(a));
    expect(r, se.domdim + 2 == rec.summary.domdim,
           "domdim does not drop by 2 for " + tag(a));
  }
  return r;
}

VerifyResult verify_roundtrip(int jobs) {
  VerifyResult r{"roundtrip", 0, {}};
  for (const CatalogRecord& rec : steep_census(jobs)) {
    const Algebra& a = rec.algebra;
    try {
      expect(r, same_presented(reverse_epsilon(epsilon(a)), a),
             "reverse of image differs from " + tag(a));
    } catch (const self_check_error& err) {
      expect(r, false, "self check fired for " + tag(a) + ": " + err.what());
    }
  }
  return r;
}

VerifyResult verify_theorem_d(int) {
  VerifyResult r{"theorem-d", 0, {}};
  for (int n = 2; n <= 5; ++n) {
    SearchConfig cfg;
    cfg.rank = n;
    cfg.max_entry = 8;
    iterate_cyclic(cfg, [&](const std::vector<int>& series) {
      const Algebra a = Algebra::cyclic(series);
      const Algebra e = epsilon(a);
      for (int m = 2; m <= 3; ++m) {
        expect(r, same_presented(epsilon(cover(a, m)), cover(e, m)),
               "cover of degree " + std::to_string(m) +
                   " does not commute for " + tag(a));
      }
    });
  }
  const Algebra doubled = cover(Algebra::cyclic({5, 4, 4, 3}), 2);
  expect(r, same_presented(epsilon(doubled),
                           Algebra::cyclic({2, 2, 2, 2})),
         "doubled (5,4,4,3) image is not (2,2,2,2)");
  return r;
}

void check_exact(VerifyResult& r, const Algebra& got, const std::string& want,
                 const std::string& what) {
  expect(r, same_presented(got, parse_algebra(want)),
         what + ": got " + tag(got) + ", want " + want);
}

VerifyResult verify_chains(int) {
  VerifyResult r{"chains", 0, {}};
  const struct {
    std::string start;
    std::vector<std::string> steps;
  } chains[] = {
      {"2,3,2,2,1",
       {"3,3,3,3,2,3,2", "3,3,4,4,3,4,4,3,3", "4,4,4,5,5,5,4,4,4,4,3"}},
      {"2,2,1|2,3,2,2,1",
       {"3,2,3,3,3,3,2,3,2,2,2", "4,4,3,3,3,3,4,4,3,3,3,2,3,3",
        "4,4,3,4,4,4,4,4,4,3,4,4,3,4,4,4,4",
        "5,5,4,4,4,4,4,5,5,5,4,5,5,5,4,4,4,4,4,5"}},
      {"2,1|3,2,1",
       {"4,3,3,3,4,3,2,2", "5,4,4,4,4,6,5,4,4,4,4",
        "7,6,6,6,6,6,6,7,6,5,5,5,5,5"}},
  };
  for (const auto& c : chains) {
    const Algebra start = parse_algebra(c.start);
    const std::vector<Algebra> got =
        reverse_chain(start, static_cast<int>(c.steps.size()));
    for (size_t i = 0; i < c.steps.size(); ++i) {
      check_exact(r, got[i + 1], c.steps[i],
                  "chain from " + c.start + ", step " + std::to_string(i + 1));
      /* each lift must undo to its predecessor */
      expect(r, same_presented(epsilon(got[i + 1]), got[i]),
             "chain from " + c.start + ", step " + std::to_string(i + 1) +
                 " does not reduce back");
    }
  }
  return r;
}

void check_family_dims(VerifyResult& r, const Algebra& a, int dim,
                       const std::string& what) {
  const HomologicalSummary s = summary(a);
  expect(r, s.is_higher_auslander, what + " not higher Auslander");
  expect(r, s.gldim == Dim::of(dim) && s.domdim == Dim::of(dim),
         what + " gldim/domdim differ from " + std::to_string(dim));
}

VerifyResult verify_families(int) {
  VerifyResult r{"families", 0, {}};
  for (int d = 1; d <= 8; ++d) {
    const Algebra a = family_ladder(d);
    check_family_dims(r, a, d, "ladder(" + std::to_string(d) + ")");
    expect(r, defect(a) == 1,
           "ladder(" + std::to_string(d) + ") defect is not 1");
  }
  for (int n = 2; n <= 12; ++n) {
    const std::string what = "gustafson(" + std::to_string(n) + ")";
    const Algebra a = family_gustafson(n);
    check_family_dims(r, a, 2 * n - 2, what);
    const EpsilonChain chain = epsilon_chain(a);
    const size_t len = chain.steps.size();
    expect(r, !chain.hit_step_limit && len >= 2, what + " chain truncated");
    if (len >= 2) {
      expect(r,
             same_presented(chain.steps[len - 2], Algebra::cyclic({3, 2})),
             what + " chain does not pass through (3,2)");
      const Algebra& last = chain.steps[len - 1];
      expect(r, !last.is_cyclic() && last.rank() == 1,
             what + " chain does not end at the point algebra");
    }
  }
  for (int a = 1; a <= 4; ++a) {
    for (int d = 2; d <= 6; ++d) {
      const std::string what =
          "comb(" + std::to_string(a) + "," + std::to_string(d) + ")";
      const Algebra alg = family_comb(a, d);
      check_family_dims(r, alg, d, what);
      expect(r, defect(alg) == a + 1,
             what + " defect differs from " + std::to_string(a + 1));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (int al = 0; al <= 3; ++al) {
      check_family_dims(
          r, family_staircase(n, al), 2 * al + 1,
          "staircase(" + std::to_string(n) + "," + std::to_string(al) + ")");
    }
    for (int j = 1; j <= 3; ++j) {
      const std::string what =
          "bracket(" + std::to_string(n) + "," + std::to_string(j) + ")";
      const Algebra a = family_bracket(n, j);
      check_family_dims(r, a, 2 * j + 1, what);
      const Algebra want =
          j == 1 ? family_staircase(n, 0) : family_bracket(n, j - 1);
      expect(r, same_presented(epsilon(a), want), what + " image unexpected");
    }
    for (int j = 1; j <= 3; ++j) {
      for (int al = 0; al <= 3; ++al) {
        for (int be = 0; be <= 3; ++be) {
          const std::string what = "stacked(" + std::to_string(n) + "," +
                                   std::to_string(j) + "," +
                                   std::to_string(al) + "," +
                                   std::to_string(be) + ")";
          const Algebra a = family_stacked(n, j, al, be);
          expect(r, is_higher_auslander(a), what + " not higher Auslander");
          const Algebra want =
              al >= 1   ? family_stacked(n, j, al - 1, be + 1)
              : j >= 2  ? family_stacked(n, j - 1, be, 0)
                        : family_staircase(n, be);
          expect(r, same_presented(epsilon(a), want),
                 what + " image unexpected");
        }
      }
    }
  }
  const std::vector<std::string> dim4 = {
      "4,4,3",
      "3,2,2,2",
      "2,2,2,2,1",
      "4,4,3,4,4,3",
      "3,3,3,3,2,3,2",
      "3,2,2,2,3,2,2,2",
      "4,4,3,4,4,3,4,4,3",
      "3,3,4,4,3,3,3,2,3,2",
      "2,2,3,2,3,3,3,3,2,3,2",
      "3,2,2,2,3,2,2,2,3,2,2,2",
      "3,3,4,4,3,4,4,3,3,3,2,3,2",
      "3,3,3,3,2,3,2,3,3,3,3,2,3,2",
      "2,2,3,2,2,2,3,2,3,3,3,3,2,3,2",
  };
  const std::vector<std::string> dim6 = {
      "5,5,5,4",
      "3,3,3,3,2",
      "3,2,2,2,2,2",
      "2,2,2,2,2,2,1",
      "5,5,5,4,5,5,5,4",
      "4,4,3,3,3,3,4,4,3",
      "3,3,3,3,2,3,3,3,3,2",
      "3,3,3,3,2,2,2,3,2,2,2",
      "3,2,2,2,2,2,3,2,2,2,2,2",
      "4,4,4,4,4,4,3,4,4,3,4,4,3",
      "4,4,3,3,3,3,4,4,3,3,3,2,3,3",
      "3,3,3,3,2,3,3,3,3,2,3,3,3,3,2",
  };
  for (const std::string& s : dim4)
    check_family_dims(r, parse_algebra(s), 4, "listed algebra (" + s + ")");
  for (const std::string& s : dim6)
    check_family_dims(r, parse_algebra(s), 6, "listed algebra (" + s + ")");
  return r;
}

VerifyResult verify_spectrum(int jobs) {
  VerifyResult r{"spectrum", 0, {}};
  for (int n = 2; n <= 8; ++n) {
    const std::set<int> want = expected_spectrum(n);
    SearchConfig cfg;
    cfg.rank = n;
    cfg.jobs = jobs;
    expect(r, spectrum(cfg) == want,
           "spectrum mismatch at rank " + std::to_string(n));
    cfg.max_entry = 2 * n + 2;
    expect(r, spectrum(cfg) == want,
           "spectrum not stable under larger entries at rank " +
               std::to_string(n));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "reductions", "theorem-a", "theorem-d", "roundtrip",
      "families",   "chains",    "spectrum"};
  return names;
}

VerifyResult verify_suite(const std::string& name, int jobs) {
  if (name == "reductions") return verify_reductions(jobs);
  if (name == "theorem-a") return verify_theorem_a(jobs);
  if (name == "theorem-d") return verify_theorem_d(jobs);
  if (name == "roundtrip") return verify_roundtrip(jobs);
  if (name == "families") return verify_families(jobs);
  if (name == "chains") return verify_chains(jobs);
  if (name == "spectrum") return verify_spectrum(jobs);
  std::ostringstream msg;
  msg << "unknown verification suite '" << name << "' (expected one of";
  for (const std::string& s : verify_suite_names()) msg << ' ' << s;
  msg << ')';
  throw validation_error(msg.str());
}

}  // namespace nakayama
