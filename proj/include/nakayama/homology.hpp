#pragma once

#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

struct RelationSystem {
  /* one (start vertex, socle vertex) pair per irredundant relation, i.e. per
     minimal projective; single-vertex components carry no relation */
  std::vector<std::pair<int, int>> pairs;
  /* vertices grouped by the socle of their projective (projective classes)
     and tops of injectives grouped likewise */
  std::vector<std::vector<int>> projective_classes;
  std::vector<int> projective_injective_vertices;
};

struct HomologicalSummary {
  Dim gldim;
  Dim domdim;
  int findim = 0;
  int defect = 0;
  int num_relations = 0;
  bool is_self_injective = false;
  bool is_gorenstein = false;
  bool is_higher_auslander = false;
};

Module projective(const Algebra& a, int i);
bool is_projective(const Algebra& a, const Module& m);

/* the maximal uniserial module with socle vertex j */
Module injective_envelope(const Algebra& a, int j);
bool is_injective(const Algebra& a, const Module& m);

/* kernel of the projective cover / cokernel of the injective envelope */
Module syzygy(const Algebra& a, const Module& m);
Module cosyzygy(const Algebra& a, const Module& m);

Dim pdim(const Algebra& a, const Module& m);
Dim gldim(const Algebra& a);
Dim domdim(const Algebra& a);
int findim(const Algebra& a);

int defect(const Algebra& a);
int defect_of_projective(const Algebra& a, int i);

RelationSystem relations(const Algebra& a);
int num_relations(const Algebra& a);

bool is_gorenstein(const Algebra& a);
bool is_higher_auslander(const Algebra& a);

HomologicalSummary summary(const Algebra& a);

/* all valid uniserial modules of a, tops ascending then lengths ascending */
std::vector<Module> module_census(const Algebra& a);

}  // namespace nakayama
