#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama {

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* raised when reverse_epsilon's mandatory round-trip check fails */
struct self_check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* natural number or infinity, with saturating arithmetic and a total order
   (infinity compares greater than every finite value) */
class Dim {
 public:
  constexpr Dim() = default;
  static constexpr Dim of(int k) { return Dim(k); }
  static constexpr Dim inf() { return Dim(-1); }

  constexpr bool finite() const { return v_ >= 0; }
  constexpr int value() const { return v_; }  /* -1 encodes infinity */

  constexpr Dim operator+(int k) const { return finite() ? Dim(v_ + k) : *this; }
  constexpr Dim operator-(int k) const { return finite() ? Dim(v_ - k) : *this; }

  friend constexpr bool operator==(Dim a, Dim b) { return a.v_ == b.v_; }
  friend constexpr bool operator==(Dim a, int b) { return a.v_ == b; }
  friend constexpr std::strong_ordering operator<=>(Dim a, Dim b) {
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    if (a.v_ < 0) return std::strong_ordering::greater;
    if (b.v_ < 0) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
  }

  std::string str() const { return finite() ? std::to_string(v_) : "inf"; }

  static Dim max(Dim a, Dim b) { return a < b ? b : a; }
  static Dim min(Dim a, Dim b) { return a < b ? a : b; }

 private:
  constexpr explicit Dim(int v) : v_(v) {}
  int v_ = 0;
};

/* uniserial module (top vertex, length); len == 0 is the zero module */
struct Module {
  int top = 0;
  int len = 0;

  bool zero() const { return len == 0; }
  static Module zero_module() { return Module{0, 0}; }
  friend bool operator==(const Module&, const Module&) = default;
};

/* A Nakayama algebra given by its Kupisch series.  Either a connected cyclic
   algebra (no component boundaries) or a "Nakayama cycle": an ordered list of
   connected linear components glued by the cyclic permutation tau, which sends
   the simple projective of each component to the simple injective (= first
   vertex) of the next one.  Vertices are numbered 1..n globally, components
   are consecutive ranges in tau-order. */
class Algebra {
 public:
  static Algebra cyclic(std::vector<int> series);
  static Algebra cycle(std::vector<std::vector<int>> components);
  /* classify a flat series: cyclic iff no entry is 1, otherwise it is split
     into linear components after each 1-entry */
  static Algebra from_series(const std::vector<int>& raw);

  int rank() const { return static_cast<int>(c_.size()); }
  bool is_cyclic() const { return comp_start_.empty(); }
  bool is_semisimple() const;
  bool is_self_injective() const;  /* cyclic: all entries equal; cycle: semisimple */

  int kupisch(int v) const { return c_[v - 1]; }
  const std::vector<int>& series() const { return c_; }

  int num_components() const;  /* 1 for cyclic */
  std::vector<std::vector<int>> components() const;

  /* component range of vertex v (for cyclic: the whole vertex range) */
  int comp_first(int v) const;
  int comp_last(int v) const;

  /* tau-successor of a simple: v+1 within a component / around the cycle,
     first vertex of the next component past a component end */
  int tau(int v) const;

  /* vertex reached from v after k >= 0 composition-series steps downward */
  int vertex_after(int v, int k) const;

  bool valid_module(const Module& m) const;
  int socle(const Module& m) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Algebra() = default;
  std::vector<int> c_;
  std::vector<int> comp_start_;  /* 0-based offsets into c_; empty <=> cyclic */
};

/* lexicographically minimal rotation of the Kupisch sequence; two cyclic
   algebras are isomorphic-as-presented iff their canonical forms are equal */
Algebra canonical_cyclic(const Algebra& a);

/* canonical form for any algebra: canonical_cyclic, or the lexicographically
   minimal rotation of the component list */
Algebra canonical(const Algebra& a);

/* equality up to relabeling that preserves the cyclic order */
bool same_presented(const Algebra& a, const Algebra& b);

}  // namespace nakayama
