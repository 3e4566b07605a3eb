#include "nakayama/algebra.hpp"

#include <algorithm>

namespace nakayama {

namespace {

void check_cyclic_series(const std::vector<int>& c) {
  if (c.empty()) throw validation_error("empty Kupisch series");
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (c[i] < 2)
      throw validation_error("cyclic Kupisch series needs every entry >= 2, got " +
                             std::to_string(c[i]) + " at position " + std::to_string(i + 1));
    const int next = c[(i + 1) % n];
    if (next < c[i] - 1)
      throw validation_error("Kupisch condition violated: c_" + std::to_string((i + 1) % n + 1) +
                             " = " + std::to_string(next) + " < c_" + std::to_string(i + 1) +
                             " - 1 = " + std::to_string(c[i] - 1));
  }
}

void check_linear_component(const std::vector<int>& c) {
  if (c.empty()) throw validation_error("empty linear component");
  const int m = static_cast<int>(c.size());
  if (c[m - 1] != 1)
    throw validation_error("linear component must end with entry 1, got " +
                           std::to_string(c[m - 1]));
  for (int i = 0; i + 1 < m; ++i) {
    if (c[i] < 2)
      throw validation_error("linear component entry before the last must be >= 2, got " +
                             std::to_string(c[i]) + " at position " + std::to_string(i + 1));
    if (c[i] > c[i + 1] + 1)
      throw validation_error("linear component disconnected: c_" + std::to_string(i + 1) + " = " +
                             std::to_string(c[i]) + " > c_" + std::to_string(i + 2) +
                             " + 1 = " + std::to_string(c[i + 1] + 1));
  }
}

}  // namespace

Algebra Algebra::cyclic(std::vector<int> series) {
  check_cyclic_series(series);
  Algebra a;
  a.c_ = std::move(series);
  return a;
}

Algebra Algebra::cycle(std::vector<std::vector<int>> components) {
  if (components.empty()) throw validation_error("no components");
  Algebra a;
  for (const auto& comp : components) {
    check_linear_component(comp);
    a.comp_start_.push_back(static_cast<int>(a.c_.size()));
    a.c_.insert(a.c_.end(), comp.begin(), comp.end());
  }
  return a;
}

Algebra Algebra::from_series(const std::vector<int>& raw) {
  if (raw.empty()) throw validation_error("empty input");
  if (std::find(raw.begin(), raw.end(), 1) == raw.end()) return cyclic(raw);
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  for (int v : raw) {
    cur.push_back(v);
    if (v == 1) {
      comps.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty())
    throw validation_error("series contains a 1-entry but does not end a linear component");
  return cycle(std::move(comps));
}

bool Algebra::is_semisimple() const {
  return !is_cyclic() && num_components() == rank();
}

bool Algebra::is_self_injective() const {
  if (is_cyclic())
    return std::all_of(c_.begin(), c_.end(), [&](int v) { return v == c_[0]; });
  return is_semisimple();
}

int Algebra::num_components() const {
  return is_cyclic() ? 1 : static_cast<int>(comp_start_.size());
}

std::vector<std::vector<int>> Algebra::components() const {
  std::vector<std::vector<int>> out;
  if (is_cyclic()) {
    out.push_back(c_);
    return out;
  }
  for (size_t k = 0; k < comp_start_.size(); ++k) {
    const int first = comp_start_[k];
    const int last = k + 1 < comp_start_.size() ? comp_start_[k + 1] : rank();
    out.emplace_back(c_.begin() + first, c_.begin() + last);
  }
  return out;
}

int Algebra::comp_first(int v) const {
  if (is_cyclic()) return 1;
  auto it = std::upper_bound(comp_start_.begin(), comp_start_.end(), v - 1);
  return *std::prev(it) + 1;
}

int Algebra::comp_last(int v) const {
  if (is_cyclic()) return rank();
  auto it = std::upper_bound(comp_start_.begin(), comp_start_.end(), v - 1);
  return it == comp_start_.end() ? rank() : *it;
}

int Algebra::tau(int v) const {
  /* component concatenation order is the tau-order; the last vertex of the
     last component wraps around to vertex 1 */
  return v % rank() + 1;
}

int Algebra::vertex_after(int v, int k) const {
  if (is_cyclic()) return (v - 1 + k) % rank() + 1;
  return v + k;
}

bool Algebra::valid_module(const Module& m) const {
  if (m.len < 1 || m.top < 1 || m.top > rank()) return false;
  if (m.len > kupisch(m.top)) return false;
  if (!is_cyclic() && m.top + m.len - 1 > comp_last(m.top)) return false;
  return true;
}

int Algebra::socle(const Module& m) const {
  return vertex_after(m.top, m.len - 1);
}

namespace {

/* lexicographically minimal rotation, plain quadratic scan (n is small) */
template <class T>
int minimal_rotation(const std::vector<T>& s) {
  const int n = static_cast<int>(s.size());
  int best = 0;
  for (int cand = 1; cand < n; ++cand) {
    for (int k = 0; k < n; ++k) {
      const T& a = s[(cand + k) % n];
      const T& b = s[(best + k) % n];
      if (a < b) {
        best = cand;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

}  // namespace

Algebra canonical_cyclic(const Algebra& a) {
  if (!a.is_cyclic()) throw validation_error("canonical_cyclic expects a cyclic algebra");
  const auto& c = a.series();
  const int r = minimal_rotation(c);
  std::vector<int> rot(c.size());
  for (size_t i = 0; i < c.size(); ++i) rot[i] = c[(r + i) % c.size()];
  return Algebra::cyclic(std::move(rot));
}

Algebra canonical(const Algebra& a) {
  if (a.is_cyclic()) return canonical_cyclic(a);
  auto comps = a.components();
  const int r = minimal_rotation(comps);
  std::rotate(comps.begin(), comps.begin() + r, comps.end());
  return Algebra::cycle(std::move(comps));
}

bool same_presented(const Algebra& a, const Algebra& b) {
  if (a.is_cyclic() != b.is_cyclic()) return false;
  return canonical(a) == canonical(b);
}

}  // namespace nakayama
