#pragma once

#include <map>
#include <vector>

#include "qsuper/scalars.hpp"

namespace qsuper {

// Sparse vector over a field; absent keys are zero.
template <class F>
using SVec = std::map<int, F>;

// y += a * x
template <class F>
void axpy(SVec<F>& y, const F& a, const SVec<F>& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
      continue;
    }
    it->second += a * v;
    if (it->second.is_zero()) y.erase(it);
  }
}

template <class F>
SVec<F> scaled(const SVec<F>& x, const F& a) {
  SVec<F> r;
  if (a.is_zero()) return r;
  for (const auto& [k, v] : x) r.emplace(k, v * a);
  return r;
}

// Row echelon span. Each row is normalized to 1 at its pivot, its smallest index.
// Reduction clears every pivot coordinate, so reduced vectors live on non-pivots.
template <class F>
class Echelon {
 public:
  size_t rank() const { return rows_.size(); }
  bool is_pivot(int k) const { return rows_.count(k) > 0; }
  const std::map<int, SVec<F>>& rows() const { return rows_; }

  SVec<F> reduce(SVec<F> v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto r = rows_.find(it->first);
      if (r == rows_.end()) {
        ++it;
        continue;
      }
      int k = it->first;
      F c = -it->second;
      axpy(v, c, r->second);
      it = v.upper_bound(k);
    }
    return v;
  }

  // Returns the reduced, normalized row if v was independent.
  bool insert(const SVec<F>& v, SVec<F>* added = nullptr) {
    SVec<F> w = reduce(v);
    if (w.empty()) return false;
    F inv = F(1) / w.begin()->second;
    for (auto& [k, x] : w) x = x * inv;
    if (added) *added = w;
    rows_.emplace(w.begin()->first, std::move(w));
    return true;
  }

  bool contains(const SVec<F>& v) const { return reduce(v).empty(); }

 private:
  std::map<int, SVec<F>> rows_;
};

// Basis of {c : sum_j c_j cols[j] = 0}.
template <class F>
std::vector<SVec<F>> kernel(const std::vector<SVec<F>>& cols) {
  struct Row {
    SVec<F> v;
    SVec<F> combo;
  };
  std::map<int, Row> rows;
  std::vector<SVec<F>> out;
  for (size_t j = 0; j < cols.size(); ++j) {
    SVec<F> v = cols[j];
    SVec<F> combo{{static_cast<int>(j), F(1)}};
    auto it = v.begin();
    while (it != v.end()) {
      auto r = rows.find(it->first);
      if (r == rows.end()) {
        ++it;
        continue;
      }
      int k = it->first;
      F c = -it->second;
      axpy(v, c, r->second.v);
      axpy(combo, c, r->second.combo);
      it = v.upper_bound(k);
    }
    if (v.empty()) {
      out.push_back(std::move(combo));
      continue;
    }
    F inv = F(1) / v.begin()->second;
    int p = v.begin()->first;
    rows.emplace(p, Row{scaled(v, inv), scaled(combo, inv)});
  }
  return out;
}

template <class F>
size_t rank_of(const std::vector<SVec<F>>& vecs) {
  Echelon<F> e;
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

}  // namespace qsuper
