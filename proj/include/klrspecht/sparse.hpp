#pragma once
// Sparse vectors and incremental echelon forms over an exact scalar type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace klr {

/// Entries sorted by index, no explicit zeros.
template <class S>
class SparseVector {
 public:
  using Entry = std::pair<int, S>;

  SparseVector() = default;
  static SparseVector unit(int i) {
    SparseVector v;
    v.entries_.emplace_back(i, S(1));
    return v;
  }
  /// Takes entries in any order; merges duplicates and drops zeros.
  static SparseVector from_entries(std::vector<Entry> raw) {
    std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& e : raw) {
      if (!v.entries_.empty() && v.entries_.back().first == e.first)
        v.entries_.back().second += e.second;
      else
        v.entries_.push_back(std::move(e));
    }
    std::erase_if(v.entries_, [](const Entry& e) { return e.second.is_zero(); });
    return v;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  S coeff(int i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, int k) { return e.first < k; });
    return (it != entries_.end() && it->first == i) ? it->second : S(0);
  }

  /// this += c * x
  void axpy(const S& c, const SparseVector& x) {
    if (c.is_zero() || x.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + x.entries_.size());
    auto a = entries_.begin();
    auto b = x.entries_.begin();
    while (a != entries_.end() || b != x.entries_.end()) {
      if (b == x.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        S s = a->second + c * b->second;
        if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  SparseVector& operator+=(const SparseVector& x) { axpy(S(1), x); return *this; }
  SparseVector& operator-=(const SparseVector& x) { axpy(S(-1), x); return *this; }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }

  void scale(const S& c) {
    if (c.is_zero()) { entries_.clear(); return; }
    for (auto& e : entries_) e.second *= c;
  }
  friend SparseVector operator*(const S& c, SparseVector v) { v.scale(c); return v; }
  SparseVector operator-() const { SparseVector v = *this; v.scale(S(-1)); return v; }

  bool operator==(const SparseVector& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (entries_[k].first != o.entries_[k].first || !(entries_[k].second == o.entries_[k].second)) return false;
    return true;
  }

 private:
  std::vector<Entry> entries_;
};

/// Hash-map accumulator for sums of many sparse terms.
template <class S>
class Accumulator {
 public:
  void add(int i, const S& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(i, c);
    if (!fresh) it->second += c;
  }
  void add(const S& c, const SparseVector<S>& v) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v) add(i, c * x);
  }
  SparseVector<S> finish() {
    std::vector<typename SparseVector<S>::Entry> raw(terms_.begin(), terms_.end());
    terms_.clear();
    return SparseVector<S>::from_entries(std::move(raw));
  }

 private:
  std::unordered_map<int, S> terms_;
};

/// Semi-echelon basis of a growing subspace. Every coordinate i has a
/// priority; the pivot of a row is its coordinate of highest priority, and
/// every other coordinate of that row has lower priority. Priorities must be
/// distinct per coordinate (ties are broken by the coordinate itself).
template <class S>
class EchelonBasis {
 public:
  using Priority = std::function<std::uint32_t(int)>;

  explicit EchelonBasis(Priority priority = [](int i) { return static_cast<std::uint32_t>(i); })
      : priority_(std::move(priority)) {}

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int i) const { return pivot_row_.count(i) != 0; }
  const std::vector<SparseVector<S>>& rows() const { return rows_; }

  /// Fully reduces v: the result has no pivot coordinate. With track != null,
  /// also accumulates into *track the multiples of rows subtracted.
  SparseVector<S> reduce(const SparseVector<S>& v, std::vector<std::pair<int, S>>* track = nullptr) const {
    std::map<std::uint64_t, S> work;
    for (const auto& [i, c] : v) work.emplace(key(i), c);
    std::vector<typename SparseVector<S>::Entry> rest;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      int i = static_cast<int>(it->first & 0xffffffffu);
      S c = std::move(it->second);
      work.erase(it);
      auto pr = pivot_row_.find(i);
      if (pr == pivot_row_.end()) {
        rest.emplace_back(i, std::move(c));
        continue;
      }
      if (track) track->emplace_back(pr->second, c);
      for (const auto& [j, x] : rows_[pr->second]) {
        if (j == i) continue;
        auto [w, fresh] = work.try_emplace(key(j), -(c * x));
        if (!fresh) {
          w->second -= c * x;
          if (w->second.is_zero()) work.erase(w);
        }
      }
    }
    return SparseVector<S>::from_entries(std::move(rest));
  }

  /// Adds v to the span. Returns the index of the new row, or -1 if v was
  /// already in the span. The stored row is reduced and has pivot entry 1.
  int insert(const SparseVector<S>& v) {
    SparseVector<S> r = reduce(v);
    return insert_reduced(std::move(r));
  }

  /// Same as insert, for a vector already fully reduced against this basis.
  int insert_reduced(SparseVector<S> r) {
    if (r.empty()) return -1;
    int p = pivot_of(r);
    S inv = S(1) / r.coeff(p);
    r.scale(inv);
    rows_.push_back(std::move(r));
    pivot_row_.emplace(p, static_cast<int>(rows_.size()) - 1);
    pivots_.push_back(p);
    return static_cast<int>(rows_.size()) - 1;
  }

  int pivot(int row) const { return pivots_[row]; }

  /// Coordinate of highest priority in v (v nonempty).
  int pivot_of(const SparseVector<S>& v) const {
    int best = v.entries().front().first;
    for (const auto& [i, c] : v)
      if (key(i) > key(best)) best = i;
    return best;
  }

 private:
  std::uint64_t key(int i) const {
    return (static_cast<std::uint64_t>(priority_(i)) << 32) | static_cast<std::uint32_t>(i);
  }

  Priority priority_;
  std::vector<SparseVector<S>> rows_;
  std::vector<int> pivots_;
  std::unordered_map<int, int> pivot_row_;
};

/// Basis of {a : sum_j a_j columns[j] = 0}, as vectors indexed by column
/// position. The basis is in reduced echelon form with respect to the order
/// "higher column index first": each basis vector has a distinct leading
/// (largest) index carrying coefficient 1, and no other basis vector
/// involves that index.
template <class S>
std::vector<SparseVector<S>> kernel(const std::vector<SparseVector<S>>& columns) {
  EchelonBasis<S> image;
  std::vector<SparseVector<S>> combos;  // combos[row] expresses image row in columns
  std::vector<SparseVector<S>> raw;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    std::vector<std::pair<int, S>> track;
    SparseVector<S> r = image.reduce(columns[j], &track);
    SparseVector<S> combo = SparseVector<S>::unit(static_cast<int>(j));
    for (const auto& [row, c] : track) combo.axpy(-c, combos[row]);
    if (r.empty()) {
      raw.push_back(std::move(combo));
    } else {
      int p = image.pivot_of(r);
      S inv = S(1) / r.coeff(p);
      combo.scale(inv);
      image.insert_reduced(std::move(r));
      combos.push_back(std::move(combo));
    }
  }
  // Normalize: reduced echelon form with leading = largest index.
  EchelonBasis<S> ker;
  for (auto& v : raw) ker.insert(v);
  std::vector<SparseVector<S>> rows = ker.rows();
  // Back-substitute so no row involves another row's pivot.
  std::vector<int> order(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ker.pivot(a) > ker.pivot(b); });
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      if (a == b) continue;
      S c = rows[order[b]].coeff(ker.pivot(order[a]));
      if (!c.is_zero()) rows[order[b]].axpy(-c, rows[order[a]]);
    }
  }
  std::vector<SparseVector<S>> out;
  for (int k : order) out.push_back(std::move(rows[k]));
  return out;
}

template <class S>
std::size_t rank_of(const std::vector<SparseVector<S>>& vectors) {
  EchelonBasis<S> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

/// True iff span(a) == span(b).
template <class S>
bool same_span(const std::vector<SparseVector<S>>& a, const std::vector<SparseVector<S>>& b) {
  EchelonBasis<S> ea, eb;
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& v : b)
    if (!ea.reduce(v).empty()) return false;
  return true;
}

/// True iff span(a) is contained in span(b).
template <class S>
bool span_contained(const std::vector<SparseVector<S>>& a, const std::vector<SparseVector<S>>& b) {
  EchelonBasis<S> eb;
  for (const auto& v : b) eb.insert(v);
  for (const auto& v : a)
    if (!eb.reduce(v).empty()) return false;
  return true;
}

}  // namespace klr
