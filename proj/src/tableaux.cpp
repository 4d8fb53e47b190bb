#include "klrspecht/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace klr {

namespace {

using Rows = std::vector<std::vector<std::vector<int>>>;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

Multipartition shape_of(const Rows& rows) {
  std::vector<Partition> comps;
  for (const auto& comp : rows) {
    Partition p;
    for (const auto& row : comp) p.push_back(static_cast<int>(row.size()));
    comps.push_back(p);
  }
  return Multipartition::composition(std::move(comps));
}

Rows empty_rows(const Multipartition& shape) {
  Rows rows(shape.level());
  for (int m = 1; m <= shape.level(); ++m)
    for (int len : shape.component(m)) rows[m - 1].push_back(std::vector<int>(len, 0));
  return rows;
}

// A weakly left of B in the diagonal drawing convention.
bool weakly_left(const Node& a, const Node& b) { return a.comp > b.comp || (a.comp == b.comp && a.col <= b.col); }
bool weakly_higher(const Node& a, const Node& b) { return a.comp < b.comp || (a.comp == b.comp && a.row <= b.row); }
bool strictly_below(const Node& b, const Node& a) { return b.comp > a.comp || (b.comp == a.comp && b.row > a.row); }
bool strictly_above(const Node& b, const Node& a) { return b.comp < a.comp || (b.comp == a.comp && b.row < a.row); }

Multipartition remove_node(const Multipartition& lambda, const Node& a) {
  auto comps = lambda.components();
  comps[a.comp - 1][a.row - 1] -= 1;
  return Multipartition(std::move(comps));
}

}  // namespace

Tableau::Tableau(Multipartition shape, Rows rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.level()) throw std::invalid_argument("tableau: level mismatch");
  if (!(shape_of(rows_) == shape_)) throw std::invalid_argument("tableau: rows do not match shape");
  n_ = shape_.size();
  where_.assign(n_, Node{0, 0, 0});
  for (int m = 1; m <= level(); ++m)
    for (int r = 1; r <= static_cast<int>(rows_[m - 1].size()); ++r)
      for (int c = 1; c <= static_cast<int>(rows_[m - 1][r - 1].size()); ++c) {
        int k = rows_[m - 1][r - 1][c - 1];
        if (k < 1 || k > n_ || where_[k - 1].comp != 0) throw std::invalid_argument("tableau: entries must be 1..n once each");
        where_[k - 1] = Node{r, c, m};
      }
}

bool Tableau::is_row_strict() const {
  for (const auto& comp : rows_)
    for (const auto& row : comp)
      for (std::size_t c = 1; c < row.size(); ++c)
        if (row[c] < row[c - 1]) return false;
  return true;
}

bool Tableau::is_column_strict() const {
  for (const auto& comp : rows_)
    for (std::size_t r = 1; r < comp.size(); ++r)
      for (std::size_t c = 0; c < comp[r].size(); ++c)
        if (comp[r][c] < comp[r - 1][c]) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t m = 0; m < rows_.size(); ++m) {
    if (m) s += '|';
    if (rows_[m].empty()) {
      s += '0';
      continue;
    }
    for (std::size_t r = 0; r < rows_[m].size(); ++r) {
      if (r) s += ';';
      for (std::size_t c = 0; c < rows_[m][r].size(); ++c) s += (c ? "," : "") + std::to_string(rows_[m][r][c]);
    }
  }
  return s;
}

Tableau Tableau::parse(std::string_view text) {
  Rows rows;
  for (auto comp : split(text, '|')) {
    std::vector<std::vector<int>> c;
    if (comp != "0" && !comp.empty()) {
      for (auto row : split(comp, ';')) {
        std::vector<int> r;
        for (auto x : split(row, ',')) {
          int v = 0;
          try {
            v = std::stoi(std::string(x));
          } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse tableau entry '" + std::string(x) + "'");
          }
          r.push_back(v);
        }
        c.push_back(std::move(r));
      }
    }
    rows.push_back(std::move(c));
  }
  Multipartition shape = shape_of(rows);
  return Tableau(shape, std::move(rows));
}

Tableau t_col(const Multipartition& lambda) {
  Rows rows = empty_rows(lambda);
  int k = 1;
  for (int m = lambda.level(); m >= 1; --m) {
    int width = lambda.row(m, 1);
    for (int c = 1; c <= width; ++c)
      for (int r = 1; r <= lambda.column(m, c); ++r) rows[m - 1][r - 1][c - 1] = k++;
  }
  return Tableau(lambda, std::move(rows));
}

Tableau t_row(const Multipartition& lambda) {
  Rows rows = empty_rows(lambda);
  int k = 1;
  for (auto& comp : rows)
    for (auto& row : comp)
      for (int& x : row) x = k++;
  return Tableau(lambda, std::move(rows));
}

Tableau apply(const Permutation& w, const Tableau& t) {
  Rows rows = t.rows();
  for (auto& comp : rows)
    for (auto& row : comp)
      for (int& x : row) x = w(x);
  return Tableau(t.shape(), std::move(rows));
}

namespace {
Permutation perm_from(const Tableau& base, const Tableau& t) {
  std::vector<int> im(t.size());
  for (int k = 1; k <= t.size(); ++k) im[k - 1] = t.entry(base.node_of(k));
  return Permutation(std::move(im));
}
}  // namespace

Permutation perm_of_col(const Tableau& t) { return perm_from(t_col(t.shape()), t); }
Permutation perm_of_row(const Tableau& t) { return perm_from(t_row(t.shape()), t); }

ResidueSequence residue_sequence(const Tableau& t, const AlgebraConfig& cfg) {
  ResidueSequence seq(t.size());
  for (int k = 1; k <= t.size(); ++k) seq[k - 1] = residue(t.node_of(k), cfg);
  return seq;
}

int d_below(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg) {
  Residue i = residue(a, cfg);
  int d = 0;
  for (const Node& b : addable_nodes(lambda))
    if (residue(b, cfg) == i && strictly_below(b, a)) ++d;
  for (const Node& b : removable_nodes(lambda))
    if (residue(b, cfg) == i && strictly_below(b, a)) --d;
  return d;
}

int d_above(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg) {
  Residue i = residue(a, cfg);
  int d = 0;
  for (const Node& b : addable_nodes(lambda))
    if (residue(b, cfg) == i && strictly_above(b, a)) ++d;
  for (const Node& b : removable_nodes(lambda))
    if (residue(b, cfg) == i && strictly_above(b, a)) --d;
  return d;
}

namespace {
template <class F>
int degree_walk(const Tableau& t, F d) {
  if (!t.is_standard()) throw std::invalid_argument("degree: tableau is not standard");
  int total = 0;
  Multipartition shape = t.shape();
  for (int k = t.size(); k >= 1; --k) {
    const Node& a = t.node_of(k);
    total += d(shape, a);
    shape = remove_node(shape, a);
  }
  return total;
}
}  // namespace

int degree(const Tableau& t, const AlgebraConfig& cfg) {
  return degree_walk(t, [&](const Multipartition& s, const Node& a) { return d_below(s, a, cfg); });
}

int codegree(const Tableau& t, const AlgebraConfig& cfg) {
  return degree_walk(t, [&](const Multipartition& s, const Node& a) { return d_above(s, a, cfg); });
}

GradedDimension std_graded_dimension(const Multipartition& lambda, const AlgebraConfig& cfg, bool codeg) {
  std::map<Multipartition, GradedDimension> memo;
  std::function<GradedDimension(const Multipartition&)> rec = [&](const Multipartition& mu) {
    if (mu.size() == 0) return GradedDimension::monomial(0);
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
    GradedDimension g;
    for (const Node& a : removable_nodes(mu)) {
      int d = codeg ? d_above(mu, a, cfg) : d_below(mu, a, cfg);
      g = g + GradedDimension::monomial(d) * rec(remove_node(mu, a));
    }
    memo.emplace(mu, g);
    return g;
  };
  return rec(lambda);
}

Multipartition shape_upto(const Tableau& t, int m) {
  std::vector<Partition> comps;
  for (const auto& comp : t.rows()) {
    Partition p;
    for (const auto& row : comp) {
      int len = 0;
      for (int x : row)
        if (x <= m) ++len;
      p.push_back(len);
    }
    comps.push_back(p);
  }
  return Multipartition::composition(std::move(comps));
}

bool tableau_dominates(const Tableau& s, const Tableau& t) {
  if (!(s.shape() == t.shape())) throw std::invalid_argument("tableau_dominates: shape mismatch");
  return bruhat_leq(perm_of_col(t), perm_of_col(s));
}

bool tableau_order_less(const Tableau& a, const Tableau& b) {
  Permutation wa = perm_of_col(a), wb = perm_of_col(b);
  int la = length(wa), lb = length(wb);
  if (la != lb) return la < lb;
  return wa.images() < wb.images();
}

std::vector<GradedTableau> enumerate_std_graded(const Multipartition& lambda, const AlgebraConfig& cfg) {
  // recursive removal of the node holding the largest entry
  std::function<std::vector<GradedTableau>(const Multipartition&)> rec = [&](const Multipartition& shape) {
    std::vector<GradedTableau> out;
    int n = shape.size();
    if (n == 0) {
      out.push_back({Tableau(shape, empty_rows(shape)), 0, 0});
      return out;
    }
    for (const Node& a : removable_nodes(shape)) {
      Multipartition smaller = remove_node(shape, a);
      int db = d_below(shape, a, cfg), da = d_above(shape, a, cfg);
      for (auto& g : rec(smaller)) {
        Rows rows = g.tableau.rows();
        auto& row = rows[a.comp - 1];
        if (static_cast<int>(row.size()) < a.row) row.resize(a.row);
        row[a.row - 1].push_back(n);
        out.push_back({Tableau(shape, std::move(rows)), g.degree + db, g.codegree + da});
      }
    }
    return out;
  };
  auto all = rec(lambda);
  std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keys;
  for (std::size_t k = 0; k < all.size(); ++k) {
    Permutation w = perm_of_col(all[k].tableau);
    keys.push_back({{length(w), w.images()}, k});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<GradedTableau> sorted;
  for (auto& [key, k] : keys) sorted.push_back(std::move(all[k]));
  return sorted;
}

std::vector<Tableau> enumerate_std(const Multipartition& lambda) {
  AlgebraConfig cfg = AlgebraConfig::make(0, std::vector<Residue>(std::max(1, lambda.level()), 0));
  std::vector<Tableau> out;
  for (auto& g : enumerate_std_graded(lambda, cfg)) out.push_back(std::move(g.tableau));
  return out;
}

namespace {
// Standard μ-tableaux grown by placing 1..n, each on a node allowed by `ok`.
std::vector<Tableau> filtered_growth(const Multipartition& mu, const std::function<bool(int, const Node&)>& ok) {
  std::vector<Tableau> out;
  int n = mu.size();
  Rows rows(mu.level());
  std::vector<Partition> cur(mu.level());
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.emplace_back(mu, rows);
      return;
    }
    for (int m = 1; m <= mu.level(); ++m) {
      auto& p = cur[m - 1];
      int nrows = static_cast<int>(p.size());
      for (int r = 1; r <= nrows + 1; ++r) {
        int len = r <= nrows ? p[r - 1] : 0;
        if (len >= mu.row(m, r)) continue;
        if (r > 1 && p[r - 2] <= len) continue;
        Node a{r, len + 1, m};
        if (!ok(k, a)) continue;
        if (r > nrows) {
          p.push_back(0);
          rows[m - 1].emplace_back();
        }
        p[r - 1] += 1;
        rows[m - 1][r - 1].push_back(k);
        rec(k + 1);
        rows[m - 1][r - 1].pop_back();
        p[r - 1] -= 1;
        if (p[r - 1] == 0) {
          p.pop_back();
          rows[m - 1].pop_back();
        }
      }
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), tableau_order_less);
  return out;
}
}  // namespace

std::vector<Tableau> enumerate_col_dominated(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.size() != mu.size() || lambda.level() != mu.level()) return {};
  Tableau tl = t_col(lambda);
  return filtered_growth(mu, [&](int k, const Node& a) { return weakly_left(a, tl.node_of(k)); });
}

std::vector<Tableau> enumerate_row_dominated(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.size() != mu.size() || lambda.level() != mu.level()) return {};
  Tableau tl = t_row(lambda);
  return filtered_growth(mu, [&](int k, const Node& a) { return weakly_higher(a, tl.node_of(k)); });
}

bool is_col_dominated_upto(const Tableau& t, const Multipartition& lambda, int j) {
  Tableau tl = t_col(lambda);
  for (int k = 1; k <= j; ++k)
    if (!weakly_left(t.node_of(k), tl.node_of(k))) return false;
  return true;
}

bool is_col_dominated(const Tableau& t, const Multipartition& lambda) {
  return is_col_dominated_upto(t, lambda, t.size());
}

bool is_row_dominated(const Tableau& t, const Multipartition& lambda) {
  Tableau tl = t_row(lambda);
  for (int k = 1; k <= t.size(); ++k)
    if (!weakly_higher(t.node_of(k), tl.node_of(k))) return false;
  return true;
}

Tableau conjugate_tableau(const Tableau& t) {
  Multipartition shape = conjugate(t.shape());
  Rows rows = empty_rows(shape);
  int l = t.level();
  for (int k = 1; k <= t.size(); ++k) {
    const Node& a = t.node_of(k);
    rows[l - a.comp][a.col - 1][a.row - 1] = k;
  }
  return Tableau(shape, std::move(rows));
}

Tableau add_first_column(const Tableau& t, int k, int m, int l) {
  if (t.level() != m || l < m) throw std::invalid_argument("add_first_column: level mismatch");
  Rows rows = t.rows();
  for (auto& comp : rows)
    for (auto& row : comp)
      for (int& x : row) x += k;
  auto& comp = rows[m - 1];
  if (static_cast<int>(comp.size()) > k) throw std::invalid_argument("add_first_column: component has more rows than the column");
  comp.resize(k);
  for (int r = 1; r <= k; ++r) comp[r - 1].insert(comp[r - 1].begin(), r);
  rows.resize(l);
  Multipartition shape = shape_of(rows);
  return Tableau(std::move(shape), std::move(rows));
}

Tableau add_last_column(const Tableau& t, int k, int m) {
  Rows rows = t.rows();
  int n = t.size() + k;
  auto& comp = rows.at(0);
  int width = comp.empty() ? 0 : static_cast<int>(comp[0].size());
  if (static_cast<int>(comp.size()) < k) comp.resize(k);
  for (int r = 1; r <= k; ++r) {
    if (static_cast<int>(comp[r - 1].size()) != width)
      throw std::invalid_argument("add_last_column: first k rows must have equal length");
    comp[r - 1].push_back(n - k + r);
  }
  rows.insert(rows.begin(), m - 1, {});
  Multipartition shape = shape_of(rows);
  Tableau out(std::move(shape), std::move(rows));
  if (!out.shape().is_multipartition()) throw std::invalid_argument("add_last_column: result is not a multipartition");
  return out;
}

Tableau lr_join_tableaux(const Tableau& left, const Tableau& right, int c, int m) {
  if (right.level() != m) throw std::invalid_argument("lr_join_tableaux: right part must have level m");
  int nl = left.size();
  Rows rows;
  for (int k = 1; k < m; ++k) {
    auto comp = right.rows()[k - 1];
    for (auto& row : comp)
      for (int& x : row) x += nl;
    rows.push_back(std::move(comp));
  }
  auto joined = left.rows().at(0);
  const auto& rc = right.rows()[m - 1];
  // with c = 0 the left part has no rows in component m to extend
  if (c == 0 && joined.empty()) joined.resize(rc.size());
  if (rc.size() > joined.size()) throw std::invalid_argument("lr_join_tableaux: right part is longer than the left column");
  for (std::size_t r = 0; r < rc.size(); ++r) {
    if (static_cast<int>(joined[r].size()) != c) throw std::invalid_argument("lr_join_tableaux: left rows must reach column c");
    for (int x : rc[r]) joined[r].push_back(x + nl);
  }
  rows.push_back(std::move(joined));
  for (int k = 2; k <= left.level(); ++k) rows.push_back(left.rows()[k - 1]);
  Multipartition shape = shape_of(rows);
  Tableau out(std::move(shape), std::move(rows));
  if (!out.shape().is_multipartition()) throw std::invalid_argument("lr_join_tableaux: shapes do not glue");
  return out;
}

bool in_std_lr(const Tableau& t, int c, int m) {
  ColumnSplit s = split_columns(t.shape(), c, m, AlgebraConfig::make(0, std::vector<Residue>(t.level(), 0)));
  int nl = s.left.size();
  for (int k = 1; k <= nl; ++k) {
    const Node& a = t.node_of(k);
    if (!(a.comp > m || (a.comp == m && a.col <= c))) return false;
  }
  return true;
}

LRSplit lr_split(const Tableau& t, int c, int m) {
  if (!in_std_lr(t, c, m)) throw std::domain_error("lr_split: tableau is not in Std_LR");
  ColumnSplit s = split_columns(t.shape(), c, m, AlgebraConfig::make(0, std::vector<Residue>(t.level(), 0)));
  int nl = s.left.size();
  Rows lrows = empty_rows(s.left), rrows = empty_rows(s.right);
  for (int k = 1; k <= t.size(); ++k) {
    const Node& a = t.node_of(k);
    if (a.comp > m) lrows[a.comp - m][a.row - 1][a.col - 1] = k;
    else if (a.comp == m && a.col <= c) lrows[0][a.row - 1][a.col - 1] = k;
    else if (a.comp == m) rrows[m - 1][a.row - 1][a.col - c - 1] = k - nl;
    else rrows[a.comp - 1][a.row - 1][a.col - 1] = k - nl;
  }
  return {Tableau(s.left, std::move(lrows)), Tableau(s.right, std::move(rrows))};
}

void row_split_labels(const Multipartition& lambda, int r, int m, std::vector<int>& top, std::vector<int>& bottom) {
  top.clear();
  bottom.clear();
  Tableau tl = t_col(lambda);
  for (int k = 1; k <= tl.size(); ++k) {
    const Node& a = tl.node_of(k);
    if (a.comp > m || (a.comp == m && a.row > r)) bottom.push_back(k);
    else top.push_back(k);
  }
}

Tableau row_join_tableaux(const Tableau& t, const Tableau& s, const Multipartition& lambda, int r, int m) {
  if (s.level() != m || t.level() != lambda.level() - m + 1) throw std::invalid_argument("row_join_tableaux: level mismatch");
  std::vector<int> top, bottom;
  row_split_labels(lambda, r, m, top, bottom);
  if (static_cast<int>(top.size()) != s.size() || static_cast<int>(bottom.size()) != t.size())
    throw std::invalid_argument("row_join_tableaux: sizes do not match the split of lambda");
  if (s.rows()[m - 1].size() > static_cast<std::size_t>(r)) throw std::invalid_argument("row_join_tableaux: top part has more than r rows");
  Rows rows;
  for (int k = 1; k <= m; ++k) {
    auto comp = s.rows()[k - 1];
    for (auto& row : comp)
      for (int& x : row) x = top[x - 1];
    rows.push_back(std::move(comp));
  }
  rows[m - 1].resize(r);
  for (std::size_t k = 0; k < t.rows().size(); ++k) {
    auto comp = t.rows()[k];
    for (auto& row : comp)
      for (int& x : row) x = bottom[x - 1];
    if (k == 0) {
      for (auto& row : comp) rows[m - 1].push_back(std::move(row));
    } else {
      rows.push_back(std::move(comp));
    }
  }
  // drop empty padding rows inside component m (only valid when the bottom part is empty)
  auto& cm = rows[m - 1];
  while (!cm.empty() && cm.back().empty()) cm.pop_back();
  for (const auto& row : cm)
    if (row.empty()) throw std::invalid_argument("row_join_tableaux: top part must have exactly r rows when the bottom is nonempty");
  Multipartition shape = shape_of(rows);
  Tableau out(std::move(shape), std::move(rows));
  if (!out.shape().is_multipartition()) throw std::invalid_argument("row_join_tableaux: glued shape is not a multipartition");
  return out;
}

}  // namespace klr
