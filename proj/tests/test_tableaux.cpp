// Tableaux: the distinguished tableaux, degrees, dominated sets and the
// split/join maps.
#include <algorithm>
#include <set>

#include "doctest.h"
#include "klrspecht/properties.hpp"
#include "klrspecht/tableaux.hpp"

using namespace klr;

namespace {

// hook length formula for one component, times the multinomial for the levels
long std_count(const Multipartition& lambda) {
  long num = 1, den = 1;
  int n = 0;
  for (int m = 1; m <= lambda.level(); ++m) {
    const Partition& p = lambda.component(m);
    Partition q = conjugate_partition(p);
    for (std::size_t r = 0; r < p.size(); ++r)
      for (int c = 0; c < p[r]; ++c) {
        den *= (p[r] - c - 1) + (q[c] - static_cast<int>(r) - 1) + 1;
        num *= ++n;
      }
  }
  return num / den;
}

}  // namespace

TEST_CASE("distinguished tableaux of the worked shape") {
  auto lam = Multipartition::parse("2,2|2,1,1|3,2");
  CHECK(t_col(lam).to_string() == "10,12;11,13|6,9;7;8|1,3,5;2,4");
  CHECK(t_row(lam).to_string() == "1,2;3,4|5,6;7;8|9,10,11;12,13");
  CHECK(residue_sequence(t_col(lam), AlgebraConfig::make(4, {1, 2, 0})) ==
        ResidueSequence{0, 3, 1, 0, 2, 2, 1, 0, 3, 1, 0, 2, 1});
  // t^λ = (t_{λ'})'
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : multipartitions(2, n)) CHECK(t_row(mu) == conjugate_tableau(t_col(conjugate(mu))));
}

TEST_CASE("tableau text round-trips") {
  for (const char* s : {"1,3;2|4", "0|1,2", "7|2,6,8;3|1,4,5"}) CHECK(Tableau::parse(s).to_string() == s);
  CHECK_THROWS(Tableau::parse("1,1"));
  CHECK_THROWS(Tableau::parse("1,3"));
}

TEST_CASE("standard tableaux: count, order, permutations") {
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= (l == 1 ? 7 : 5); ++n)
      for (const auto& lam : multipartitions(l, n)) {
        auto ts = enumerate_std(lam);
        CHECK(static_cast<long>(ts.size()) == std_count(lam));
        CHECK(ts.front() == t_col(lam));
        CHECK(std::is_sorted(ts.begin(), ts.end(), tableau_order_less));
        for (const auto& t : ts) {
          CHECK(t.is_standard());
          CHECK(apply(perm_of_col(t), t_col(lam)) == t);
          CHECK(apply(perm_of_row(t), t_row(lam)) == t);
        }
        // the total order refines dominance
        for (std::size_t a = 0; a < ts.size(); ++a)
          for (std::size_t b = a + 1; b < ts.size(); ++b) CHECK_FALSE(tableau_dominates(ts[a], ts[b]));
      }
}

TEST_CASE("degree plus codegree is the defect") {
  for (auto cfg : {AlgebraConfig::make(2, {0}), AlgebraConfig::make(3, {0}), AlgebraConfig::make(3, {0, 1}),
                   AlgebraConfig::make(2, {0, 1, 0}), AlgebraConfig::make(0, {0, 2})}) {
    int top = cfg.level() == 1 ? 7 : 5;
    for (int n = 0; n <= top; ++n)
      for (const auto& lam : multipartitions(cfg.level(), n)) {
        GradedDimension by_list, by_list_deg;
        for (const auto& t : enumerate_std(lam)) {
          CHECK(degree(t, cfg) + codegree(t, cfg) == defect(lam, cfg));
          by_list.add(codegree(t, cfg));
          by_list_deg.add(degree(t, cfg));
        }
        CHECK(std_graded_dimension(lam, cfg) == by_list);
        CHECK(std_graded_dimension(lam, cfg, false) == by_list_deg);
      }
  }
}

TEST_CASE("dominated sets match their definitions") {
  for (int l = 1; l <= 2; ++l)
    for (int n = 1; n <= 5; ++n) {
      auto all = multipartitions(l, n);
      for (const auto& lam : all)
        for (const auto& mu : all) {
          auto col = enumerate_col_dominated(lam, mu);
          auto row = enumerate_row_dominated(lam, mu);
          std::set<Tableau> cs(col.begin(), col.end()), rs(row.begin(), row.end());
          for (const auto& t : enumerate_std(mu)) {
            bool left = true, high = true;
            for (int k = 1; k <= n; ++k) {
              Node a = t.node_of(k), b = t_col(lam).node_of(k), c = t_row(lam).node_of(k);
              left = left && (a.comp > b.comp || (a.comp == b.comp && a.col <= b.col));
              high = high && (a.comp < c.comp || (a.comp == c.comp && a.row <= c.row));
            }
            CHECK(cs.count(t) == (left ? 1u : 0u));
            CHECK(rs.count(t) == (high ? 1u : 0u));
            CHECK(is_col_dominated(t, lam) == left);
          }
          // a nonempty dominated set forces dominance of the shapes
          if (!col.empty()) CHECK(dominates(lam, mu));
          if (lam == mu) CHECK(col == std::vector<Tableau>{t_col(lam)});
        }
    }
}

TEST_CASE("column joins invert the split") {
  auto cfg = AlgebraConfig::make(3, {0, 1});
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : multipartitions(2, n))
      for (int m = 1; m <= 2; ++m)
        for (int c = 0; c <= lam.row(m, 1); ++c) {
          ColumnSplit sp = split_columns(lam, c, m, cfg);
          CHECK(sp.left.size() + sp.right.size() == n);
          int hits = 0;
          for (const auto& t : enumerate_std(lam)) {
            if (!in_std_lr(t, c, m)) continue;
            ++hits;
            LRSplit s = lr_split(t, c, m);
            CHECK(s.left.shape() == sp.left);
            CHECK(s.right.shape() == sp.right);
            CHECK(lr_join_tableaux(s.left, s.right, c, m) == t);
          }
          CHECK(hits == static_cast<int>(enumerate_std(sp.left).size() * enumerate_std(sp.right).size()));
        }
}

TEST_CASE("row joins are injective onto standard tableaux") {
  auto cfg = AlgebraConfig::make(2, {0, 1, 0});
  auto lam = Multipartition::parse("1,1|2,1,1,1|1"), mu = Multipartition::parse("1|3,1|3");
  RowSplit sl = split_rows(lam, 1, 2, cfg), sm = split_rows(mu, 1, 2, cfg);
  CHECK(sl.top.to_string() == "1,1|2");
  CHECK(sm.top.to_string() == "1|3");
  std::set<Tableau> seen;
  for (const auto& b : enumerate_std(sm.bottom))
    for (const auto& t : enumerate_std(sm.top)) {
      Tableau j = row_join_tableaux(b, t, lam, 1, 2);
      CHECK(j.shape() == mu);
      seen.insert(j);
    }
  CHECK(seen.size() == enumerate_std(sm.bottom).size() * enumerate_std(sm.top).size());
}

TEST_CASE("conjugate diagrams") {
  Tableau t = Tableau::parse("1,3;2|4");
  CHECK(conjugate_diagram(t, 2).to_string() == "0|2");
  CHECK(conjugate_diagram(t, 4).to_string() == "1|2,1");
  CHECK(conjugate_tableau(conjugate_tableau(t)) == t);
}
