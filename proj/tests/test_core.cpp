// Scalars, sparse elimination, multipartitions and the symmetric group,
// each checked against a brute-force oracle.
#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "klrspecht/sparse.hpp"
#include "klrspecht/symgroup.hpp"
#include "klrspecht/tableaux.hpp"

using namespace klr;

namespace {

long inversions(const Permutation& w) {
  long k = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++k;
  return k;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// x ≤ w iff some subword of a reduced word for w evaluates to x
bool bruhat_by_subwords(const Permutation& x, const Permutation& w) {
  ReducedWord word = canonical_reduced_word(w);
  std::size_t k = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    ReducedWord sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) sub.push_back(word[i]);
    if (evaluate(sub, w.n()) == x) return true;
  }
  return false;
}

long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return p[n];
}

}  // namespace

TEST_CASE("rationals are exact and canonical") {
  Rational a(1, 3), b(2, 6);
  CHECK(a == b);
  CHECK((a + b).to_string() == "2/3");
  CHECK((a * Rational(3)).to_string() == "1");
  CHECK((a - a).is_zero());
  CHECK(Rational(-4, 6).to_string() == "-2/3");
  CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("prime field arithmetic needs a context") {
  CHECK(ModP::modulus() == 0);
  CHECK_THROWS(ModP(3));
  {
    ModP::Context ctx(7);
    ModP a(3), b(5);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(ModP(-1).value() == 6);
    CHECK(exact_string(a) == "3 mod 7");
    {
      ModP::Context inner(5);
      CHECK(ModP::modulus() == 5);
    }
    CHECK(ModP::modulus() == 7);
  }
  CHECK(FieldSpec::parse("F5").prime == 5);
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK_THROWS(FieldSpec::parse("F6"));
}

TEST_CASE("kernel vectors annihilate and fill the nullity") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-2, 2), dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<SparseVector<Rational>> columns;
    for (int j = 0; j < cols; ++j) {
      std::vector<SparseVector<Rational>::Entry> e;
      for (int i = 0; i < rows; ++i)
        if (int c = coef(rng)) e.emplace_back(i, Rational(c));
      columns.push_back(SparseVector<Rational>::from_entries(std::move(e)));
    }
    auto ker = kernel(columns);
    CHECK(ker.size() + rank_of(columns) == static_cast<std::size_t>(cols));
    std::set<int> leads;
    for (const auto& k : ker) {
      Accumulator<Rational> acc;
      for (const auto& [j, c] : k) acc.add(c, columns[j]);
      CHECK(acc.finish().empty());
      CHECK(k.entries().back().second == Rational(1));
      leads.insert(k.entries().back().first);
    }
    CHECK(leads.size() == ker.size());
  }
}

TEST_CASE("span comparisons") {
  using V = SparseVector<Rational>;
  V a = V::from_entries({{0, Rational(1)}, {1, Rational(1)}});
  V b = V::from_entries({{0, Rational(1)}, {1, Rational(-1)}});
  V c = V::unit(0), d = V::unit(1);
  CHECK(same_span<Rational>({a, b}, {c, d}));
  CHECK(span_contained<Rational>({a}, {c, d}));
  CHECK_FALSE(span_contained<Rational>({c}, {a}));
  CHECK(rank_of<Rational>({a, b, c}) == 2);
}

TEST_CASE("multipartition text round-trips") {
  for (const char* s : {"1,1|2,1,1,1|1", "0", "0|0", "3|0|2,2", "5,1,1"}) {
    Multipartition x = Multipartition::parse(s);
    CHECK(x.to_string() == s);
    CHECK(Multipartition::parse(x.to_string()) == x);
  }
  CHECK_THROWS(Multipartition::parse("1,x"));
  CHECK_THROWS(Multipartition::parse("1,2"));
  CHECK_FALSE(Multipartition::composition({{1, 2}}).is_multipartition());
  CHECK(parse_e("inf") == 0);
  CHECK_THROWS(parse_e("1"));
  CHECK(AlgebraConfig::make(3, {4, -1}).kappa == std::vector<Residue>{1, 2});
}

TEST_CASE("partition and multipartition counts") {
  for (int n = 0; n <= 9; ++n) CHECK(static_cast<long>(partitions(n).size()) == partition_count(n));
  // l-multipartitions: coefficient of q^n in prod (1-q^k)^{-l}
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n) {
      long expect = 0;
      std::function<void(int, int, long)> rec = [&](int comp, int left, long ways) {
        if (comp == l) {
          if (left == 0) expect += ways;
          return;
        }
        for (int k = 0; k <= left; ++k) rec(comp + 1, left - k, ways * partition_count(k));
      };
      rec(0, n, 1);
      auto all = multipartitions(l, n);
      CHECK(static_cast<long>(all.size()) == expect);
      CHECK(std::set<Multipartition>(all.begin(), all.end()).size() == all.size());
    }
  CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("dominance is a partial order and conjugation reverses it") {
  for (int l = 1; l <= 2; ++l)
    for (int n = 1; n <= 5; ++n) {
      auto all = multipartitions(l, n);
      for (const auto& a : all) {
        CHECK(dominates(a, a));
        CHECK(conjugate(conjugate(a)) == a);
        for (const auto& b : all) {
          if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
          CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
        }
      }
    }
  CHECK(dominates(Multipartition::parse("2|0"), Multipartition::parse("1|1")));
  CHECK_FALSE(dominates(Multipartition::parse("0|2"), Multipartition::parse("1|1")));
}

TEST_CASE("residues, content and defect") {
  auto cfg = AlgebraConfig::make(4, {1, 2, 0});
  auto lam = Multipartition::parse("2,2|2,1,1|3,2");
  std::vector<Residue> got;
  for (const Node& a : nodes(lam)) got.push_back(residue(a, cfg));
  // diagram of residues read component by component, row by row
  CHECK(got == std::vector<Residue>{1, 2, 0, 1, 2, 3, 1, 0, 0, 1, 2, 3, 0});
  CHECK(defect(Multipartition::parse("2,1"), AlgebraConfig::make(3, {0})) == 1);
  CHECK(defect(Multipartition::parse("2,1"), AlgebraConfig::make(2, {0})) == 0);
  CHECK(defect(Multipartition::parse("0"), AlgebraConfig::make(2, {0})) == 0);
  // e = inf: every block of a single partition is simple, defect 0
  for (const auto& p : partitions(5)) CHECK(defect(Multipartition({p}), AlgebraConfig::make(0, {0})) == 0);
}

TEST_CASE("graded dimensions print and parse") {
  GradedDimension g;
  g.add(-1);
  g.add(1, 2);
  g.add(0);
  CHECK(g.to_string() == "v^-1 + 1 + 2v");
  CHECK(GradedDimension::parse(g.to_string()) == g);
  CHECK(g.total() == 4);
  CHECK((g * GradedDimension::monomial(1)).to_string() == "1 + v + 2v^2");
  CHECK(GradedDimension().to_string() == "0");
}

TEST_CASE("length, reduced words and Bruhat order against oracles") {
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_perms(n);
    for (const auto& w : perms) {
      CHECK(length(w) == inversions(w));
      for (auto conv : {WordConvention::LexMin, WordConvention::LexMax}) {
        ReducedWord word = canonical_reduced_word(w, conv);
        CHECK(static_cast<int>(word.size()) == length(w));
        CHECK(evaluate(word, n) == w);
        CHECK(is_reduced(word, n));
      }
      for (int r = 1; r < n; ++r) CHECK(is_left_descent(w, r) == (length(w.left_mul_simple(r)) < length(w)));
    }
    if (n <= 4)
      for (const auto& x : perms)
        for (const auto& w : perms) CHECK(bruhat_leq(x, w) == bruhat_by_subwords(x, w));
  }
  CHECK(canonical_reduced_word(Permutation({3, 2, 1})) == ReducedWord{1, 2, 1});
  CHECK(canonical_reduced_word(Permutation({3, 2, 1}), WordConvention::LexMax) == ReducedWord{2, 1, 2});
}

TEST_CASE("braid paths connect reduced words") {
  std::mt19937 rng(5);
  for (const auto& w : all_perms(5)) {
    ReducedWord a = canonical_reduced_word(w, WordConvention::LexMin);
    ReducedWord b = canonical_reduced_word(w, WordConvention::LexMax);
    ReducedWord cur = a;
    for (const auto& mv : braid_path(a, b)) {
      if (mv.kind == BraidMove::Commute) {
        REQUIRE(std::abs(cur[mv.pos] - cur[mv.pos + 1]) > 1);
        std::swap(cur[mv.pos], cur[mv.pos + 1]);
      } else {
        REQUIRE(cur[mv.pos] == cur[mv.pos + 2]);
        REQUIRE(std::abs(cur[mv.pos] - cur[mv.pos + 1]) == 1);
        std::swap(cur[mv.pos], cur[mv.pos + 1]);
        cur[mv.pos + 2] = cur[mv.pos];
      }
      CHECK(evaluate(cur, 5) == w);
    }
    CHECK(cur == b);
  }
  CHECK_THROWS(braid_path(ReducedWord{1}, ReducedWord{2}));
}
