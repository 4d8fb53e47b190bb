// Tableau order and standard-basis properties on small shapes; the
// acceptance binary runs the full sweeps.
#include "doctest.h"
#include "klrspecht/properties.hpp"

using namespace klr;

TEST_CASE("order characterisations on small shapes") {
  for (int l = 1; l <= 2; ++l)
    for (int n = 0; n <= 4; ++n) {
      auto all = multipartitions(l, n);
      for (const auto& lam : all) {
        auto a = check_bruhat_vs_shapes(lam);
        auto b = check_bruhat_vs_conjugate_shapes(lam);
        CHECK_MESSAGE(a.passed(), a.witness);
        CHECK_MESSAGE(b.passed(), b.witness);
        for (const auto& mu : all) {
          auto c = check_dominated_vs_shapes(lam, mu);
          CHECK_MESSAGE(c.passed(), c.witness);
        }
      }
    }
}

TEST_CASE("strict tableaux counts") {
  auto lam = Multipartition::parse("2,1");
  CHECK(row_strict_tableaux(lam).size() == 3);
  CHECK(column_strict_tableaux(lam).size() == 3);
  CHECK(row_strict_tableaux(Multipartition::parse("1|1")).size() == 2);
}

TEST_CASE("reduced subexpressions") {
  Permutation w = evaluate({1, 2, 1}, 3);
  CHECK(has_reduced_subexpression({1, 2, 1}, w));
  CHECK(has_reduced_subexpression({2, 1, 2}, w));
  CHECK_FALSE(has_reduced_subexpression({1, 2}, w));
  CHECK(has_reduced_subexpression({1, 1, 2, 2, 1}, w));
  CHECK(has_reduced_subexpression({}, Permutation(3)));
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    auto word = random_reduced_word(w, rng);
    CHECK(evaluate(word, 3) == w);
    CHECK(word.size() == 3);
  }
}

TEST_CASE("standard basis properties on small modules") {
  std::mt19937 rng(17);
  for (auto cfg : {AlgebraConfig::make(2, {0}), AlgebraConfig::make(3, {0, 1})}) {
    int top = cfg.level() == 1 ? 5 : 4;
    for (int n = 0; n <= top; ++n)
      for (const auto& lam : multipartitions(cfg.level(), n)) {
        auto model = build_column_model<Rational>(lam, cfg);
        for (const auto& r : check_standard_basis(model, rng, 30)) CHECK_MESSAGE(r.passed(), r.name << ": " << r.witness);
      }
  }
}
