// Specht module construction: validation of the relations, agreement across
// fields and orientations, and fault injection.
#include "doctest.h"
#include "klrspecht/specht.hpp"

using namespace klr;

namespace {

template <class S>
void check_model(const SpechtModel<S>& m, const Multipartition& lam, const AlgebraConfig& cfg) {
  ValidationReport rep = validate(m);
  INFO(lam.to_string() << " e=" << cfg.e_string() << " kappa=" << cfg.kappa_string() << ": " << rep.summary());
  CHECK(rep.passed());
  CHECK(static_cast<std::size_t>(m.dim()) == enumerate_std(lam).size());
  CHECK(m.graded_dimension() == std_graded_dimension(lam, cfg, m.orientation == Orientation::Column));
}

}  // namespace

TEST_CASE("small column models satisfy every relation") {
  for (auto cfg : {AlgebraConfig::make(2, {0}), AlgebraConfig::make(3, {0}), AlgebraConfig::make(0, {0}),
                   AlgebraConfig::make(2, {0, 1}), AlgebraConfig::make(3, {0, 0})}) {
    int top = cfg.level() == 1 ? 5 : 4;
    for (int n = 0; n <= top; ++n)
      for (const auto& lam : multipartitions(cfg.level(), n)) {
        auto m = build_column_model<Rational>(lam, cfg);
        check_model(m, lam, cfg);
        CHECK(m.basis[m.seed] == t_col(lam));
      }
  }
}

TEST_CASE("row models satisfy every relation and are seeded at t^lambda") {
  for (auto cfg : {AlgebraConfig::make(2, {0}), AlgebraConfig::make(3, {0, 1})}) {
    int top = cfg.level() == 1 ? 5 : 4;
    for (int n = 0; n <= top; ++n)
      for (const auto& lam : multipartitions(cfg.level(), n)) {
        auto m = build_row_model<Rational>(lam, cfg);
        check_model(m, lam, cfg);
        CHECK(m.basis[m.seed] == t_row(lam));
        for (int k = 0; k < m.dim(); ++k) CHECK(m.degrees[k] == degree(m.basis[k], cfg));
      }
  }
}

TEST_CASE("prime fields give the same modules") {
  ModP::Context ctx(3);
  auto cfg = AlgebraConfig::make(3, {0, 1}, FieldSpec{3});
  for (int n = 0; n <= 4; ++n)
    for (const auto& lam : multipartitions(2, n)) check_model(build_column_model<ModP>(lam, cfg), lam, cfg);
  auto cfg2 = AlgebraConfig::make(2, {0}, FieldSpec{2});
  ModP::Context ctx2(2);
  for (int n = 0; n <= 5; ++n)
    for (const auto& lam : multipartitions(1, n)) check_model(build_column_model<ModP>(lam, cfg2), lam, cfg2);
}

TEST_CASE("empty multipartition is the trivial module") {
  auto cfg = AlgebraConfig::make(3, {0, 2});
  auto m = build_column_model<Rational>(Multipartition::empty(2), cfg);
  CHECK(m.dim() == 1);
  CHECK(m.graded_dimension().to_string() == "1");
  CHECK(validate(m).passed());
}

TEST_CASE("basis vectors are psi words applied to the seed") {
  auto cfg = AlgebraConfig::make(3, {0, 1});
  auto lam = Multipartition::parse("2,1|1,1");
  auto m = build_column_model<Rational>(lam, cfg);
  auto z = SparseVector<Rational>::unit(m.seed);
  for (int k = 0; k < m.dim(); ++k) {
    auto w = canonical_reduced_word(perm_of_col(m.basis[k]));
    CHECK(act_word(psi_word(w), z, m) == SparseVector<Rational>::unit(k));
  }
  // Garnir elements and column neighbours kill the seed
  for (const Node& a : column_garnir_nodes(lam)) CHECK(act(garnir_element_column<Rational>(lam, a, cfg), z, m).empty());
}

TEST_CASE("corrupting psi_1 is caught by the quadratic relation") {
  auto cfg = AlgebraConfig::make(3, {0});
  auto lam = Multipartition::parse("2,1");
  auto m = build_column_model<Rational>(lam, cfg);
  REQUIRE(validate(m).passed());
  for (int k = 0; k < m.dim(); ++k) {
    Accumulator<Rational> acc;
    acc.add(Rational(1), m.psi[0].columns[k]);
    acc.add(k, Rational(1));
    m.psi[0].columns[k] = acc.finish();
  }
  ValidationReport rep = validate(m);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.find("psi_r^2 e(i)") != nullptr);
  CHECK_FALSE(rep.find("psi_r^2 e(i)")->passed);
}

TEST_CASE("corrupting y is caught") {
  auto cfg = AlgebraConfig::make(2, {0});
  auto lam = Multipartition::parse("2,1,1");
  auto m = build_column_model<Rational>(lam, cfg);
  m.y[0].columns[m.seed] = SparseVector<Rational>::unit(m.seed);
  ValidationReport rep = validate(m);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.find("seed relations")->passed);
}

TEST_CASE("model dumps are deterministic") {
  auto cfg = AlgebraConfig::make(2, {0, 1});
  auto lam = Multipartition::parse("2|1,1");
  auto a = build_column_model<Rational>(lam, cfg), b = build_column_model<Rational>(lam, cfg);
  CHECK(model_to_json(a) == model_to_json(b));
  ModelCache<Rational> cache;
  CHECK(cache.column(lam, cfg) == cache.column(lam, cfg));
  CHECK(cache.size() == 1);
}

TEST_CASE("the alternate word convention is a unitriangular change of basis") {
  auto cfg = AlgebraConfig::make(2, {0});
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : multipartitions(1, n)) {
      auto lo = build_column_model<Rational>(lam, cfg, WordConvention::LexMin);
      auto hi = build_column_model<Rational>(lam, cfg, WordConvention::LexMax);
      CHECK(validate(hi).passed());
      CHECK(lo.basis == hi.basis);
      auto z = SparseVector<Rational>::unit(lo.seed);
      for (int k = 0; k < lo.dim(); ++k) {
        auto w = canonical_reduced_word(perm_of_col(lo.basis[k]), WordConvention::LexMax);
        auto x = act_word(psi_word(w), z, lo);
        CHECK(x.coeff(k) == Rational(1));
        for (const auto& [u, c] : x) CHECK(tableau_dominates(lo.basis[k], lo.basis[u]));
      }
    }
}
