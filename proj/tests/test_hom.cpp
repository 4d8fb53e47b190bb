// Homomorphism spaces: the worked e=2 example, small hand-checkable cases
// and structural properties of the solver output.
#include "doctest.h"
#include "klrspecht/hom.hpp"

using namespace klr;

namespace {

const AlgebraConfig kCfg = AlgebraConfig::make(2, {0, 1, 0});
const Multipartition kLambda = Multipartition::parse("1,1|2,1,1,1|1");
const Multipartition kMu = Multipartition::parse("1|3,1|3");

template <class S>
std::string only_image(const HomBasis<S>& h) {
  REQUIRE(h.basis.size() == 1);
  return image_to_string(h.basis[0].image, *h.target);
}

}  // namespace

TEST_CASE("worked example: the three dominated hom spaces") {
  ModelCache<Rational> cache;
  RowSplit rs = split_rows(kLambda, 1, 2, kCfg), ms = split_rows(kMu, 1, 2, kCfg);
  auto top = hom_space(rs.top, ms.top, kCfg.with_kappa(rs.kappa_top), true, cache);
  auto bottom = hom_space(rs.bottom, ms.bottom, kCfg.with_kappa(rs.kappa_bottom), true, cache);
  auto full = hom_space(kLambda, kMu, kCfg, true, cache);
  CHECK(top.graded_dimension().to_string() == "v");
  CHECK(bottom.graded_dimension().to_string() == "1");
  CHECK(full.graded_dimension().to_string() == "v");
  CHECK(only_image(top) == "v_3|1,2,4");
  CHECK(only_image(bottom) == "v_2|1,3,4");
  CHECK(only_image(full) == "v_7|2,6,8;3|1,4,5 + 2v_7|4,6,8;5|1,2,3");

  // dual basis: f_s = v_s, f_t = v_t, f_u = v_u + 2v_v
  auto f_top = dual_basis_f(*top.target);
  auto f_bottom = dual_basis_f(*bottom.target);
  auto f_full = dual_basis_f(*full.target);
  auto s = Tableau::parse("3|1,2,4"), t = Tableau::parse("2|1,3,4"), u = Tableau::parse("7|2,6,8;3|1,4,5");
  CHECK(image_to_string(f_top[top.target->index_of(s)], *top.target) == "v_3|1,2,4");
  CHECK(image_to_string(f_bottom[bottom.target->index_of(t)], *bottom.target) == "v_2|1,3,4");
  CHECK(image_to_string(f_full[full.target->index_of(u)], *full.target) == "v_7|2,6,8;3|1,4,5 + 2v_7|4,6,8;5|1,2,3");

  auto cand = row_join_candidate(bottom, bottom.basis[0], top, top.basis[0], kLambda, *full.target, 1, 2);
  CHECK(cand.is_hom);
  CHECK(same_span<Rational>({cand.vector}, full.images()));

  CHECK(hom_to_json(full) ==
        R"({"graded_dim":{"1":1},"basis":[{"degree":1,"image":{"7|2,6,8;3|1,4,5":"1","7|4,6,8;5|1,2,3":"2"}}]})");
}

TEST_CASE("worked example: the full hom space") {
  ModelCache<Rational> cache;
  auto full = hom_space(kLambda, kMu, kCfg, false, cache);
  auto dom = hom_space(kLambda, kMu, kCfg, true, cache);
  CHECK(full.graded_dimension().to_string() == "v");
  CHECK(span_contained(dom.images(), full.images()));
}

TEST_CASE("(1,1) to (2) at e=2: a hom exists but is not dominated") {
  ModelCache<Rational> cache;
  auto cfg = AlgebraConfig::make(2, {0});
  auto lam = Multipartition::parse("1,1"), mu = Multipartition::parse("2");
  auto full = hom_space(lam, mu, cfg, false, cache);
  CHECK(full.graded_dimension().to_string() == "v^-1");
  CHECK(only_image(full) == "v_1,2");
  CHECK(hom_space(lam, mu, cfg, true, cache).graded_dimension().is_zero());
}

TEST_CASE("different contents give zero") {
  ModelCache<Rational> cache;
  auto h = hom_space(Multipartition::parse("2,1"), Multipartition::parse("3"), AlgebraConfig::make(4, {0}), false, cache);
  CHECK(h.basis.empty());
  CHECK(h.target == nullptr);
  CHECK(hom_to_json(h) == R"({"graded_dim":{},"basis":[]})");
}

TEST_CASE("hom images satisfy the relations of the source and sit at i_lambda") {
  ModelCache<Rational> cache;
  for (auto cfg : {AlgebraConfig::make(2, {0}), AlgebraConfig::make(3, {0, 1})}) {
    int top = cfg.level() == 1 ? 5 : 4;
    for (int n = 1; n <= top; ++n) {
      auto all = multipartitions(cfg.level(), n);
      for (const auto& lam : all)
        for (const auto& mu : all) {
          auto full = hom_space(lam, mu, cfg, false, cache);
          auto dom = hom_space(lam, mu, cfg, true, cache);
          CHECK(span_contained(dom.images(), full.images()));
          CHECK(rank_of(full.images()) == full.basis.size());
          for (const auto& b : full.basis) {
            CHECK(is_hom_image(lam, b.image, *full.target));
            for (const auto& [k, c] : b.image)
              CHECK(full.target->degrees[k] - codegree(t_col(lam), cfg) == b.degree);
          }
          for (const auto& b : dom.basis)
            for (const auto& [k, c] : b.image) CHECK(is_col_dominated(dom.target->basis[k], lam));
          if (lam == mu) CHECK(dom.graded_dimension() == GradedDimension::monomial(0));
        }
    }
  }
}

TEST_CASE("hom spaces agree over Q and F_p on small cases") {
  auto cfgq = AlgebraConfig::make(3, {0, 1});
  ModelCache<Rational> cq;
  ModP::Context ctx(7);
  auto cfgp = AlgebraConfig::make(3, {0, 1}, FieldSpec{7});
  ModelCache<ModP> cp;
  for (int n = 1; n <= 4; ++n) {
    auto all = multipartitions(2, n);
    for (const auto& lam : all)
      for (const auto& mu : all)
        CHECK(hom_space(lam, mu, cfgq, true, cq).graded_dimension() ==
              hom_space(lam, mu, cfgp, true, cp).graded_dimension());
  }
}
