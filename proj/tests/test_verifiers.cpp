// Verifiers on small sweeps, plus the gates that make them not applicable.
#include "doctest.h"
#include "klrspecht/verifiers.hpp"

using namespace klr;

namespace {

SweepSummary sweep(const std::string& th, AlgebraConfig cfg, int n, int threads = 2) {
  ModelCache<Rational> cache;
  SweepOptions o{th, cfg, n, 0, threads};
  return run_sweep(o, cache, [](const VerificationReport& r) {
    INFO(r.to_json());
    CHECK_FALSE(r.failed());
  });
}

}  // namespace

TEST_CASE("removal theorems hold on small sweeps") {
  for (const char* th : {"cr", "rr", "fcr", "gcr", "grr", "homconj", "dominatedbasis"}) {
    auto s = sweep(th, AlgebraConfig::make(2, {0, 1}), 4);
    CHECK(s.failures == 0);
    CHECK(s.passes > 0);
  }
  CHECK(sweep("domhom", AlgebraConfig::make(3, {0, 1}), 4).passes > 0);
}

TEST_CASE("reports come out in instance order whatever the thread count") {
  std::vector<std::string> one, four;
  ModelCache<Rational> c1, c4;
  auto cfg = AlgebraConfig::make(3, {0, 1});
  run_sweep<Rational>({"gcr", cfg, 4, 0, 1}, c1, [&](const VerificationReport& r) { one.push_back(r.to_json()); });
  run_sweep<Rational>({"gcr", cfg, 4, 0, 4}, c4, [&](const VerificationReport& r) { four.push_back(r.to_json()); });
  CHECK(one == four);
  CHECK_FALSE(one.empty());
}

TEST_CASE("hypothesis gates") {
  ModelCache<Rational> cache;
  auto lam = Multipartition::parse("2,1");
  CHECK(verify_domhom(lam, lam, AlgebraConfig::make(2, {0}), cache).verdict == Verdict::NotApplicable);
  CHECK(verify_domhom(Multipartition::parse("1|1"), Multipartition::parse("1|1"), AlgebraConfig::make(3, {0, 0}), cache)
            .verdict == Verdict::NotApplicable);
  // first columns differ
  CHECK(verify_cr(Multipartition::parse("2,1"), Multipartition::parse("3"), 1, AlgebraConfig::make(3, {0}), cache)
            .verdict == Verdict::NotApplicable);
  CHECK_THROWS(sweep("nope", AlgebraConfig::make(2, {0}), 2));
}

TEST_CASE("decomposable Specht modules") {
  ModelCache<Rational> cache;
  auto a = verify_decomposable(Multipartition::parse("5,1,1"), AlgebraConfig::make(2, {0}), cache);
  CHECK(a.verdict == Verdict::Pass);
  CHECK(a.left.total() >= 2);
  auto b = verify_decomposable(Multipartition::parse("3|3"), AlgebraConfig::make(3, {0, 0}), cache);
  CHECK(b.verdict == Verdict::Pass);
  CHECK(b.left.total() >= 2);
  CHECK(verify_decomposable(Multipartition::parse("2,1"), AlgebraConfig::make(3, {0}), cache).verdict == Verdict::Fail);
}

TEST_CASE("row-join on the worked example is checked hard") {
  ModelCache<Rational> cache;
  auto r = verify_exprow(Multipartition::parse("1,1|2,1,1,1|1"), Multipartition::parse("1|3,1|3"), 1, 2,
                         AlgebraConfig::make(2, {0, 1, 0}), cache, true);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.witness == "1 of 1 candidates are homomorphisms");
}
