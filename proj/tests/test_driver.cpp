#include <doctest.h>

#include <cmath>

#include "hbasis/driver.hpp"
#include "hbasis/exact.hpp"
#include "hbasis/reduction.hpp"
#include "test_util.hpp"

using namespace hbasis;

namespace {

const std::vector<std::string> xy{"x", "y"};

}  // namespace

TEST_CASE("bound tracker under the pairwise lcm rule") {
  BoundTracker t(4, BoundRule::PairwiseLcm);
  CHECK(t.update({MultiIndex{2, 0}}, 2) == 1);
  CHECK(t.bound() == 4);  // a single monomial has no pair
  CHECK(t.update({MultiIndex{1, 1}}, 2) == 1);
  CHECK(t.minimal_monomials().size() == 2);
  CHECK(t.bound() == 3);
  CHECK(t.update({MultiIndex{3, 0}}, 3) == 0);
  CHECK(t.minimal_monomials().size() == 2);
  CHECK(t.bound() == 3);
  CHECK(t.history().back() == std::pair<int, int>{3, 3});
}

TEST_CASE("bound tracker never drops below the current degree") {
  BoundTracker t(2, BoundRule::PairwiseLcm);
  t.update({MultiIndex{1, 0}, MultiIndex{0, 1}}, 1);
  CHECK(t.bound() == 2);
  t.update({}, 5);
  CHECK(t.bound() == 5);
}

TEST_CASE("bound tracker under the doubled degree rule") {
  BoundTracker t(4, BoundRule::DoubledMaxDegree);
  t.update({MultiIndex{2, 0}}, 2);
  CHECK(t.bound() == 4);
  t.update({MultiIndex{1, 2}}, 3);
  CHECK(t.bound() == 6);
  // A newcomer that evicts a stored multiple keeps the set minimal.
  t.update({MultiIndex{1, 1}}, 2);
  CHECK(t.minimal_monomials().size() == 2);
  CHECK(t.bound() == 6);
  const BoundTracker u = update_bound(t, {MultiIndex{0, 4}}, 4);
  CHECK(u.bound() == 8);
  CHECK(t.bound() == 6);
}

TEST_CASE("leading monomials of C_k") {
  const PolynomialSystem f(2, {test::poly("x", xy), test::poly("y", xy)});
  CHECK(leading_monomials_at_degree(build_macaulay(f, 1), 1e-12) ==
        std::vector<MultiIndex>{MultiIndex{1, 0}, MultiIndex{0, 1}});
  const PolynomialSystem g(2, {test::poly("x^2 + y", xy)});
  CHECK(leading_monomials_at_degree(build_macaulay(g, 2), 1e-12) ==
        std::vector<MultiIndex>{MultiIndex{2, 0}});
  const auto liu = test::corpus("liu");
  for (int k = 2; k <= 4; ++k) {
    const MacaulayMatrix c = build_macaulay(liu.system, k);
    CHECK(leading_monomials_at_degree(c, 1e-10) ==
          exact_leading_monomials_at_degree(liu.system, k));
  }
}

TEST_CASE("new leading monomials follow the exact minimal ones") {
  const auto liu = test::corpus("liu");
  std::vector<MultiIndex> known;
  for (int k = 2; k <= 6; ++k) {
    const DecomposedMacaulay dc = decompose_macaulay(build_macaulay(liu.system, k), RankPolicy{});
    const auto fresh = new_leading_monomials(dc, known);
    std::vector<MultiIndex> expect;
    for (const auto& m : exact_leading_monomials_at_degree(liu.system, k)) {
      const bool covered = std::any_of(known.begin(), known.end(),
                                       [&](const MultiIndex& s) { return divides(s, m); });
      if (!covered) expect.push_back(m);
    }
    CAPTURE(k);
    CHECK(fresh == expect);
    known.insert(known.end(), fresh.begin(), fresh.end());
  }
}

TEST_CASE("numeric Hilbert function") {
  const PolynomialSystem f(2, {test::poly("x", xy), test::poly("y", xy)});
  CHECK(hilbert_function_numeric(f, 0) == 1);
  CHECK(hilbert_function_numeric(f, 1) == 0);
  CHECK(hilbert_function_numeric(f, 2) == 0);
  const PolynomialSystem g(2, {test::poly("x^2", xy)});
  for (int k = 1; k <= 8; ++k) CHECK(hilbert_function_numeric(g, k) == 2);
}

TEST_CASE("normalization") {
  const Polynomial p = test::poly("2*x + 2*y", xy);
  const Polynomial l2 = normalize_polynomial(p, Normalization::L2);
  CHECK(l2.coefficient(MultiIndex{1, 0}) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(l2.coefficient(MultiIndex{0, 1}) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(normalize_polynomial(p, Normalization::None) == p);
  CHECK(normalize_polynomial(p, Normalization::L1).norm1() == doctest::Approx(1.0));
  CHECK(normalize_polynomial(test::poly("3*x - 6", xy), Normalization::LInf).norm_inf() ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(normalize_polynomial(Polynomial(2), Normalization::L2), std::invalid_argument);
  const PolynomialSystem s(2, {p, test::poly("y - 4", xy)});
  const PolynomialSystem n = normalize_system(s, Normalization::L2);
  for (const auto& g : n.generators()) {
    CHECK(g.norm2() == doctest::Approx(1.0));
  }
}

TEST_CASE("significant part drops negligible leading components") {
  const Polynomial r = test::poly("y + 1", xy) + test::poly("x^2", xy) * 1e-12;
  CHECK(significant_part(r, 1e-10, ZeroTest::Absolute, 1.0) == test::poly("y + 1", xy));
  CHECK(significant_part(r, 1e-14, ZeroTest::Absolute, 1.0) == r);
  // Relative: the threshold scales with the syzygy polynomial.
  const Polynomial s = test::poly("y", xy) * 1e-7 + test::poly("1", xy);
  CHECK(significant_part(s, 1e-9, ZeroTest::Relative, 1e3) == test::poly("1", xy));
  CHECK(significant_part(s, 1e-9, ZeroTest::Relative, 1.0) == s);
  CHECK(significant_part(Polynomial(2), 1e-9, ZeroTest::Absolute, 1.0).is_zero());
}

TEST_CASE("compute on the maximal ideal") {
  const auto f = test::corpus("x-y-trivial");
  const HBasisResult r = compute_hbasis(f.system);
  CHECK(r.status == HBasisStatus::Success);
  CHECK(r.generators.size() == 2);
  CHECK(r.d_max == 1);
  CHECK(r.final_bound == 2);
  CHECK(r.appended == 0);
  REQUIRE(r.verified.has_value());
  CHECK(*r.verified);
}

TEST_CASE("compute on Liu") {
  const auto f = test::corpus("liu");
  std::size_t callbacks = 0;
  HBasisConfig cfg;
  cfg.on_degree = [&](const DegreeDiagnostics&) { ++callbacks; };
  const HBasisResult r = compute_hbasis(f.system, cfg);
  CHECK(r.status == HBasisStatus::Success);
  CHECK(r.generators.size() == 5);
  CHECK(r.d_max == 2);
  CHECK(r.final_bound == 8);
  CHECK(r.verified.value_or(false));
  CHECK(callbacks == r.diagnostics.size());
  CHECK(r.bound_history.back().second == 8);
  // The original generators stay first, in order.
  for (std::size_t i = 0; i < f.system.size(); ++i) CHECK(r.generators[i] == f.system[i]);
  // Every appended generator is an ideal member of the input.
  for (std::size_t i = f.system.size(); i < r.generators.size(); ++i) {
    const auto red = reduce(r.generators[i], f.system, RankPolicy{});
    CHECK(red.reconstruction_residual <= 1e-8);
  }
  const auto exact = exact_ideal_hilbert_function(f.system, 10);
  for (int k = 0; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(hilbert_function_numeric(r.generators, k) == exact[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("both selection rules reach the Liu basis") {
  const auto f = test::corpus("liu");
  HBasisConfig cfg;
  cfg.selection = Selection::FirstNonzero;
  const HBasisResult r = compute_hbasis(f.system, cfg);
  CHECK(r.status == HBasisStatus::Success);
  CHECK(r.generators.size() == 5);
  CHECK(r.final_bound == 8);
}

TEST_CASE("constant remainders end the computation") {
  const PolynomialSystem f(2, {test::poly("x", xy), test::poly("x - 1", xy)});
  const HBasisResult r = compute_hbasis(f);
  CHECK(r.status == HBasisStatus::ConstantIdeal);
  REQUIRE(r.generators.size() == 1);
  CHECK(r.generators[0] == Polynomial::constant(2, 1.0));
}

TEST_CASE("degree cap") {
  const auto f = test::corpus("liu");
  HBasisConfig cfg;
  cfg.max_degree_cap = 5;
  const HBasisResult r = compute_hbasis(f.system, cfg);
  CHECK(r.status == HBasisStatus::DegreeCapReached);
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("invalid configurations") {
  const PolynomialSystem f(2, {test::poly("x^2", xy)});
  HBasisConfig bad;
  bad.epsilon = 0.0;
  CHECK_THROWS_AS(compute_hbasis(f, bad), std::invalid_argument);
  HBasisConfig cap;
  cap.max_degree_cap = 3;
  CHECK_THROWS_AS(compute_hbasis(f, cap), std::invalid_argument);
  CHECK_THROWS_AS(compute_hbasis(PolynomialSystem(2, {})), std::invalid_argument);
}

TEST_CASE("verification accepts a basis and rejects a non-basis") {
  const auto f = test::corpus("liu");
  const HBasisResult r = compute_hbasis(f.system);
  const HBasisConfig cfg;
  CHECK(verify_hbasis(r.generators, r.final_bound, cfg).ok);
  const VerificationResult raw = verify_hbasis(f.system, 4, cfg);
  CHECK_FALSE(raw.ok);
  CHECK(raw.syzygies_checked > 0);
}
