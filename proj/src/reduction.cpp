#include "hbasis/reduction.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace hbasis {

namespace {
constexpr int kRefinementPasses = 2;
}  // namespace

DecomposedMacaulay decompose_macaulay(MacaulayMatrix c, const RankPolicy& policy) {
  DecomposedMacaulay out;
  out.svd = svd(c.matrix, SvdMode::Thin);
  const auto m = static_cast<std::size_t>(c.matrix.rows());
  const auto n = static_cast<std::size_t>(c.matrix.cols());
  const auto& sv = out.svd.singular_values;
  std::span<const double> s(sv.data(), static_cast<std::size_t>(sv.size()));
  out.rank = numerical_rank(s, policy, m, n);
  out.tau = rank_tolerance(s, policy, m, n);
  out.macaulay = std::move(c);
  return out;
}

MacaulayCache::MacaulayCache(PolynomialSystem system, RankPolicy policy)
    : system_(std::move(system)), policy_(policy) {}

const DecomposedMacaulay& MacaulayCache::at(int k) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(k); it != entries_.end()) return *it->second;
  }
  auto entry = std::make_unique<DecomposedMacaulay>(
      decompose_macaulay(build_macaulay(system_, k), policy_));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(k, std::move(entry));
  return *it->second;
}

HomogeneousDecomposition decompose_homogeneous(const HomogeneousForm& g,
                                               const DecomposedMacaulay& c) {
  const auto& layout = c.macaulay.layout;
  if (g.degree != layout.degree || g.num_vars != layout.num_vars) {
    throw std::invalid_argument("decompose_homogeneous: form does not match C_k");
  }
  const auto p = static_cast<Eigen::Index>(c.rank);
  const Eigen::Map<const Vector> gv(g.coeffs.data(), static_cast<Eigen::Index>(g.coeffs.size()));

  HomogeneousDecomposition out;
  const auto u1 = c.svd.U.leftCols(p);
  out.coefficients = u1.transpose() * gv;
  const Vector r = gv - u1 * out.coefficients;
  out.scaled = c.svd.V.leftCols(p) *
               out.coefficients.cwiseQuotient(c.svd.singular_values.head(p));
  if (!out.scaled.allFinite() || !r.allFinite()) {
    throw std::domain_error("decompose_homogeneous: non-finite values");
  }
  out.remainder = HomogeneousForm(g.num_vars, g.degree, std::vector<double>(r.begin(), r.end()));
  for (const auto& b : layout.blocks) {
    std::vector<double> part(b.width);
    for (std::size_t j = 0; j < b.width; ++j) part[j] = out.scaled(static_cast<Eigen::Index>(b.offset + j));
    HomogeneousForm form;
    form.num_vars = g.num_vars;
    form.degree = b.shift_degree;
    form.coeffs = std::move(part);
    out.generator_parts.push_back(std::move(form));
  }
  return out;
}

HomogeneousDecomposition decompose_homogeneous(const HomogeneousForm& g, const MacaulayMatrix& c,
                                               const RankPolicy& policy) {
  return decompose_homogeneous(g, decompose_macaulay(c, policy));
}

ReductionResult reduce(const Polynomial& p, MacaulayCache& cache) {
  const PolynomialSystem& system = cache.system();
  const std::size_t nv = system.num_vars();
  if (p.num_vars() != nv) throw std::invalid_argument("reduce: variable count mismatch");

  ReductionResult out;
  out.quotients.assign(system.size(), Polynomial(nv));
  out.remainder = Polynomial(nv);

  Polynomial rest = p;
  while (!rest.is_zero()) {
    const int k = rest.degree();
    const HomogeneousForm g = rest.component(k);
    const DecomposedMacaulay& c = cache.at(k);
    if (c.macaulay.layout.total_cols == 0 || c.rank == 0) {
      const Polynomial gp = Polynomial::from_form(g);
      out.remainder += gp;
      out.remainder_norms_per_degree.emplace_back(k, g.norm2());
      rest = rest.truncated_below(k);
      continue;
    }
    // One decomposition leaves g - C_k c_tilde - r^k at roughly eps * cond(C_k) * |g|; a
    // second pass on that residual (iterative refinement) makes the quotients and
    // the remainder agree with p to working precision.
    Vector rk = Vector::Zero(static_cast<Eigen::Index>(g.coeffs.size()));
    HomogeneousForm target = g;
    for (int pass = 0; pass < kRefinementPasses; ++pass) {
      const HomogeneousDecomposition dec = decompose_homogeneous(target, c);
      rk += Eigen::Map<const Vector>(dec.remainder.coeffs.data(), static_cast<Eigen::Index>(dec.remainder.coeffs.size()));
      for (std::size_t i = 0; i < system.size(); ++i) {
        const HomogeneousForm& part = dec.generator_parts[i];
        if (part.coeffs.empty()) continue;
        const Polynomial gf = Polynomial::from_form(part);
        if (gf.is_zero()) continue;
        rest -= gf * system[i];
        out.quotients[i] += gf;
      }
      target = rest.component(k);
      Eigen::Map<Vector>(target.coeffs.data(), static_cast<Eigen::Index>(target.coeffs.size())) -= rk;
    }
    const HomogeneousForm rform(g.num_vars, k, std::vector<double>(rk.begin(), rk.end()));
    out.remainder += Polynomial::from_form(rform);
    out.remainder_norms_per_degree.emplace_back(k, rform.norm2());
    // What is left at degree k is rounding noise of the last pass.
    rest = rest.truncated_below(k);
    if (!std::isfinite(rest.norm2())) throw std::domain_error("reduce: non-finite coefficient");
  }

  const double prune = std::numeric_limits<double>::epsilon() * p.norm2();
  for (auto& q : out.quotients) q = q.pruned(prune);
  out.remainder = out.remainder.pruned(prune);

  Polynomial residual = p - out.remainder;
  for (std::size_t i = 0; i < system.size(); ++i) residual -= out.quotients[i] * system[i];
  out.reconstruction_residual = residual.norm2();
  if (!std::isfinite(out.reconstruction_residual)) {
    throw std::domain_error("reduce: non-finite values encountered");
  }
  return out;
}

ReductionResult reduce(const Polynomial& p, const PolynomialSystem& system,
                       const RankPolicy& policy) {
  MacaulayCache cache(system, policy);
  return reduce(p, cache);
}

bool is_numerically_zero(const Polynomial& r, double epsilon, ZeroTest mode, double scale) {
  const double norm = r.norm2();
  if (mode == ZeroTest::Absolute) return norm <= epsilon;
  return norm <= epsilon * std::max(1.0, scale);
}

}  // namespace hbasis
