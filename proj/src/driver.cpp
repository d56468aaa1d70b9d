#include "hbasis/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "hbasis/syzygy.hpp"

namespace hbasis {

namespace {
constexpr double kLeadingPivotTolerance = 1e-8;
}  // namespace

std::string to_string(HBasisStatus status) {
  switch (status) {
    case HBasisStatus::Success: return "Success";
    case HBasisStatus::ConstantIdeal: return "ConstantIdeal";
    case HBasisStatus::DegreeCapReached: return "DegreeCapReached";
    case HBasisStatus::NumericalBreakdown: return "NumericalBreakdown";
  }
  return "Unknown";
}

std::string to_string(Normalization mode) {
  switch (mode) {
    case Normalization::None: return "none";
    case Normalization::L1: return "l1";
    case Normalization::L2: return "l2";
    case Normalization::LInf: return "linf";
  }
  return "unknown";
}

BoundTracker::BoundTracker(int initial_bound, BoundRule rule) : rule_(rule), bound_(initial_bound) {}

std::size_t BoundTracker::update(const std::vector<MultiIndex>& monomials, int k) {
  std::size_t inserted = 0;
  for (const auto& m : monomials) {
    const bool covered = std::any_of(minimal_.begin(), minimal_.end(),
                                     [&](const MultiIndex& s) { return divides(s, m); });
    if (covered) continue;
    std::erase_if(minimal_, [&](const MultiIndex& s) { return divides(m, s); });
    minimal_.push_back(m);
    ++inserted;
  }
  if (inserted > 0) {
    int best = 0;
    if (rule_ == BoundRule::DoubledMaxDegree) {
      for (const auto& m : minimal_) best = std::max(best, 2 * m.total_degree());
      bound_ = std::max(bound_, best);
    } else if (minimal_.size() >= 2) {
      for (std::size_t i = 0; i < minimal_.size(); ++i) {
        for (std::size_t j = i + 1; j < minimal_.size(); ++j) {
          best = std::max(best, lcm(minimal_[i], minimal_[j]).total_degree());
        }
      }
      bound_ = best;
    }
  }
  bound_ = std::max(bound_, k);
  history_.emplace_back(k, bound_);
  return inserted;
}

BoundTracker update_bound(BoundTracker tracker, const std::vector<MultiIndex>& monomials, int k) {
  tracker.update(monomials, k);
  return tracker;
}

std::vector<MultiIndex> leading_monomials_at_degree(const MacaulayMatrix& c, double tol) {
  const Matrix transposed = c.matrix.transpose();
  std::vector<MultiIndex> out;
  for (std::size_t col : echelon_pivot_columns(transposed, tol)) {
    out.push_back(monomial_unrank(c.layout.num_vars, c.layout.degree, col));
  }
  return out;
}

std::vector<MultiIndex> new_leading_monomials(const DecomposedMacaulay& dc,
                                              const std::vector<MultiIndex>& known) {
  const auto& layout = dc.macaulay.layout;
  const std::vector<MultiIndex> all = monomials_of_degree(static_cast<int>(layout.num_vars), layout.degree);
  std::vector<bool> shadow(all.size(), false);
  std::size_t shadow_size = 0;
  for (std::size_t j = 0; j < all.size(); ++j) {
    shadow[j] = std::any_of(known.begin(), known.end(),
                            [&](const MultiIndex& m) { return divides(m, all[j]); });
    shadow_size += shadow[j] ? 1 : 0;
  }
  std::vector<MultiIndex> out;
  if (dc.rank <= shadow_size) return out;
  const std::size_t need = dc.rank - shadow_size;

  // Column j of U_1^T is a pivot iff it leaves the span of columns 0..j-1.
  // Shadow columns are pivots by construction; the others are tested by their
  // distance to the span accumulated so far.
  const auto r = static_cast<Eigen::Index>(dc.rank);
  const Matrix basis = dc.svd.U.leftCols(r).transpose();
  Matrix q(r, r);
  Eigen::Index have = 0;
  for (std::size_t j = 0; j < all.size() && have < r && out.size() < need; ++j) {
    Vector w = basis.col(static_cast<Eigen::Index>(j));
    for (int pass = 0; pass < 2; ++pass) {
      w -= q.leftCols(have) * (q.leftCols(have).transpose() * w);
    }
    const double rho = w.norm();
    if (!shadow[j]) {
      if (rho <= kLeadingPivotTolerance) continue;
      out.push_back(all[j]);
    }
    if (rho > 0.0) q.col(have++) = w / rho;
  }
  return out;
}

std::size_t hilbert_function_numeric(const PolynomialSystem& h, int k, const RankPolicy& policy) {
  const int n = static_cast<int>(h.num_vars());
  const MacaulayMatrix c = build_macaulay(h, k);
  if (c.layout.total_cols == 0) return dim_homogeneous(n, k);
  const SvdResult dec = svd(c.matrix, SvdMode::Thin);
  return dim_homogeneous(n, k) - numerical_rank(dec.singular_values, policy,
                                                static_cast<std::size_t>(c.matrix.rows()),
                                                static_cast<std::size_t>(c.matrix.cols()));
}

Polynomial normalize_polynomial(const Polynomial& p, Normalization mode) {
  if (p.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
  switch (mode) {
    case Normalization::None: return p;
    case Normalization::L1: return p * (1.0 / p.norm1());
    case Normalization::L2: return p * (1.0 / p.norm2());
    case Normalization::LInf: return p * (1.0 / p.norm_inf());
  }
  return p;
}

PolynomialSystem normalize_system(const PolynomialSystem& system, Normalization mode) {
  PolynomialSystem out(system.num_vars(), {});
  for (const auto& g : system.generators()) out.append(normalize_polynomial(g, mode));
  return out;
}

Polynomial significant_part(const Polynomial& r, double epsilon, ZeroTest mode, double scale) {
  Polynomial rest = r;
  while (!rest.is_zero()) {
    const int k = rest.degree();
    const Polynomial top = Polynomial::from_form(rest.component(k));
    if (!is_numerically_zero(top, epsilon, mode, scale)) break;
    rest = rest.truncated_below(k);
  }
  return rest;
}

namespace {

struct DegreeSyzygies {
  SyzygyBasis basis;
  std::optional<UpdateDiagnostics> update;
};

DegreeSyzygies syzygies_at(const std::optional<SyzygyBasis>& previous, const MacaulayMatrix& c,
                           const RankPolicy& policy) {
  DegreeSyzygies out;
  if (!previous || previous->degree != c.degree() - 1) {
    out.basis = initial_syzygies(c, policy);
    return out;
  }
  const auto shifts = build_shift_family(previous->layout, c.layout);
  UpdateDiagnostics diag;
  out.basis = update_syzygies(*previous, c, shifts, policy, &diag);
  out.update = diag;
  return out;
}

double scale_of(const Polynomial& p) { return p.norm2(); }

}  // namespace

VerificationResult verify_hbasis(const PolynomialSystem& h, int up_to_degree,
                                 const HBasisConfig& config) {
  VerificationResult out;
  MacaulayCache cache(h, config.rank_policy);
  std::optional<SyzygyBasis> previous;
  for (int k = h.min_degree(); k <= up_to_degree; ++k) {
    const MacaulayMatrix c = build_macaulay(h, k);
    DegreeSyzygies syz = syzygies_at(previous, c, config.rank_policy);
    const Matrix pure = syz.basis.pure();
    for (Eigen::Index j = 0; j < pure.cols(); ++j) {
      const Vector v = pure.col(j);
      const Polynomial p = syzygy_to_polynomial(v, h, c.layout).truncated_below(k);
      const ReductionResult red = reduce(p, cache);
      const Polynomial sig =
          significant_part(red.remainder, config.epsilon, config.zero_test, scale_of(p));
      out.max_remainder = std::max(out.max_remainder, sig.norm2());
      ++out.syzygies_checked;
      if (!is_numerically_zero(sig, config.epsilon, config.zero_test, scale_of(p))) out.ok = false;
    }
    previous = std::move(syz.basis);
  }
  return out;
}

HBasisResult compute_hbasis(const PolynomialSystem& input, const HBasisConfig& config) {
  if (input.empty()) throw std::invalid_argument("compute_hbasis: empty generator list");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("compute_hbasis: epsilon must be > 0");
  const auto start = std::chrono::steady_clock::now();

  HBasisResult result;
  PolynomialSystem system = normalize_system(input, config.normalize);
  const int initial_bound = 2 * system.max_degree();
  const int cap = config.max_degree_cap.value_or(3 * initial_bound);
  if (cap < initial_bound) {
    throw std::invalid_argument("compute_hbasis: max degree cap below 2 * max input degree");
  }

  BoundTracker tracker(initial_bound, config.bound_rule);
  auto cache = std::make_unique<MacaulayCache>(system, config.rank_policy);
  std::optional<SyzygyBasis> previous;
  int k = system.min_degree();
  const RankPolicy& policy = config.rank_policy;

  auto finish = [&](HBasisStatus status) {
    result.status = status;
    result.generators = system;
    result.final_bound = tracker.bound();
    result.bound_history = tracker.history();
    result.d_max = system.max_degree();
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  try {
    while (k <= tracker.bound()) {
      if (k > cap) {
        result.message = "degree cap " + std::to_string(cap) + " reached";
        return finish(HBasisStatus::DegreeCapReached);
      }
      const auto degree_start = std::chrono::steady_clock::now();
      const DecomposedMacaulay& dc = cache->at(k);
      const MacaulayMatrix& c = dc.macaulay;
      DegreeSyzygies syz = syzygies_at(previous, c, policy);

      DegreeDiagnostics diag;
      diag.step = result.appended;
      diag.degree = k;
      diag.rows = static_cast<std::size_t>(c.matrix.rows());
      diag.cols = c.layout.total_cols;
      diag.rank = dc.rank;
      diag.nullity = syz.basis.size();
      diag.pure_count = syz.basis.pure_columns.size();
      diag.tau = dc.tau;
      const auto& sv = dc.svd.singular_values;
      if (dc.rank > 0) diag.min_accepted_sigma = sv(static_cast<Eigen::Index>(dc.rank) - 1);
      if (static_cast<Eigen::Index>(dc.rank) < sv.size()) {
        diag.max_rejected_sigma = sv(static_cast<Eigen::Index>(dc.rank));
      }
      if (syz.update) {
        diag.from_update = true;
        diag.extension_rank = syz.update->rank_a;
        diag.extension_cols = static_cast<std::size_t>(syz.update->spectrum_a.size());
        diag.pure_rank = syz.update->rank_b;
        diag.extension_gap = syz.update->gap_a;
        diag.pure_gap = syz.update->gap_b;
      }

      std::optional<Polynomial> new_generator;
      double best_weight = 0.0;
      const Matrix pure = syz.basis.pure();
      for (Eigen::Index j = 0; j < pure.cols(); ++j) {
        const Vector v = pure.col(j);
        const Polynomial p = syzygy_to_polynomial(v, system, c.layout).truncated_below(k);
        const ReductionResult red = reduce(p, *cache);
        const Polynomial sig =
            significant_part(red.remainder, config.epsilon, config.zero_test, scale_of(p));
        diag.remainder_norms.push_back(sig.norm2());
        if (!is_numerically_zero(sig, config.epsilon, config.zero_test, scale_of(p))) {
          const double w = sig.norm2() / std::max(scale_of(p), 1e-300);
          if (!new_generator || w > best_weight) { new_generator = sig; best_weight = w; }
          if (config.selection == Selection::FirstNonzero) break;
        }
      }

      const auto lms = new_leading_monomials(dc, tracker.minimal_monomials());
      diag.new_leading_monomials = tracker.update(lms, k);
      diag.bound_after = tracker.bound();
      diag.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - degree_start).count();
      if (config.on_degree) config.on_degree(diag);

      if (new_generator) {
        const int deg = new_generator->degree();
        diag.appended_degree = deg;
        if (config.diagnostics) result.diagnostics.push_back(std::move(diag));
        ++result.appended;
        if (deg == 0) {
          system = PolynomialSystem(system.num_vars(),
                                    {Polynomial::constant(system.num_vars(), 1.0)});
          result.message = "nonzero constant remainder";
          return finish(HBasisStatus::ConstantIdeal);
        }
        system.append(normalize_polynomial(*new_generator, config.normalize));
        cache = std::make_unique<MacaulayCache>(system, policy);
        previous.reset();
        k = deg;
        continue;
      }

      if (config.diagnostics) result.diagnostics.push_back(std::move(diag));
      previous = std::move(syz.basis);
      ++k;
    }
  } catch (const std::domain_error& e) {
    result.message = e.what();
    return finish(HBasisStatus::NumericalBreakdown);
  }

  finish(HBasisStatus::Success);
  if (config.verify) {
    const VerificationResult check = verify_hbasis(system, tracker.bound(), config);
    result.verified = check.ok;
    result.verification_max_remainder = check.max_remainder;
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace hbasis
