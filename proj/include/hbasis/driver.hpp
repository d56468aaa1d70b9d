#ifndef HBASIS_DRIVER_HPP
#define HBASIS_DRIVER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbasis/macaulay.hpp"
#include "hbasis/numla.hpp"
#include "hbasis/polynomial.hpp"
#include "hbasis/reduction.hpp"

namespace hbasis {

enum class Normalization { None, L1, L2, LInf };

// DoubledMaxDegree: bound = 2 * (largest degree of a minimal leading
// monomial), never decreasing; the same rule that gives the initial bound
// 2 * max deg(f_i). PairwiseLcm: bound = largest deg lcm(m_i, m_j) over pairs
// of minimal leading monomials.
enum class BoundRule { DoubledMaxDegree, PairwiseLcm };

// Which non-zero remainder of a degree's pure syzygies is appended.
// FirstNonzero: lowest column index. LargestRelative: largest
// ||remainder|| / ||syzygy polynomial||, ties to the lowest index.
enum class Selection { FirstNonzero, LargestRelative };

struct DegreeDiagnostics {
  std::size_t step = 0;  // generators appended before this degree was visited
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::size_t pure_count = 0;
  double tau = 0.0;
  double min_accepted_sigma = 0.0;
  double max_rejected_sigma = 0.0;
  bool from_update = false;
  std::size_t extension_rank = 0;  // r
  std::size_t extension_cols = 0;
  std::size_t pure_rank = 0;  // r'
  double extension_gap = 0.0;
  double pure_gap = 0.0;
  std::vector<double> remainder_norms;  // one per reduced pure syzygy
  std::size_t new_leading_monomials = 0;
  int bound_after = 0;
  std::optional<int> appended_degree;
  double seconds = 0.0;  // wall time spent on this degree
};

struct HBasisConfig {
  double epsilon = 1e-10;  // remainder zero threshold
  ZeroTest zero_test = ZeroTest::Relative;
  RankPolicy rank_policy;
  Normalization normalize = Normalization::None;
  BoundRule bound_rule = BoundRule::DoubledMaxDegree;
  Selection selection = Selection::LargestRelative;
  // Safety stop; 3 * (initial bound) when unset.
  std::optional<int> max_degree_cap;
  bool diagnostics = true;
  // Re-run every pure syzygy of the final system through the reduction.
  bool verify = true;
  // Called once per visited degree, after its diagnostics are complete.
  std::function<void(const DegreeDiagnostics&)> on_degree;
};

enum class HBasisStatus { Success, ConstantIdeal, DegreeCapReached, NumericalBreakdown };

std::string to_string(HBasisStatus status);
std::string to_string(Normalization mode);


// Minimal leading monomials of <lf(F)> found so far and the lcm degree bound.
class BoundTracker {
 public:
  explicit BoundTracker(int initial_bound, BoundRule rule = BoundRule::DoubledMaxDegree);

  const std::vector<MultiIndex>& minimal_monomials() const { return minimal_; }
  int bound() const { return bound_; }
  const std::vector<std::pair<int, int>>& history() const { return history_; }

  // Inserts monomials not divisible by a stored one (evicting stored
  // multiples) and returns the number inserted. The bound is recomputed by
  // the rule only when the set changed, and never drops below k.
  std::size_t update(const std::vector<MultiIndex>& monomials, int k);

 private:
  BoundRule rule_;
  std::vector<MultiIndex> minimal_;
  int bound_;
  std::vector<std::pair<int, int>> history_;
};

BoundTracker update_bound(BoundTracker tracker, const std::vector<MultiIndex>& monomials, int k);

// Pivot monomials of the row echelon form of C_k^T, i.e. the degree-k leading
// monomials of M_k(F) under graded lex.
std::vector<MultiIndex> leading_monomials_at_degree(const MacaulayMatrix& c, double tol);
// Degree-k leading monomials of range C_k not divisible by a known one. Their
// number is rank C_k minus the count of known multiples; which monomials they
// are is read off an orthonormal basis of the range.
std::vector<MultiIndex> new_leading_monomials(const DecomposedMacaulay& dc,
                                              const std::vector<MultiIndex>& known);

// dim P_k - numerical rank of C_k(H).
std::size_t hilbert_function_numeric(const PolynomialSystem& h, int k,
                                     const RankPolicy& policy = {});

PolynomialSystem normalize_system(const PolynomialSystem& system, Normalization mode);
Polynomial normalize_polynomial(const Polynomial& p, Normalization mode);

struct HBasisResult {
  PolynomialSystem generators;
  HBasisStatus status = HBasisStatus::Success;
  std::vector<DegreeDiagnostics> diagnostics;
  std::vector<std::pair<int, int>> bound_history;
  int final_bound = 0;
  int d_max = 0;
  std::size_t appended = 0;
  std::optional<bool> verified;
  double verification_max_remainder = 0.0;
  double wall_seconds = 0.0;
  std::string message;
};

HBasisResult compute_hbasis(const PolynomialSystem& system, const HBasisConfig& config = {});

// Drops leading homogeneous components that pass the zero test.
Polynomial significant_part(const Polynomial& r, double epsilon, ZeroTest mode, double scale);

struct VerificationResult {
  bool ok = true;
  double max_remainder = 0.0;
  std::size_t syzygies_checked = 0;
};

// Recomputes the syzygy chain of h from its lowest degree up to the given
// degree and reduces every pure syzygy.
VerificationResult verify_hbasis(const PolynomialSystem& h, int up_to_degree,
                                 const HBasisConfig& config);

}  // namespace hbasis

#endif  // HBASIS_DRIVER_HPP
