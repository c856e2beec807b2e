#include "hprop/conditions.hpp"

#include <queue>
#include <stdexcept>

#include "hprop/error.hpp"
#include "hprop/linalg.hpp"
#include "hprop/simplex.hpp"

namespace hprop {

std::string_view to_string(MembershipStatus status) noexcept {
  switch (status) {
    case MembershipStatus::Outside: return "outside";
    case MembershipStatus::Boundary: return "boundary";
    case MembershipStatus::RelativeInterior: return "relative_interior";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::HProperty: return "H_PROPERTY";
    case Verdict::NoHProperty: return "NO_H_PROPERTY";
    case Verdict::Borderline: return "BORDERLINE";
  }
  return "unknown";
}

MembershipResult polytope_membership(const IncidenceMatrix& inc, const VectorQ& x) {
  const Eigen::Index q = inc.z.rows();
  const Eigen::Index m = inc.z.cols();
  if (x.size() != q) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                  " entries, incidence matrix has " + std::to_string(q) + " rows");
  }

  MembershipResult result;
  if (m == 0) {
    result.infeasibility_witness = "the skeleton has no edges, so the edge polytope is empty";
    return result;
  }

  // Substituting alpha = beta + t 1 gives a standard-form LP in (beta, t) >= 0:
  //   Z beta + (Z 1) t = x,   1^T beta + m t = 1,   minimize -t.
  MatrixQ a = MatrixQ::Zero(q + 1, m + 1);
  a.topLeftCorner(q, m) = inc.z;
  a.topRightCorner(q, 1) = inc.z.rowwise().sum();
  a.bottomLeftCorner(1, m).setOnes();
  a(q, m) = Rational(m);
  VectorQ b(q + 1);
  b.head(q) = x;
  b(q) = 1;
  VectorQ c = VectorQ::Zero(m + 1);
  c(m) = -1;

  const auto lp = solve_standard_lp(a, b, c);
  if (lp.status == LpStatus::Infeasible) {
    result.infeasibility_witness = "no convex combination of the " + std::to_string(m) +
                                   " incidence columns equals x (phase-one residual " +
                                   hprop::to_string(lp.infeasibility) + ")";
    return result;
  }
  if (lp.status != LpStatus::Optimal) {
    throw std::logic_error("membership LP is bounded by construction but reported unbounded");
  }

  const Rational t = lp.x(m);
  result.margin = t;
  result.certificate = lp.x.head(m);
  for (Eigen::Index j = 0; j < m; ++j) result.certificate(j) += t;
  result.status = t > 0 ? MembershipStatus::RelativeInterior : MembershipStatus::Boundary;
  if (!certificate_is_sound(inc, x, result.certificate)) {
    throw std::logic_error("membership LP returned an unsound certificate");
  }
  return result;
}

bool certificate_is_sound(const IncidenceMatrix& inc, const VectorQ& x, const VectorQ& alpha) {
  if (alpha.size() != inc.z.cols() || x.size() != inc.z.rows()) return false;
  for (Eigen::Index j = 0; j < alpha.size(); ++j) {
    if (alpha(j) < 0) return false;
  }
  if (alpha.sum() != 1) return false;
  return VectorQ(inc.z * alpha) == x;
}

bool has_odd_cycle(const SkeletonGraph& s) {
  require_connected(s);
  if (!s.self_loops.empty()) return true;
  const auto adj = s.adjacency();
  std::vector<int> side(static_cast<std::size_t>(s.node_count), -1);
  std::queue<int> frontier;
  for (int start = 0; start < s.node_count; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : adj[u]) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

VectorQ line_inequalities(const VectorQ& x) {
  VectorQ s(x.size());
  Rational running{0};
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    running = x(k) - running;
    s(k) = running;
  }
  return s;
}

int polytope_rank(const IncidenceMatrix& z) { return affine_dimension(z.z); }

Verdict verdict_for(bool condition1, bool condition2a, bool condition2b) noexcept {
  if (!condition1 || !condition2a) return Verdict::NoHProperty;
  return condition2b ? Verdict::HProperty : Verdict::Borderline;
}

ConditionReport classify(const StepGraphon& g) {
  ConditionReport report;
  report.concentration = concentration_vector(g);
  report.skeleton = skeleton_graph(g);
  require_connected(report.skeleton);
  report.incidence = incidence_matrix(report.skeleton);

  report.condition1 = has_odd_cycle(report.skeleton);
  report.membership = polytope_membership(report.incidence, report.concentration);
  report.condition2a = report.membership.status != MembershipStatus::Outside;
  report.condition2b = report.membership.status == MembershipStatus::RelativeInterior;
  report.polytope_rank = polytope_rank(report.incidence);
  report.verdict = verdict_for(report.condition1, report.condition2a, report.condition2b);

  if (auto order = line_order(report.skeleton)) {
    VectorQ along(static_cast<Eigen::Index>(order->size()));
    for (std::size_t k = 0; k < order->size(); ++k) along(static_cast<Eigen::Index>(k)) = report.concentration((*order)[k]);
    VectorQ sums = line_inequalities(along);
    bool all_positive = true;
    for (Eigen::Index k = 0; k < sums.size(); ++k) all_positive = all_positive && sums(k) > 0;
    if (all_positive != report.condition2b) {
      throw std::logic_error("line-graphon alternating sums disagree with the exact LP verdict");
    }
    report.line_order = std::move(order);
    report.line_sums = std::move(sums);
  }
  return report;
}

}  // namespace hprop
