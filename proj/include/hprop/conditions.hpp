#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hprop/graphon.hpp"

namespace hprop {

enum class MembershipStatus { Outside, Boundary, RelativeInterior };
enum class Verdict { HProperty, NoHProperty, Borderline };

std::string_view to_string(MembershipStatus status) noexcept;
std::string_view to_string(Verdict verdict) noexcept;

/// Where x sits relative to the edge polytope conv{z_j}.
///
/// Unless Outside, `certificate` holds alpha >= 0 with sum 1 and Z alpha = x
/// exactly; for RelativeInterior every alpha_j > 0. `margin` is the optimal
/// min_j alpha_j (zero on the boundary).
struct MembershipResult {
  MembershipStatus status = MembershipStatus::Outside;
  VectorQ certificate;
  Rational margin{0};
  std::string infeasibility_witness;
};

/// Exact LP: maximize t s.t. Z alpha = x, sum alpha = 1, alpha_j >= t >= 0.
/// Throws Error(DimensionMismatch) when x does not have one entry per row of Z.
MembershipResult polytope_membership(const IncidenceMatrix& z, const VectorQ& x);

/// Exact check that alpha is a convex combination reproducing x.
bool certificate_is_sound(const IncidenceMatrix& z, const VectorQ& x, const VectorQ& alpha);

/// Condition 1: a self-loop or an odd cycle. Throws DisconnectedSkeleton.
bool has_odd_cycle(const SkeletonGraph& s);

/// s_k = x_k - x_{k-1} + x_{k-2} - ... +/- x_1 for k = 1..q, with x listed in
/// path order ending at the self-loop node.
VectorQ line_inequalities(const VectorQ& x);

/// Affine dimension of the edge polytope; -1 when the skeleton has no edges.
int polytope_rank(const IncidenceMatrix& z);

struct ConditionReport {
  bool condition1 = false;
  bool condition2a = false;
  bool condition2b = false;
  int polytope_rank = 0;
  Verdict verdict = Verdict::NoHProperty;
  MembershipResult membership;

  ConcentrationVector concentration;
  SkeletonGraph skeleton;
  IncidenceMatrix incidence;
  /// Populated for line graphons: path order and the alternating sums along it.
  std::optional<std::vector<int>> line_order;
  std::optional<VectorQ> line_sums;
};

Verdict verdict_for(bool condition1, bool condition2a, bool condition2b) noexcept;

/// Evaluates all conditions on the ideal concentration vector. For line
/// graphons the LP verdict is cross-checked against the alternating sums and
/// std::logic_error is thrown if they disagree.
ConditionReport classify(const StepGraphon& g);

}  // namespace hprop
