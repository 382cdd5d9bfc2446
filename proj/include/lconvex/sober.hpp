#pragma once

#include "lconvex/convex.hpp"

namespace lconvex {

/// All algebraic irreducible convex sets of X, in canonical (degree) order:
/// the members whose degrees join to top. The directed-sup condition is
/// automatic on a finite family (a directed subfamily contains its greatest
/// element); irr_audit re-derives it exhaustively for small families.
std::vector<LSet> irr(const LConvexSpace& x);

/// Exhaustive audit of the directed-sup condition for every candidate
/// irreducible against every directed subfamily of the convex family.
/// Throws SizeLimitExceeded when the family exceeds max_family members,
/// Internal if the shortcut argument were ever wrong.
void irr_audit(const LConvexSpace& x, int max_family = 10);

enum class SoberKind { Sober, NonPointIrr, AmbiguousPoint };

struct SoberVerdict {
  SoberKind kind = SoberKind::Sober;
  bool s0 = true;
  std::optional<LSet> witness;      // offending irreducible, if any
  std::vector<int> witness_points;  // the points it is the hull of
  bool sober() const { return kind == SoberKind::Sober; }
};

/// The sobrification of X: carrier irr(X), convex sets phi(C) with
/// phi(C)(F) = sub(F, C), and eta sending x to the hull of its
/// characteristic function.
struct Sobrification {
  SpacePtr base;
  std::vector<LSet> irr_points;
  SpacePtr space;
  SpaceMap eta;

  LSet phi(const LSet& c) const;  // L-subset of irr_points
};

Sobrification sobrify(const SpacePtr& x);

/// Verdict by the hull criterion alone: every irreducible is the hull of
/// exactly one point.
SoberVerdict hull_sober_verdict(const LConvexSpace& x);
/// Verdict by the eta criterion alone: eta is a homeomorphism onto S(X).
bool eta_homeo_sober(const SpacePtr& x);

/// Runs both deciders and requires them to agree (Internal otherwise).
SoberVerdict is_sober(const SpacePtr& x);

/// S(f): F -> hull_Y(f->(F)), as a map between the given sobrifications.
/// Requires f convexity-preserving; the result is checked to land in irr(Y)
/// and to be convexity-preserving itself.
SpaceMap lift_map(const SpaceMap& f, const Sobrification& sx, const Sobrification& sy);

/// Brute-force witness of the sobrification's universal property: among all
/// point maps S(X) -> Z (Z sober, f: X -> Z convexity-preserving), exactly
/// one is convexity-preserving with g o eta = f; returns it.
SpaceMap check_universal_property(const SpacePtr& x, const SpacePtr& z, const SpaceMap& f,
                                  const Limits& limits = default_limits());

}  // namespace lconvex
