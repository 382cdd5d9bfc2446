#pragma once

#include <memory>
#include <optional>

#include "lconvex/lorder.hpp"

namespace lconvex {

class LConvexSpace;
using SpacePtr = std::shared_ptr<const LConvexSpace>;

/// A finite stratified L-convex space: a carrier together with the canonical
/// (sorted, duplicate-free) family of its convex L-subsets. The family always
/// contains the constant bottom and top sets, is closed under pointwise binary
/// meets and under p -> (.) for every truth value p. Directed-join closure
/// holds automatically on a finite family (every directed subfamily contains
/// its greatest element); validate_structure can audit that exhaustively.
///
/// Immutable after construction; share via SpacePtr.
class LConvexSpace {
 public:
  const QuantalePtr& quantale() const { return q_; }
  int carrier_size() const { return carrier_size_; }
  const std::vector<LSet>& convexes() const { return convexes_; }
  int family_size() const { return static_cast<int>(convexes_.size()); }
  const LSet& convex(int i) const { return convexes_[static_cast<std::size_t>(i)]; }

  bool contains(const LSet& s) const;
  std::optional<int> index_of(const LSet& s) const;

  /// Least convex set above A: the pointwise meet of all members above A.
  LSet hull(const LSet& a) const;
  LSet point_hull(int x) const;  // hull of the characteristic function of x

  LSet bottom_set() const { return constant(q_, carrier_size_, q_->bottom()); }
  LSet top_set() const { return constant(q_, carrier_size_, q_->top()); }

  friend bool operator==(const LConvexSpace& a, const LConvexSpace& b) {
    return a.carrier_size_ == b.carrier_size_ && same_quantale(a.q_, b.q_) &&
           a.convexes_ == b.convexes_;
  }

 private:
  friend SpacePtr make_space_unchecked(QuantalePtr q, int carrier_size, std::vector<LSet> family);
  LConvexSpace() = default;

  QuantalePtr q_;
  int carrier_size_ = 0;
  std::vector<LSet> convexes_;
};

struct StructureOptions {
  bool audit_directed_joins = false;  // exhaustive C2 audit, families up to the cap below
  int directed_join_audit_max = 12;
};

/// Checks the family: constants present, binary-meet closed, stratification
/// closed; optionally audits directed-join closure over every subfamily.
/// Returns the canonical space or throws the named violation with witness.
SpacePtr validate_structure(QuantalePtr q, int carrier_size, std::vector<LSet> family,
                            const StructureOptions& options = {});

/// Least family containing the generators plus both constants, closed under
/// binary meets and (if stratified) p -> (.), computed to a fixpoint.
/// Throws BudgetExceeded when the family would exceed limits.max_family.
SpacePtr generate_structure(QuantalePtr q, int carrier_size, const std::vector<LSet>& generators,
                            bool stratified = true, const Limits& limits = default_limits());

/// Distinct points have distinct point hulls.
bool is_S0(const LConvexSpace& x);
/// A pair of distinct points sharing a hull, if any.
std::optional<std::pair<int, int>> s0_witness(const LConvexSpace& x);

/// The subspace on the point subset ys (indices into X's carrier): every
/// member restricted to ys, deduplicated.
SpacePtr subspace(const SpacePtr& x, std::span<const int> ys);

struct MapFlags {
  bool cp = false;                  // backward images of convex sets are convex
  bool convex_to_convex = false;    // forward images of convex sets are convex
  bool homeomorphism = false;       // bijective and both of the above
  bool subspace_embedding = false;  // corestriction to the image is a homeomorphism
};

/// A point function between two spaces, with lazily cached classification.
struct SpaceMap {
  SpacePtr source;
  SpacePtr target;
  std::vector<int> points;
  mutable std::optional<MapFlags> flags;

  int operator()(int x) const { return points[static_cast<std::size_t>(x)]; }
  PointMap point_map() const { return {points, target->carrier_size()}; }
};

/// Validates ranges and total-ness; flags start uncached.
SpaceMap make_map(SpacePtr source, SpacePtr target, std::vector<int> points);
SpaceMap identity_map(const SpacePtr& x);
/// g after f; requires f.target == g.source as spaces.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

LSet forward_image(const SpaceMap& f, const LSet& a);
LSet backward_image(const SpaceMap& f, const LSet& b);

/// Computes (and caches) all four flags.
const MapFlags& classify_map(const SpaceMap& f);

/// Sorted distinct image points of f.
std::vector<int> image_points(const SpaceMap& f);

/// (C(X), sub) as an L-ordered set; point i is X.convex(i).
LOrderedSet convex_order(const LConvexSpace& x);

bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Enumerates every total point function {0..source_size-1} -> {0..target_size-1}
/// in lexicographic order of the image vector. Returns false without calling
/// fn when target_size^source_size exceeds cap; fn returns false to stop early.
bool for_each_point_map(int source_size, int target_size, std::size_t cap,
                        const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace lconvex
