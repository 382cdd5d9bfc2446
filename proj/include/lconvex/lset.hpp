#pragma once

#include <compare>
#include <span>
#include <vector>

#include "lconvex/quantale.hpp"

namespace lconvex {

/// An L-subset of a finite carrier: one truth degree per point. Value object;
/// two LSets over the same quantale and carrier are equal iff pointwise equal.
struct LSet {
  QuantalePtr q;
  std::vector<Elem> degrees;

  int carrier_size() const { return static_cast<int>(degrees.size()); }
  Elem operator()(int x) const { return degrees[static_cast<std::size_t>(x)]; }

  friend bool operator==(const LSet& a, const LSet& b) {
    return same_quantale(a.q, b.q) && a.degrees == b.degrees;
  }
};

/// Canonical order on same-space LSets: lexicographic on degree sequences.
inline bool degree_less(const LSet& a, const LSet& b) { return a.degrees < b.degrees; }

/// A point function between finite carriers (the carrier-level half of a
/// SpaceMap); images[x] is the target index of source point x.
struct PointMap {
  std::vector<int> images;
  int target_size = 0;

  int source_size() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[static_cast<std::size_t>(x)]; }
};

void require_same_carrier(const LSet& a, const LSet& b);

/// Inclusion degree sub(A,B) = meet over x of A(x) -> B(x).
Elem sub(const LSet& a, const LSet& b);

LSet constant(QuantalePtr q, int carrier_size, Elem a);
LSet characteristic(QuantalePtr q, int carrier_size, int x);
LSet scale(Elem a, const LSet& s);                       // (a (x) A)(x)
LSet restrict_to(const LSet& s, std::span<const int> ys);  // A|_Y, Y nonempty

LSet pointwise_meet(const LSet& a, const LSet& b);
LSet pointwise_join(const LSet& a, const LSet& b);
/// p -> A, pointwise residuation by a fixed truth value.
LSet implication_into(Elem p, const LSet& s);
/// A <= B pointwise.
bool pointwise_leq(const LSet& a, const LSet& b);

/// Zadeh forward extension: degree at y is the join over the fiber f^-1(y)
/// (empty fiber gives bottom, the empty join).
LSet zadeh_forward(const PointMap& f, const LSet& a);
/// Zadeh backward extension: B composed with f.
LSet zadeh_backward(const PointMap& f, const LSet& b);

}  // namespace lconvex
