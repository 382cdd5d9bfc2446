#pragma once

#include <functional>
#include <optional>
#include <span>

#include "lconvex/lset.hpp"

namespace lconvex {

/// A finite L-ordered set: carrier {0..size-1} with an L-valued order table
/// e satisfying reflexivity (E1), tensor-transitivity (E2) and antisymmetry (E3).
struct LOrderedSet {
  QuantalePtr q;
  int size = 0;
  std::vector<Elem> e;  // flattened size*size, row x column y holds e(x,y)

  Elem at(int x, int y) const {
    return e[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
             static_cast<std::size_t>(y)];
  }
};

/// Validates E1..E3 exhaustively; violations name the witnessing pair/triple.
LOrderedSet check_lorder(QuantalePtr q, int size, std::vector<Elem> e);

/// The up-set of x as an L-subset over P: degree e(x, y) at y.
LSet up_set(const LOrderedSet& p, int x);
/// The down-set of x: degree e(y, x) at y.
LSet down_set(const LOrderedSet& p, int x);

/// Supremum of an L-subset, by exhaustively testing the characterization
/// e(x0, y) = sub(A, down(y)) against every candidate point; absent when no
/// point satisfies it. Antisymmetry makes a satisfying point unique.
std::optional<int> sup(const LOrderedSet& p, const LSet& a);
/// Dual characterization e(y, x0) = sub(A, up(y)).
std::optional<int> inf(const LOrderedSet& p, const LSet& a);

/// True iff every L-subset of P has a supremum; enumerates all |L|^|P|
/// candidates, capped by limits.max_complete_candidates.
bool is_complete(const LOrderedSet& p, const Limits& limits = default_limits());

/// e_P(x,y) <= e_Q(f(x), f(y)) for all x, y.
bool is_order_preserving(std::span<const int> f, const LOrderedSet& p, const LOrderedSet& q);

/// Searches for a bijection with e_P(x,y) = e_Q(f(x),f(y)) everywhere.
/// Backtracking over candidate targets pruned by per-point multiset
/// invariants of the order table; returns the lexicographically first
/// witness, or absent. Node budget guards against pathological instances.
std::optional<std::vector<int>> find_order_iso(const LOrderedSet& p, const LOrderedSet& q,
                                               const Limits& limits = default_limits());

/// f(sup A) = sup f->(A) for every A in L^P. Requires complete P and Q;
/// enumeration capped like is_complete.
bool is_sup_preserving(std::span<const int> f, const LOrderedSet& p, const LOrderedSet& q,
                       const Limits& limits = default_limits());

/// Odometer over all degree vectors of a given length; calls fn for each.
/// Returns false (stopping early) if the candidate count exceeds the cap.
bool for_each_lset(const QuantalePtr& q, int carrier_size, std::size_t cap,
                   const std::function<bool(const LSet&)>& fn);

}  // namespace lconvex
