#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lconvex/errors.hpp"

namespace lconvex {

/// Truth-value element: a dense index into a quantale's carrier.
using Elem = int;

enum class ChainFlavor { Godel, Lukasiewicz };

/// A finite commutative integral quantale: a complete lattice (finite, hence
/// complete) with a commutative monoid tensor whose unit is the top element
/// and which distributes over joins. The residuum is always derived from the
/// tensor via the adjoint property and re-validated, never user-supplied.
///
/// All lattice data live in precomputed size*size tables, so every law is an
/// O(n^3) table scan. Instances are immutable after construction and safe to
/// share across threads.
class Quantale {
 public:
  /// The n-element chain 0 = e0 < ... < e(n-1) = 1 with tensor = min (Godel)
  /// or truncated addition e_i (x) e_j = e_max(0, i+j-(n-1)) (Lukasiewicz).
  /// Rejects n < 2. The two flavors coincide at n = 2 (the Boolean quantale).
  static std::shared_ptr<const Quantale> chain(int n, ChainFlavor flavor);

  /// Builds from an explicit order table (leq[a][b] != 0 means a <= b) and
  /// tensor table. Joins/meets are computed, the residuum derived, and every
  /// invariant checked exhaustively; violations throw Error with the
  /// witnessing pair/triple.
  static std::shared_ptr<const Quantale> from_tables(
      const std::vector<std::vector<int>>& leq,
      const std::vector<std::vector<Elem>>& tensor,
      std::vector<std::string> labels = {});

  int size() const { return size_; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem tensor(Elem a, Elem b) const { return tensor_[idx(a, b)]; }
  /// a -> b: the largest c with c (x) a <= b.
  Elem residuum(Elem a, Elem b) const { return residuum_[idx(a, b)]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  Elem join_all(std::span<const Elem> xs) const;  // empty join is bottom
  Elem meet_all(std::span<const Elem> xs) const;  // empty meet is top

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }

  const std::vector<int>& leq_table() const { return leq_; }
  const std::vector<Elem>& tensor_table() const { return tensor_; }
  const std::vector<Elem>& residuum_table() const { return residuum_; }

  /// Structural equality (same size, order and tensor tables).
  friend bool operator==(const Quantale& a, const Quantale& b) {
    return a.size_ == b.size_ && a.leq_ == b.leq_ && a.tensor_ == b.tensor_;
  }

 private:
  Quantale() = default;
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(b);
  }
  void check_element(Elem a) const;
  void derive_lattice();    // joins, meets, bottom, top; throws NotALattice
  void check_monoid() const;
  void derive_residuum();   // also re-checks the adjunction exhaustively

  int size_ = 0;
  std::vector<int> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> tensor_;
  std::vector<Elem> residuum_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::string> labels_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// Pointer-first structural identity, used by carrier-compatibility checks.
bool same_quantale(const QuantalePtr& a, const QuantalePtr& b);

}  // namespace lconvex
