#include "lconvex/quantale.hpp"

#include <algorithm>
#include <cstdlib>

namespace lconvex {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::UnitNotTop: return "UnitNotTop";
    case ErrorKind::NotJoinDistributive: return "NotJoinDistributive";
    case ErrorKind::E1Violation: return "E1Violation";
    case ErrorKind::E2Violation: return "E2Violation";
    case ErrorKind::E3Violation: return "E3Violation";
    case ErrorKind::MissingBottomTop: return "MissingBottomTop";
    case ErrorKind::NotMeetClosed: return "NotMeetClosed";
    case ErrorKind::NotStratified: return "NotStratified";
    case ErrorKind::NotDirectedJoinClosed: return "NotDirectedJoinClosed";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySubcarrier: return "EmptySubcarrier";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotCP: return "NotCP";
    case ErrorKind::NotSober: return "NotSober";
    case ErrorKind::NotS0: return "NotS0";
    case ErrorKind::NotStrictEmbedding: return "NotStrictEmbedding";
    case ErrorKind::NotARetraction: return "NotARetraction";
    case ErrorKind::EmptyEqualizer: return "EmptyEqualizer";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Limits default_limits() {
  Limits limits;
  if (const char* cap = std::getenv("LCONVEX_MAX_FAMILY")) {
    char* end = nullptr;
    long value = std::strtol(cap, &end, 10);
    if (end != cap && value > 1) limits.max_family = static_cast<std::size_t>(value);
  }
  return limits;
}

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::string pair_str(Elem a, Elem b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::vector<std::string> default_chain_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      labels.push_back("0");
    else if (i == n - 1)
      labels.push_back("1");
    else
      labels.push_back(std::to_string(i) + "/" + std::to_string(n - 1));
  }
  return labels;
}

}  // namespace

void Quantale::check_element(Elem a) const {
  if (a < 0 || a >= size_)
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(a) + " outside carrier of size " + std::to_string(size_),
                {a});
}

void Quantale::derive_lattice() {
  const int n = size_;
  // partial order axioms
  for (Elem a = 0; a < n; ++a)
    if (!leq(a, a)) throw Error(ErrorKind::NotALattice, "order not reflexive at " + std::to_string(a), {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && leq(a, b) && leq(b, a))
        throw Error(ErrorKind::NotALattice, "order not antisymmetric at " + pair_str(a, b), {a, b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c))
          throw Error(ErrorKind::NotALattice, "order not transitive at " + triple(a, b, c), {a, b, c});

  join_.assign(static_cast<std::size_t>(n) * n, 0);
  meet_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem lub = -1, glb = -1;
      for (Elem c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && (lub < 0 || leq(c, lub))) lub = c;
        if (leq(c, a) && leq(c, b) && (glb < 0 || leq(glb, c))) glb = c;
      }
      // the candidate found by "least so far" must actually bound every other
      if (lub < 0) throw Error(ErrorKind::NotALattice, "no upper bound for " + pair_str(a, b), {a, b});
      if (glb < 0) throw Error(ErrorKind::NotALattice, "no lower bound for " + pair_str(a, b), {a, b});
      for (Elem c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && !leq(lub, c))
          throw Error(ErrorKind::NotALattice, "no least upper bound for " + pair_str(a, b), {a, b});
        if (leq(c, a) && leq(c, b) && !leq(c, glb))
          throw Error(ErrorKind::NotALattice, "no greatest lower bound for " + pair_str(a, b), {a, b});
      }
      join_[idx(a, b)] = lub;
      meet_[idx(a, b)] = glb;
    }
  }

  bottom_ = 0;
  top_ = 0;
  for (Elem a = 0; a < n; ++a) {
    if (leq(a, bottom_)) bottom_ = a;
    if (leq(top_, a)) top_ = a;
  }
  for (Elem a = 0; a < n; ++a) {
    if (!leq(bottom_, a)) throw Error(ErrorKind::NotALattice, "no bottom element", {a});
    if (!leq(a, top_)) throw Error(ErrorKind::NotALattice, "no top element", {a});
  }
}

void Quantale::check_monoid() const {
  const int n = size_;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (tensor(a, b) != tensor(b, a))
        throw Error(ErrorKind::NotCommutative, "tensor" + pair_str(a, b) + " != tensor" + pair_str(b, a), {a, b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c)))
          throw Error(ErrorKind::NotAssociative, "witness " + triple(a, b, c), {a, b, c});
  for (Elem a = 0; a < n; ++a)
    if (tensor(top_, a) != a)
      throw Error(ErrorKind::UnitNotTop, "tensor(top, " + std::to_string(a) + ") = " +
                                             std::to_string(tensor(top_, a)),
                  {top_, a});
  // distributivity over binary joins and over bottom; on a finite lattice
  // every join is a finite join, so this implies distributivity over all joins
  for (Elem a = 0; a < n; ++a) {
    if (tensor(a, bottom_) != bottom_)
      throw Error(ErrorKind::NotJoinDistributive,
                  "tensor(" + std::to_string(a) + ", bottom) != bottom", {a, bottom_});
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (tensor(a, join(b, c)) != join(tensor(a, b), tensor(a, c)))
          throw Error(ErrorKind::NotJoinDistributive, "witness " + triple(a, b, c), {a, b, c});
  }
}

void Quantale::derive_residuum() {
  const int n = size_;
  residuum_.assign(static_cast<std::size_t>(n) * n, bottom_);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem r = bottom_;
      for (Elem c = 0; c < n; ++c)
        if (leq(tensor(c, a), b)) r = join(r, c);
      residuum_[idx(a, b)] = r;
    }
  }
  // adjunction must now hold by construction; re-check it exhaustively
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (leq(tensor(a, b), c) != leq(a, residuum(b, c)))
          throw Error(ErrorKind::Internal, "adjunction failed at " + triple(a, b, c), {a, b, c});
}

std::shared_ptr<const Quantale> Quantale::chain(int n, ChainFlavor flavor) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "chain needs at least 2 elements", {n});
  auto q = std::shared_ptr<Quantale>(new Quantale());
  q->size_ = n;
  q->leq_.assign(static_cast<std::size_t>(n) * n, 0);
  q->tensor_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      q->leq_[q->idx(a, b)] = a <= b ? 1 : 0;
      q->tensor_[q->idx(a, b)] =
          flavor == ChainFlavor::Godel ? std::min(a, b) : std::max(0, a + b - (n - 1));
    }
  }
  q->labels_ = default_chain_labels(n);
  q->derive_lattice();
  q->check_monoid();
  q->derive_residuum();
  return q;
}

std::shared_ptr<const Quantale> Quantale::from_tables(
    const std::vector<std::vector<int>>& leq,
    const std::vector<std::vector<Elem>>& tensor,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(leq.size());
  if (n < 1) throw Error(ErrorKind::NotALattice, "empty carrier");
  if (tensor.size() != leq.size())
    throw Error(ErrorKind::CarrierMismatch, "leq and tensor tables disagree on size");
  auto q = std::shared_ptr<Quantale>(new Quantale());
  q->size_ = n;
  q->leq_.assign(static_cast<std::size_t>(n) * n, 0);
  q->tensor_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(leq[a].size()) != n || static_cast<int>(tensor[a].size()) != n)
      throw Error(ErrorKind::CarrierMismatch, "tables must be square, row " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      q->leq_[q->idx(a, b)] = leq[a][b] ? 1 : 0;
      Elem t = tensor[a][b];
      if (t < 0 || t >= n)
        throw Error(ErrorKind::IndexOutOfRange, "tensor entry out of range at " + pair_str(a, b), {a, b});
      q->tensor_[q->idx(a, b)] = t;
    }
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::CarrierMismatch, "label count does not match carrier size");
  q->labels_ = std::move(labels);
  q->derive_lattice();
  q->check_monoid();
  q->derive_residuum();
  return q;
}

Elem Quantale::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Quantale::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

bool same_quantale(const QuantalePtr& a, const QuantalePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace lconvex
