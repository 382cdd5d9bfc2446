#include "lconvex/lset.hpp"

namespace lconvex {

void require_same_carrier(const LSet& a, const LSet& b) {
  if (!same_quantale(a.q, b.q))
    throw Error(ErrorKind::CarrierMismatch, "L-subsets over different quantales");
  if (a.degrees.size() != b.degrees.size())
    throw Error(ErrorKind::CarrierMismatch,
                "L-subsets over carriers of size " + std::to_string(a.carrier_size()) + " and " +
                    std::to_string(b.carrier_size()));
}

Elem sub(const LSet& a, const LSet& b) {
  require_same_carrier(a, b);
  const Quantale& q = *a.q;
  Elem acc = q.top();
  for (int x = 0; x < a.carrier_size(); ++x) acc = q.meet(acc, q.residuum(a(x), b(x)));
  return acc;
}

LSet constant(QuantalePtr q, int carrier_size, Elem a) {
  if (a < 0 || a >= q->size())
    throw Error(ErrorKind::IndexOutOfRange, "constant degree out of range", {a});
  if (carrier_size < 1) throw Error(ErrorKind::EmptySubcarrier, "carrier must be nonempty");
  return LSet{std::move(q), std::vector<Elem>(static_cast<std::size_t>(carrier_size), a)};
}

LSet characteristic(QuantalePtr q, int carrier_size, int x) {
  if (x < 0 || x >= carrier_size)
    throw Error(ErrorKind::IndexOutOfRange, "point out of carrier range", {x});
  LSet s = constant(q, carrier_size, q->bottom());
  s.degrees[static_cast<std::size_t>(x)] = s.q->top();
  return s;
}

LSet scale(Elem a, const LSet& s) {
  s.q->tensor(a, s.q->bottom());  // range check via table access
  LSet out = s;
  for (Elem& d : out.degrees) d = s.q->tensor(a, d);
  return out;
}

LSet restrict_to(const LSet& s, std::span<const int> ys) {
  if (ys.empty()) throw Error(ErrorKind::EmptySubcarrier, "restriction to an empty subcarrier");
  LSet out{s.q, {}};
  out.degrees.reserve(ys.size());
  for (int y : ys) {
    if (y < 0 || y >= s.carrier_size())
      throw Error(ErrorKind::IndexOutOfRange, "subcarrier point out of range", {y});
    out.degrees.push_back(s(y));
  }
  return out;
}

LSet pointwise_meet(const LSet& a, const LSet& b) {
  require_same_carrier(a, b);
  LSet out = a;
  for (int x = 0; x < a.carrier_size(); ++x)
    out.degrees[static_cast<std::size_t>(x)] = a.q->meet(a(x), b(x));
  return out;
}

LSet pointwise_join(const LSet& a, const LSet& b) {
  require_same_carrier(a, b);
  LSet out = a;
  for (int x = 0; x < a.carrier_size(); ++x)
    out.degrees[static_cast<std::size_t>(x)] = a.q->join(a(x), b(x));
  return out;
}

LSet implication_into(Elem p, const LSet& s) {
  LSet out = s;
  for (Elem& d : out.degrees) d = s.q->residuum(p, d);
  return out;
}

bool pointwise_leq(const LSet& a, const LSet& b) {
  require_same_carrier(a, b);
  for (int x = 0; x < a.carrier_size(); ++x)
    if (!a.q->leq(a(x), b(x))) return false;
  return true;
}

LSet zadeh_forward(const PointMap& f, const LSet& a) {
  if (f.source_size() != a.carrier_size())
    throw Error(ErrorKind::CarrierMismatch, "map source does not match L-subset carrier");
  LSet out = constant(a.q, f.target_size, a.q->bottom());
  for (int x = 0; x < f.source_size(); ++x) {
    int y = f(x);
    if (y < 0 || y >= f.target_size)
      throw Error(ErrorKind::IndexOutOfRange, "map image out of target range", {x, y});
    out.degrees[static_cast<std::size_t>(y)] = a.q->join(out(y), a(x));
  }
  return out;
}

LSet zadeh_backward(const PointMap& f, const LSet& b) {
  if (f.target_size != b.carrier_size())
    throw Error(ErrorKind::CarrierMismatch, "map target does not match L-subset carrier");
  LSet out{b.q, {}};
  out.degrees.reserve(f.images.size());
  for (int x = 0; x < f.source_size(); ++x) out.degrees.push_back(b(f(x)));
  if (out.degrees.empty())
    throw Error(ErrorKind::EmptySubcarrier, "backward image over an empty carrier");
  return out;
}

}  // namespace lconvex
