#include "lconvex/lorder.hpp"

#include <algorithm>

namespace lconvex {

LOrderedSet check_lorder(QuantalePtr q, int size, std::vector<Elem> e) {
  if (size < 1) throw Error(ErrorKind::EmptySubcarrier, "L-ordered set needs a nonempty carrier");
  if (e.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
    throw Error(ErrorKind::CarrierMismatch, "order table is not size x size");
  for (Elem v : e)
    if (v < 0 || v >= q->size())
      throw Error(ErrorKind::IndexOutOfRange, "order table entry out of quantale range", {v});

  LOrderedSet p{std::move(q), size, std::move(e)};
  const Quantale& lat = *p.q;
  for (int x = 0; x < size; ++x)
    if (p.at(x, x) != lat.top())
      throw Error(ErrorKind::E1Violation, "e(" + std::to_string(x) + ", " + std::to_string(x) + ") != top",
                  {x});
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      for (int z = 0; z < size; ++z)
        if (!lat.leq(lat.tensor(p.at(x, y), p.at(y, z)), p.at(x, z)))
          throw Error(ErrorKind::E2Violation,
                      "tensor transitivity fails at (" + std::to_string(x) + ", " + std::to_string(y) +
                          ", " + std::to_string(z) + ")",
                      {x, y, z});
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (x != y && lat.meet(p.at(x, y), p.at(y, x)) == lat.top())
        throw Error(ErrorKind::E3Violation,
                    "antisymmetry fails at (" + std::to_string(x) + ", " + std::to_string(y) + ")",
                    {x, y});
  return p;
}

LSet up_set(const LOrderedSet& p, int x) {
  LSet s{p.q, std::vector<Elem>(static_cast<std::size_t>(p.size))};
  for (int y = 0; y < p.size; ++y) s.degrees[static_cast<std::size_t>(y)] = p.at(x, y);
  return s;
}

LSet down_set(const LOrderedSet& p, int x) {
  LSet s{p.q, std::vector<Elem>(static_cast<std::size_t>(p.size))};
  for (int y = 0; y < p.size; ++y) s.degrees[static_cast<std::size_t>(y)] = p.at(y, x);
  return s;
}

namespace {

// target row the supremum of A must have: row[y] = sub(A, down(y))
std::vector<Elem> sup_row(const LOrderedSet& p, const LSet& a) {
  std::vector<Elem> row(static_cast<std::size_t>(p.size));
  for (int y = 0; y < p.size; ++y) row[static_cast<std::size_t>(y)] = sub(a, down_set(p, y));
  return row;
}

std::vector<Elem> inf_column(const LOrderedSet& p, const LSet& a) {
  std::vector<Elem> col(static_cast<std::size_t>(p.size));
  for (int y = 0; y < p.size; ++y) col[static_cast<std::size_t>(y)] = sub(a, up_set(p, y));
  return col;
}

void require_over(const LOrderedSet& p, const LSet& a) {
  if (!same_quantale(p.q, a.q) || a.carrier_size() != p.size)
    throw Error(ErrorKind::CarrierMismatch, "L-subset is not over this L-ordered set");
}

}  // namespace

std::optional<int> sup(const LOrderedSet& p, const LSet& a) {
  require_over(p, a);
  const std::vector<Elem> row = sup_row(p, a);
  std::optional<int> found;
  for (int x0 = 0; x0 < p.size; ++x0) {
    bool ok = true;
    for (int y = 0; y < p.size && ok; ++y) ok = p.at(x0, y) == row[static_cast<std::size_t>(y)];
    if (ok) {
      // antisymmetry forbids two points sharing a full row
      if (found) throw Error(ErrorKind::Internal, "two suprema for one L-subset", {*found, x0});
      found = x0;
    }
  }
  return found;
}

std::optional<int> inf(const LOrderedSet& p, const LSet& a) {
  require_over(p, a);
  const std::vector<Elem> col = inf_column(p, a);
  std::optional<int> found;
  for (int x0 = 0; x0 < p.size; ++x0) {
    bool ok = true;
    for (int y = 0; y < p.size && ok; ++y) ok = p.at(y, x0) == col[static_cast<std::size_t>(y)];
    if (ok) {
      if (found) throw Error(ErrorKind::Internal, "two infima for one L-subset", {*found, x0});
      found = x0;
    }
  }
  return found;
}

bool for_each_lset(const QuantalePtr& q, int carrier_size, std::size_t cap,
                   const std::function<bool(const LSet&)>& fn) {
  const auto total = checked_pow(static_cast<std::size_t>(q->size()), carrier_size, cap);
  if (!total) return false;
  LSet current = constant(q, carrier_size, q->bottom());
  while (true) {
    if (!fn(current)) return true;
    int pos = carrier_size - 1;
    while (pos >= 0 && current.degrees[static_cast<std::size_t>(pos)] == q->size() - 1) {
      current.degrees[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return true;
    ++current.degrees[static_cast<std::size_t>(pos)];
  }
}

bool is_complete(const LOrderedSet& p, const Limits& limits) {
  bool complete = true;
  bool enumerated = for_each_lset(p.q, p.size, limits.max_complete_candidates, [&](const LSet& a) {
    if (!sup(p, a)) {
      complete = false;
      return false;
    }
    return true;
  });
  if (!enumerated)
    throw Error(ErrorKind::SizeLimitExceeded,
                "completeness check needs |L|^" + std::to_string(p.size) + " candidates");
  return complete;
}

bool is_order_preserving(std::span<const int> f, const LOrderedSet& p, const LOrderedSet& q) {
  if (static_cast<int>(f.size()) != p.size)
    throw Error(ErrorKind::CarrierMismatch, "map does not cover the source carrier");
  for (int x = 0; x < p.size; ++x)
    for (int y = 0; y < p.size; ++y)
      if (!p.q->leq(p.at(x, y), q.at(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])))
        return false;
  return true;
}

namespace {

// per-point invariant: sorted row followed by sorted column of the order table
std::vector<Elem> point_signature(const LOrderedSet& p, int x) {
  std::vector<Elem> sig;
  sig.reserve(static_cast<std::size_t>(2 * p.size));
  for (int y = 0; y < p.size; ++y) sig.push_back(p.at(x, y));
  std::sort(sig.begin(), sig.end());
  std::vector<Elem> col;
  col.reserve(static_cast<std::size_t>(p.size));
  for (int y = 0; y < p.size; ++y) col.push_back(p.at(y, x));
  std::sort(col.begin(), col.end());
  sig.insert(sig.end(), col.begin(), col.end());
  return sig;
}

struct IsoSearch {
  const LOrderedSet& p;
  const LOrderedSet& q;
  std::vector<std::vector<Elem>> sig_p, sig_q;
  std::vector<int> assignment;
  std::vector<bool> used;
  std::size_t nodes = 0;
  std::size_t node_cap;

  bool compatible(int x, int t) const {
    if (sig_p[static_cast<std::size_t>(x)] != sig_q[static_cast<std::size_t>(t)]) return false;
    for (int x2 = 0; x2 < x; ++x2) {
      int t2 = assignment[static_cast<std::size_t>(x2)];
      if (p.at(x, x2) != q.at(t, t2)) return false;
      if (p.at(x2, x) != q.at(t2, t)) return false;
    }
    return p.at(x, x) == q.at(t, t);
  }

  bool extend(int x) {
    if (++nodes > node_cap)
      throw Error(ErrorKind::SizeLimitExceeded, "iso search exceeded node budget");
    if (x == p.size) return true;
    for (int t = 0; t < q.size; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      if (!compatible(x, t)) continue;
      assignment[static_cast<std::size_t>(x)] = t;
      used[static_cast<std::size_t>(t)] = true;
      if (extend(x + 1)) return true;
      used[static_cast<std::size_t>(t)] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_order_iso(const LOrderedSet& p, const LOrderedSet& q,
                                               const Limits& limits) {
  if (!same_quantale(p.q, q.q) || p.size != q.size) return std::nullopt;
  IsoSearch search{p, q, {}, {}, {}, {}, 0, limits.max_iso_nodes};
  for (int x = 0; x < p.size; ++x) search.sig_p.push_back(point_signature(p, x));
  for (int t = 0; t < q.size; ++t) search.sig_q.push_back(point_signature(q, t));
  // global invariant: the two signature multisets must coincide
  auto all_p = search.sig_p;
  auto all_q = search.sig_q;
  std::sort(all_p.begin(), all_p.end());
  std::sort(all_q.begin(), all_q.end());
  if (all_p != all_q) return std::nullopt;
  search.assignment.assign(static_cast<std::size_t>(p.size), -1);
  search.used.assign(static_cast<std::size_t>(q.size), false);
  if (search.extend(0)) return search.assignment;
  return std::nullopt;
}

bool is_sup_preserving(std::span<const int> f, const LOrderedSet& p, const LOrderedSet& q,
                       const Limits& limits) {
  if (static_cast<int>(f.size()) != p.size)
    throw Error(ErrorKind::CarrierMismatch, "map does not cover the source carrier");
  PointMap pm{std::vector<int>(f.begin(), f.end()), q.size};
  bool preserving = true;
  bool enumerated = for_each_lset(p.q, p.size, limits.max_complete_candidates, [&](const LSet& a) {
    auto sp = sup(p, a);
    if (!sp) throw Error(ErrorKind::Internal, "source L-ordered set is not complete");
    auto sq = sup(q, zadeh_forward(pm, a));
    if (!sq) throw Error(ErrorKind::Internal, "target L-ordered set is not complete");
    if (f[static_cast<std::size_t>(*sp)] != *sq) {
      preserving = false;
      return false;
    }
    return true;
  });
  if (!enumerated)
    throw Error(ErrorKind::SizeLimitExceeded,
                "sup-preservation check needs |L|^" + std::to_string(p.size) + " candidates");
  return preserving;
}

}  // namespace lconvex
