#include "lconvex/convex.hpp"

#include <algorithm>
#include <set>

namespace lconvex {

namespace {

void require_over_space(const LConvexSpace& x, const LSet& a) {
  if (!same_quantale(x.quantale(), a.q) || a.carrier_size() != x.carrier_size())
    throw Error(ErrorKind::CarrierMismatch, "L-subset is not over this space's carrier");
}

std::string set_str(const LSet& s) {
  std::string out = "(";
  for (int x = 0; x < s.carrier_size(); ++x) {
    if (x) out += ",";
    out += std::to_string(s(x));
  }
  return out + ")";
}

}  // namespace

SpacePtr make_space_unchecked(QuantalePtr q, int carrier_size, std::vector<LSet> family) {
  auto space = std::shared_ptr<LConvexSpace>(new LConvexSpace());
  space->q_ = std::move(q);
  space->carrier_size_ = carrier_size;
  std::sort(family.begin(), family.end(), degree_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  space->convexes_ = std::move(family);
  return space;
}

bool LConvexSpace::contains(const LSet& s) const { return index_of(s).has_value(); }

std::optional<int> LConvexSpace::index_of(const LSet& s) const {
  auto it = std::lower_bound(convexes_.begin(), convexes_.end(), s, degree_less);
  if (it != convexes_.end() && *it == s)
    return static_cast<int>(std::distance(convexes_.begin(), it));
  return std::nullopt;
}

LSet LConvexSpace::hull(const LSet& a) const {
  require_over_space(*this, a);
  LSet acc = top_set();
  for (const LSet& c : convexes_)
    if (pointwise_leq(a, c)) acc = pointwise_meet(acc, c);
  if (!contains(acc))
    throw Error(ErrorKind::Internal, "hull fell outside the family; space not meet-closed?");
  return acc;
}

LSet LConvexSpace::point_hull(int x) const { return hull(characteristic(q_, carrier_size_, x)); }

SpacePtr validate_structure(QuantalePtr q, int carrier_size, std::vector<LSet> family,
                            const StructureOptions& options) {
  if (carrier_size < 1) throw Error(ErrorKind::EmptySubcarrier, "carrier must be nonempty");
  for (const LSet& s : family) {
    if (!same_quantale(s.q, q) || s.carrier_size() != carrier_size)
      throw Error(ErrorKind::CarrierMismatch, "family member over a different carrier");
    for (Elem d : s.degrees)
      if (d < 0 || d >= q->size())
        throw Error(ErrorKind::IndexOutOfRange, "degree out of quantale range", {d});
  }
  SpacePtr space = make_space_unchecked(q, carrier_size, std::move(family));

  if (!space->contains(space->bottom_set()) || !space->contains(space->top_set()))
    throw Error(ErrorKind::MissingBottomTop, "constant bottom/top L-subsets must be members");

  const auto& members = space->convexes();
  const int m = space->family_size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      LSet meet = pointwise_meet(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
      if (!space->contains(meet))
        throw Error(ErrorKind::NotMeetClosed,
                    "meet of members " + std::to_string(i) + " and " + std::to_string(j) + " = " +
                        set_str(meet) + " is missing",
                    {i, j});
    }
  }
  for (Elem p = 0; p < q->size(); ++p) {
    for (int i = 0; i < m; ++i) {
      LSet impl = implication_into(p, members[static_cast<std::size_t>(i)]);
      if (!space->contains(impl))
        throw Error(ErrorKind::NotStratified,
                    "p -> C missing for p = " + std::to_string(p) + ", member " + std::to_string(i) +
                        "; " + set_str(impl),
                    {p, i});
    }
  }

  if (options.audit_directed_joins && m <= options.directed_join_audit_max) {
    // every directed subfamily must contain its join; on a finite family the
    // join of a directed subfamily is its greatest element, so any failure
    // here means the directedness/maximum argument broke down
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      bool directed = true;
      for (std::size_t a = 0; a < idx.size() && directed; ++a) {
        for (std::size_t b = a + 1; b < idx.size() && directed; ++b) {
          bool bounded = false;
          for (int k : idx) {
            if (pointwise_leq(members[static_cast<std::size_t>(idx[a])], members[static_cast<std::size_t>(k)]) &&
                pointwise_leq(members[static_cast<std::size_t>(idx[b])], members[static_cast<std::size_t>(k)])) {
              bounded = true;
              break;
            }
          }
          directed = bounded;
        }
      }
      if (!directed) continue;
      LSet join = members[static_cast<std::size_t>(idx.front())];
      for (std::size_t k = 1; k < idx.size(); ++k)
        join = pointwise_join(join, members[static_cast<std::size_t>(idx[k])]);
      if (!space->contains(join))
        throw Error(ErrorKind::NotDirectedJoinClosed,
                    "directed subfamily mask " + std::to_string(mask) + " lacks its join",
                    {static_cast<int>(mask)});
    }
  }
  return space;
}

SpacePtr generate_structure(QuantalePtr q, int carrier_size, const std::vector<LSet>& generators,
                            bool stratified, const Limits& limits) {
  if (carrier_size < 1) throw Error(ErrorKind::EmptySubcarrier, "carrier must be nonempty");
  std::set<std::vector<Elem>> family;
  std::vector<LSet> frontier;

  auto push = [&](LSet s) {
    if (family.insert(s.degrees).second) {
      if (family.size() > limits.max_family)
        throw Error(ErrorKind::BudgetExceeded,
                    "closure exceeds " + std::to_string(limits.max_family) + " sets");
      frontier.push_back(std::move(s));
    }
  };

  push(constant(q, carrier_size, q->bottom()));
  push(constant(q, carrier_size, q->top()));
  for (const LSet& g : generators) {
    if (!same_quantale(g.q, q) || g.carrier_size() != carrier_size)
      throw Error(ErrorKind::CarrierMismatch, "generator over a different carrier");
    push(g);
  }

  std::vector<LSet> settled;
  while (!frontier.empty()) {
    std::vector<LSet> batch = std::move(frontier);
    frontier.clear();
    for (const LSet& s : batch) {
      if (stratified)
        for (Elem p = 0; p < q->size(); ++p) push(implication_into(p, s));
      for (const LSet& t : settled) push(pointwise_meet(s, t));
      for (const LSet& t : batch) push(pointwise_meet(s, t));
    }
    settled.insert(settled.end(), batch.begin(), batch.end());
  }

  std::vector<LSet> members;
  members.reserve(family.size());
  for (const auto& degrees : family) members.push_back(LSet{q, degrees});
  return validate_structure(q, carrier_size, std::move(members));
}

bool is_S0(const LConvexSpace& x) { return !s0_witness(x).has_value(); }

std::optional<std::pair<int, int>> s0_witness(const LConvexSpace& x) {
  std::vector<LSet> hulls;
  hulls.reserve(static_cast<std::size_t>(x.carrier_size()));
  for (int p = 0; p < x.carrier_size(); ++p) hulls.push_back(x.point_hull(p));
  for (int a = 0; a < x.carrier_size(); ++a)
    for (int b = a + 1; b < x.carrier_size(); ++b)
      if (hulls[static_cast<std::size_t>(a)] == hulls[static_cast<std::size_t>(b)])
        return std::make_pair(a, b);
  return std::nullopt;
}

SpacePtr subspace(const SpacePtr& x, std::span<const int> ys) {
  if (ys.empty()) throw Error(ErrorKind::EmptySubcarrier, "subspace needs a nonempty point subset");
  std::vector<LSet> restricted;
  restricted.reserve(x->convexes().size());
  for (const LSet& c : x->convexes()) restricted.push_back(restrict_to(c, ys));
  return validate_structure(x->quantale(), static_cast<int>(ys.size()), std::move(restricted));
}

SpaceMap make_map(SpacePtr source, SpacePtr target, std::vector<int> points) {
  if (static_cast<int>(points.size()) != source->carrier_size())
    throw Error(ErrorKind::CarrierMismatch, "map must be total on the source carrier");
  for (int y : points)
    if (y < 0 || y >= target->carrier_size())
      throw Error(ErrorKind::IndexOutOfRange, "map image out of target carrier", {y});
  return SpaceMap{std::move(source), std::move(target), std::move(points), std::nullopt};
}

SpaceMap identity_map(const SpacePtr& x) {
  std::vector<int> pts(static_cast<std::size_t>(x->carrier_size()));
  for (int i = 0; i < x->carrier_size(); ++i) pts[static_cast<std::size_t>(i)] = i;
  return make_map(x, x, std::move(pts));
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!same_space(f.target, g.source))
    throw Error(ErrorKind::CarrierMismatch, "composition of non-composable maps");
  std::vector<int> pts;
  pts.reserve(f.points.size());
  for (int x = 0; x < f.source->carrier_size(); ++x) pts.push_back(g(f(x)));
  return make_map(f.source, g.target, std::move(pts));
}

LSet forward_image(const SpaceMap& f, const LSet& a) { return zadeh_forward(f.point_map(), a); }
LSet backward_image(const SpaceMap& f, const LSet& b) { return zadeh_backward(f.point_map(), b); }

std::vector<int> image_points(const SpaceMap& f) {
  std::vector<int> image = f.points;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

namespace {

bool is_bijection(const SpaceMap& f) {
  if (f.source->carrier_size() != f.target->carrier_size()) return false;
  return static_cast<int>(image_points(f).size()) == f.target->carrier_size();
}

bool backward_images_convex(const SpaceMap& f) {
  for (const LSet& d : f.target->convexes())
    if (!f.source->contains(backward_image(f, d))) return false;
  return true;
}

bool forward_images_convex(const SpaceMap& f) {
  for (const LSet& c : f.source->convexes())
    if (!f.target->contains(forward_image(f, c))) return false;
  return true;
}

}  // namespace

const MapFlags& classify_map(const SpaceMap& f) {
  if (f.flags) return *f.flags;
  MapFlags flags;
  flags.cp = backward_images_convex(f);
  flags.convex_to_convex = forward_images_convex(f);
  flags.homeomorphism = is_bijection(f) && flags.cp && flags.convex_to_convex;

  // corestriction onto the image subspace must be a homeomorphism
  std::vector<int> image = image_points(f);
  if (static_cast<int>(image.size()) == f.source->carrier_size()) {
    SpacePtr onto = subspace(f.target, image);
    std::vector<int> repts;
    repts.reserve(f.points.size());
    for (int y : f.points) {
      auto it = std::lower_bound(image.begin(), image.end(), y);
      repts.push_back(static_cast<int>(std::distance(image.begin(), it)));
    }
    SpaceMap corestriction = make_map(f.source, onto, std::move(repts));
    flags.subspace_embedding = is_bijection(corestriction) &&
                               backward_images_convex(corestriction) &&
                               forward_images_convex(corestriction);
  } else {
    flags.subspace_embedding = false;  // not injective
  }

  f.flags = flags;
  return *f.flags;
}

LOrderedSet convex_order(const LConvexSpace& x) {
  const int m = x.family_size();
  std::vector<Elem> e(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      e[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          sub(x.convex(i), x.convex(j));
  return check_lorder(x.quantale(), m, std::move(e));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool for_each_point_map(int source_size, int target_size, std::size_t cap,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  if (target_size < 1) return source_size == 0;
  if (!checked_pow(static_cast<std::size_t>(target_size), source_size, cap)) return false;
  std::vector<int> images(static_cast<std::size_t>(source_size), 0);
  while (true) {
    if (!fn(images)) return true;
    int pos = source_size - 1;
    while (pos >= 0 && images[static_cast<std::size_t>(pos)] == target_size - 1) {
      images[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return true;
    ++images[static_cast<std::size_t>(pos)];
  }
}

}  // namespace lconvex
