#include "lconvex/sober.hpp"

#include <algorithm>

namespace lconvex {

std::vector<LSet> irr(const LConvexSpace& x) {
  std::vector<LSet> out;
  const Quantale& q = *x.quantale();
  for (const LSet& c : x.convexes()) {
    if (q.join_all(c.degrees) == q.top()) out.push_back(c);
  }
  return out;
}

void irr_audit(const LConvexSpace& x, int max_family) {
  const int m = x.family_size();
  if (m > max_family)
    throw Error(ErrorKind::SizeLimitExceeded,
                "irr audit over " + std::to_string(m) + " members (cap " +
                    std::to_string(max_family) + ")");
  const Quantale& q = *x.quantale();
  const auto& members = x.convexes();
  const std::vector<LSet> candidates = irr(x);

  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    bool directed = true;
    for (std::size_t a = 0; a < idx.size() && directed; ++a) {
      for (std::size_t b = a + 1; b < idx.size() && directed; ++b) {
        bool bounded = false;
        for (int k : idx) {
          if (pointwise_leq(members[static_cast<std::size_t>(idx[a])],
                            members[static_cast<std::size_t>(k)]) &&
              pointwise_leq(members[static_cast<std::size_t>(idx[b])],
                            members[static_cast<std::size_t>(k)])) {
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
    for (const LSet& f : candidates) {
      Elem lhs = sub(f, join);
      Elem rhs = q.bottom();
      for (int k : idx) rhs = q.join(rhs, sub(f, members[static_cast<std::size_t>(k)]));
      if (lhs != rhs)
        throw Error(ErrorKind::Internal,
                    "directed-sup condition failed on a finite family, mask " + std::to_string(mask),
                    {static_cast<int>(mask)});
    }
  }
}

LSet Sobrification::phi(const LSet& c) const {
  LSet out{c.q, std::vector<Elem>(irr_points.size())};
  for (std::size_t i = 0; i < irr_points.size(); ++i) out.degrees[i] = sub(irr_points[i], c);
  return out;
}

Sobrification sobrify(const SpacePtr& x) {
  Sobrification s;
  s.base = x;
  s.irr_points = irr(*x);

  std::vector<LSet> phis;
  phis.reserve(x->convexes().size());
  for (const LSet& c : x->convexes()) {
    LSet image{x->quantale(), std::vector<Elem>(s.irr_points.size())};
    for (std::size_t i = 0; i < s.irr_points.size(); ++i)
      image.degrees[i] = sub(s.irr_points[i], c);
    phis.push_back(std::move(image));
  }
  // phi is injective (eta^<- o phi = id); a collision is an internal bug
  {
    std::vector<LSet> sorted = phis;
    std::sort(sorted.begin(), sorted.end(), degree_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::Internal, "phi images collided; phi should be injective");
  }
  s.space = validate_structure(x->quantale(), static_cast<int>(s.irr_points.size()), std::move(phis));

  std::vector<int> eta_points;
  eta_points.reserve(static_cast<std::size_t>(x->carrier_size()));
  for (int p = 0; p < x->carrier_size(); ++p) {
    LSet hull = x->point_hull(p);
    auto it = std::lower_bound(s.irr_points.begin(), s.irr_points.end(), hull, degree_less);
    if (it == s.irr_points.end() || !(*it == hull))
      throw Error(ErrorKind::Internal, "point hull is not algebraic irreducible", {p});
    eta_points.push_back(static_cast<int>(std::distance(s.irr_points.begin(), it)));
  }
  s.eta = make_map(x, s.space, std::move(eta_points));
  return s;
}

SoberVerdict hull_sober_verdict(const LConvexSpace& x) {
  SoberVerdict verdict;
  verdict.s0 = !s0_witness(x).has_value();

  std::vector<LSet> hulls;
  hulls.reserve(static_cast<std::size_t>(x.carrier_size()));
  for (int p = 0; p < x.carrier_size(); ++p) hulls.push_back(x.point_hull(p));

  for (const LSet& f : irr(x)) {
    std::vector<int> matches;
    for (int p = 0; p < x.carrier_size(); ++p)
      if (hulls[static_cast<std::size_t>(p)] == f) matches.push_back(p);
    if (matches.size() == 1) continue;
    verdict.kind = matches.empty() ? SoberKind::NonPointIrr : SoberKind::AmbiguousPoint;
    verdict.witness = f;
    verdict.witness_points = std::move(matches);
    return verdict;
  }
  verdict.kind = SoberKind::Sober;
  return verdict;
}

bool eta_homeo_sober(const SpacePtr& x) { return classify_map(sobrify(x).eta).homeomorphism; }

SoberVerdict is_sober(const SpacePtr& x) {
  SoberVerdict verdict = hull_sober_verdict(*x);
  bool via_eta = eta_homeo_sober(x);
  if (verdict.sober() != via_eta)
    throw Error(ErrorKind::Internal, "sobriety deciders disagree: hull criterion says " +
                                         std::string(verdict.sober() ? "sober" : "not sober") +
                                         ", eta criterion says the opposite");
  return verdict;
}

SpaceMap lift_map(const SpaceMap& f, const Sobrification& sx, const Sobrification& sy) {
  if (!same_space(f.source, sx.base) || !same_space(f.target, sy.base))
    throw Error(ErrorKind::CarrierMismatch, "lift_map needs the sobrifications of f's endpoints");
  if (!classify_map(f).cp) throw Error(ErrorKind::NotCP, "lift_map needs a convexity-preserving map");

  std::vector<int> points;
  points.reserve(sx.irr_points.size());
  for (const LSet& irr_set : sx.irr_points) {
    LSet image_hull = f.target->hull(forward_image(f, irr_set));
    auto it =
        std::lower_bound(sy.irr_points.begin(), sy.irr_points.end(), image_hull, degree_less);
    if (it == sy.irr_points.end() || !(*it == image_hull))
      throw Error(ErrorKind::Internal, "hull of forward image is not algebraic irreducible");
    points.push_back(static_cast<int>(std::distance(sy.irr_points.begin(), it)));
  }
  SpaceMap lifted = make_map(sx.space, sy.space, std::move(points));
  if (!classify_map(lifted).cp)
    throw Error(ErrorKind::Internal, "lifted map is not convexity-preserving");
  return lifted;
}

SpaceMap check_universal_property(const SpacePtr& x, const SpacePtr& z, const SpaceMap& f,
                                  const Limits& limits) {
  if (!same_space(f.source, x) || !same_space(f.target, z))
    throw Error(ErrorKind::CarrierMismatch, "factorization needs f: X -> Z");
  if (!is_sober(z).sober())
    throw Error(ErrorKind::NotSober, "universal property is stated against sober targets");
  if (!classify_map(f).cp) throw Error(ErrorKind::NotCP, "f must be convexity-preserving");

  Sobrification sx = sobrify(x);
  std::vector<std::vector<int>> survivors;
  bool enumerated = for_each_point_map(
      sx.space->carrier_size(), z->carrier_size(), limits.max_enumeration,
      [&](const std::vector<int>& candidate) {
        for (int p = 0; p < x->carrier_size(); ++p)
          if (candidate[static_cast<std::size_t>(sx.eta(p))] != f(p)) return true;
        SpaceMap g = make_map(sx.space, z, candidate);
        if (classify_map(g).cp) survivors.push_back(candidate);
        return true;
      });
  if (!enumerated)
    throw Error(ErrorKind::SizeLimitExceeded,
                "factorization search needs |Z|^" + std::to_string(sx.space->carrier_size()) +
                    " candidates");
  if (survivors.size() != 1)
    throw Error(ErrorKind::Internal, "universal property violated: " +
                                         std::to_string(survivors.size()) +
                                         " factorizations through eta");
  return make_map(sx.space, z, survivors.front());
}

}  // namespace lconvex
