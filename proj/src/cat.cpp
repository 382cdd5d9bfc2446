#include "lconvex/cat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lconvex {

json TheoremReport::to_json() const {
  json conds = json::array();
  for (const auto& [name, holds] : conditions) conds.push_back({{"name", name}, {"holds", holds}});
  return json{{"theorem", theorem}, {"instance", instance},         {"conditions", conds},
              {"agreement", agreement}, {"witnesses", witnesses}, {"exhaustive", exhaustive}};
}

void TheoremReport::finish() {
  agreement = true;
  for (const auto& [name, holds] : conditions)
    if (holds != conditions.front().second) agreement = false;
}

namespace {

void require_cp(const SpaceMap& f, const char* what) {
  if (!classify_map(f).cp) throw Error(ErrorKind::NotCP, std::string(what) + " must be convexity-preserving");
}

json space_descriptor(const SpacePtr& x) {
  return json{{"carrier", x->carrier_size()},
              {"convexes", x->family_size()},
              {"quantale", x->quantale()->size()}};
}

std::set<std::vector<Elem>> backward_image_set(const SpaceMap& f) {
  std::set<std::vector<Elem>> images;
  for (const LSet& d : f.target->convexes()) images.insert(backward_image(f, d).degrees);
  return images;
}

}  // namespace

bool is_quasihomeomorphism(const SpaceMap& f) {
  require_cp(f, "a quasihomeomorphism candidate");
  const auto images = backward_image_set(f);
  // cp puts every image inside C(X); injective iff no two targets collide,
  // surjective iff the image set exhausts C(X)
  return images.size() == f.target->convexes().size() &&
         images.size() == f.source->convexes().size();
}

bool is_strict_embedding(const SpaceMap& f) {
  return is_quasihomeomorphism(f) && classify_map(f).subspace_embedding;
}

TheoremReport embedding_iff_surjection(const SpaceMap& f) {
  if (!is_S0(*f.source)) throw Error(ErrorKind::NotS0, "source space is not S0");
  if (!is_S0(*f.target)) throw Error(ErrorKind::NotS0, "target space is not S0");
  require_cp(f, "the compared map");

  TheoremReport report;
  report.theorem = "embedding-iff-surjection";
  report.instance = {{"source", space_descriptor(f.source)},
                     {"target", space_descriptor(f.target)},
                     {"points", f.points}};
  bool embedding = classify_map(f).subspace_embedding;
  bool surjective = backward_image_set(f).size() == f.source->convexes().size();
  report.conditions = {{"subspace_embedding", embedding}, {"inverse_image_surjective", surjective}};
  report.finish();
  return report;
}

TheoremReport characterize_sobrification(const SpacePtr& x, const SpacePtr& y,
                                         const Limits& limits) {
  if (!is_sober(y).sober()) throw Error(ErrorKind::NotSober, "Y must be sober");

  TheoremReport report;
  report.theorem = "characterize-sobrification";
  report.instance = {{"X", space_descriptor(x)}, {"Y", space_descriptor(y)}};

  Sobrification sx = sobrify(x);

  // (1) sobrification <=> some homeomorphism S(X) -> Y (uniqueness of
  // sobrifications); bijections enumerated in lexicographic order
  bool is_sobrification = false;
  if (sx.space->carrier_size() == y->carrier_size() &&
      sx.space->family_size() == y->family_size()) {
    const int n = y->carrier_size();
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) {
      factorial *= static_cast<std::size_t>(i);
      if (factorial > limits.max_enumeration)
        throw Error(ErrorKind::SizeLimitExceeded, "homeomorphism search over " +
                                                      std::to_string(n) + "! bijections");
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      SpaceMap candidate = make_map(sx.space, y, perm);
      if (classify_map(candidate).homeomorphism) {
        is_sobrification = true;
        report.witnesses["homeomorphism"] = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // (2) some quasihomeomorphism X -> Y; family sizes must match first
  bool quasi_exists = false;
  if (x->family_size() == y->family_size()) {
    bool enumerated = for_each_point_map(
        x->carrier_size(), y->carrier_size(), limits.max_enumeration,
        [&](const std::vector<int>& candidate) {
          SpaceMap g = make_map(x, y, candidate);
          if (classify_map(g).cp && is_quasihomeomorphism(g)) {
            quasi_exists = true;
            report.witnesses["quasihomeomorphism"] = candidate;
            return false;
          }
          return true;
        });
    if (!enumerated)
      throw Error(ErrorKind::SizeLimitExceeded,
                  "quasihomeomorphism search over |Y|^|X| point maps");
  }

  // (3) (C(X), sub) and (C(Y), sub) L-order-isomorphic
  auto iso = find_order_iso(convex_order(*x), convex_order(*y), limits);
  if (iso) report.witnesses["order_iso"] = *iso;

  report.conditions = {{"is_sobrification", is_sobrification},
                       {"quasihomeomorphism_exists", quasi_exists},
                       {"convex_orders_isomorphic", iso.has_value()}};
  report.finish();
  return report;
}

TheoremReport lift_is_homeo_iff_quasi(const SpaceMap& f) {
  require_cp(f, "the lifted map's base");
  TheoremReport report;
  report.theorem = "lift-homeo-iff-quasi";
  report.instance = {{"source", space_descriptor(f.source)},
                     {"target", space_descriptor(f.target)},
                     {"points", f.points}};
  bool quasi = is_quasihomeomorphism(f);
  Sobrification sx = sobrify(f.source);
  Sobrification sy = sobrify(f.target);
  SpaceMap lifted = lift_map(f, sx, sy);
  bool lifted_homeo = classify_map(lifted).homeomorphism;
  report.witnesses["lifted_points"] = lifted.points;
  report.conditions = {{"quasihomeomorphism", quasi}, {"lift_homeomorphism", lifted_homeo}};
  report.finish();
  return report;
}

namespace {

std::vector<int> invert_bijection(const std::vector<int>& points) {
  std::vector<int> inverse(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i)
    inverse[static_cast<std::size_t>(points[i])] = static_cast<int>(i);
  return inverse;
}

}  // namespace

SpaceMap extend_along(const SpaceMap& j, const SpaceMap& f, const SpacePtr& x,
                      const Limits& limits) {
  if (!same_space(f.target, x))
    throw Error(ErrorKind::CarrierMismatch, "f must land in the injective candidate X");
  if (!same_space(j.source, f.source))
    throw Error(ErrorKind::CarrierMismatch, "j and f must share their source");
  require_cp(j, "the embedding");
  require_cp(f, "the extended map");
  if (!is_strict_embedding(j))
    throw Error(ErrorKind::NotStrictEmbedding, "j is not a strict embedding");
  if (!is_sober(x).sober()) throw Error(ErrorKind::NotSober, "extension target is not sober");

  Sobrification sy = sobrify(j.source);
  Sobrification sz = sobrify(j.target);
  Sobrification sx = sobrify(x);

  SpaceMap lifted_j = lift_map(j, sy, sz);
  if (!classify_map(lifted_j).homeomorphism)
    throw Error(ErrorKind::Internal, "S(j) is not a homeomorphism for a strict embedding");
  std::vector<int> lifted_j_inv = invert_bijection(lifted_j.points);
  SpaceMap lifted_f = lift_map(f, sy, sx);
  std::vector<int> eta_x_inv = invert_bijection(sx.eta.points);  // eta_X bijective: X sober

  std::vector<int> extension;
  extension.reserve(static_cast<std::size_t>(j.target->carrier_size()));
  for (int z = 0; z < j.target->carrier_size(); ++z)
    extension.push_back(
        eta_x_inv[static_cast<std::size_t>(lifted_f(lifted_j_inv[static_cast<std::size_t>(sz.eta(z))]))]);

  SpaceMap fbar = make_map(j.target, x, std::move(extension));
  if (!classify_map(fbar).cp)
    throw Error(ErrorKind::Internal, "constructed extension is not convexity-preserving");
  for (int yp = 0; yp < j.source->carrier_size(); ++yp)
    if (fbar(j(yp)) != f(yp))
      throw Error(ErrorKind::Internal, "constructed extension does not factor f through j", {yp});

  // uniqueness among all convexity-preserving g with g o j = f
  std::size_t matches = 0;
  bool enumerated = for_each_point_map(
      j.target->carrier_size(), x->carrier_size(), limits.max_enumeration,
      [&](const std::vector<int>& candidate) {
        for (int yp = 0; yp < j.source->carrier_size(); ++yp)
          if (candidate[static_cast<std::size_t>(j(yp))] != f(yp)) return true;
        SpaceMap g = make_map(j.target, x, candidate);
        if (!classify_map(g).cp) return true;
        ++matches;
        if (candidate != fbar.points)
          throw Error(ErrorKind::Internal, "a second extension exists; uniqueness violated");
        return true;
      });
  if (!enumerated)
    throw Error(ErrorKind::SizeLimitExceeded, "uniqueness sweep over |X|^|Z| point maps");
  if (matches != 1)
    throw Error(ErrorKind::Internal, "extension not found by the uniqueness sweep");
  return fbar;
}

TheoremReport injectivity_probe(const SpacePtr& x, std::span<const SpaceMap> embeddings,
                                std::span<const SpaceMap> maps, const Limits& limits) {
  if (!is_S0(*x)) throw Error(ErrorKind::NotS0, "injectivity is probed among S0 spaces");
  if (embeddings.size() != maps.size())
    throw Error(ErrorKind::CarrierMismatch, "embedding pool and map pool must pair up");

  TheoremReport report;
  report.theorem = "injectivity-probe";
  report.instance = {{"X", space_descriptor(x)}, {"pool", embeddings.size()}};

  SoberVerdict verdict = is_sober(x);
  bool strictly_injective = true;

  if (verdict.sober()) {
    for (std::size_t k = 0; k < embeddings.size(); ++k) {
      try {
        SpaceMap fbar = extend_along(embeddings[k], maps[k], x, limits);
        report.witnesses["extensions"].push_back(fbar.points);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Internal) throw;
        strictly_injective = false;
        report.witnesses["failed_pair"] = static_cast<int>(k);
        break;
      }
    }
    if (strictly_injective) {
      // the canonical pair (eta_X, id) must extend as well
      Sobrification sx = sobrify(x);
      try {
        SpaceMap retraction = extend_along(sx.eta, identity_map(x), x, limits);
        report.witnesses["canonical_retraction"] = retraction.points;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Internal) throw;
        strictly_injective = false;
        report.witnesses["failed_pair"] = "canonical";
      }
    }
  } else {
    // an extension g of id along eta_X would exhibit X as a retraction
    // kernel of the sober S(X); verify none exists
    Sobrification sx = sobrify(x);
    bool extension_found = false;
    bool enumerated = for_each_point_map(
        sx.space->carrier_size(), x->carrier_size(), limits.max_enumeration,
        [&](const std::vector<int>& candidate) {
          for (int p = 0; p < x->carrier_size(); ++p)
            if (candidate[static_cast<std::size_t>(sx.eta(p))] != p) return true;
          SpaceMap g = make_map(sx.space, x, candidate);
          if (classify_map(g).cp) {
            extension_found = true;
            report.witnesses["unexpected_retraction"] = candidate;
            return false;
          }
          return true;
        });
    if (!enumerated)
      throw Error(ErrorKind::SizeLimitExceeded, "canonical probe over |X|^|irr X| point maps");
    strictly_injective = extension_found;
  }

  report.conditions = {{"sober", verdict.sober()}, {"strictly_injective", strictly_injective}};
  report.finish();
  return report;
}

TheoremReport equalizer_sober(const SpaceMap& f, const SpaceMap& g, const Limits&) {
  if (!same_space(f.source, g.source) || !same_space(f.target, g.target))
    throw Error(ErrorKind::CarrierMismatch, "equalizer needs parallel maps");
  require_cp(f, "the first parallel map");
  require_cp(g, "the second parallel map");
  if (!is_sober(f.source).sober()) throw Error(ErrorKind::NotSober, "equalizer source is not sober");
  if (!is_S0(*f.target)) throw Error(ErrorKind::NotS0, "equalizer target is not S0");

  std::vector<int> agreement_points;
  for (int p = 0; p < f.source->carrier_size(); ++p)
    if (f(p) == g(p)) agreement_points.push_back(p);
  if (agreement_points.empty())
    throw Error(ErrorKind::EmptyEqualizer, "the two maps agree nowhere");

  TheoremReport report;
  report.theorem = "equalizer-sober";
  report.instance = {{"source", space_descriptor(f.source)},
                     {"target", space_descriptor(f.target)},
                     {"f", f.points},
                     {"g", g.points},
                     {"equalizer", agreement_points}};
  SpacePtr z = subspace(f.source, agreement_points);
  report.conditions = {{"source_sober", true}, {"equalizer_sober", is_sober(z).sober()}};
  report.finish();
  return report;
}

TheoremReport retraction_kernel_sober(const SpaceMap& r, const SpaceMap& d, const Limits&) {
  if (!same_space(r.source, d.target) || !same_space(r.target, d.source))
    throw Error(ErrorKind::CarrierMismatch, "retraction pair endpoints do not match");
  require_cp(r, "the retraction");
  require_cp(d, "the section");
  for (int yp = 0; yp < d.source->carrier_size(); ++yp)
    if (r(d(yp)) != yp) throw Error(ErrorKind::NotARetraction, "r o d is not the identity", {yp});
  if (!is_sober(r.source).sober()) throw Error(ErrorKind::NotSober, "retracted space is not sober");

  TheoremReport report;
  report.theorem = "retraction-kernel-sober";
  report.instance = {{"X", space_descriptor(r.source)},
                     {"Y", space_descriptor(r.target)},
                     {"r", r.points},
                     {"d", d.points}};
  report.conditions = {{"x_sober", true}, {"kernel_sober", is_sober(d.source).sober()}};
  report.finish();
  return report;
}

}  // namespace lconvex
