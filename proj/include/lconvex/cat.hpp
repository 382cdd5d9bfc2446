#pragma once

#include <json.hpp>

#include "lconvex/sober.hpp"

namespace lconvex {

using nlohmann::json;

/// Outcome of checking one theorem on one instance. The agreement flag is
/// true iff all conditions the theorem asserts equivalent evaluated
/// identically; a false flag is a counterexample to either the theorem or
/// the implementation and is the library's falsification signal.
struct TheoremReport {
  std::string theorem;
  json instance = json::object();
  std::vector<std::pair<std::string, bool>> conditions;
  bool agreement = false;
  json witnesses = json::object();
  bool exhaustive = true;

  json to_json() const;
  void finish();  // agreement := all conditions equal
};

/// f^<- : C(Y) -> C(X) is a bijection. Requires f convexity-preserving.
bool is_quasihomeomorphism(const SpaceMap& f);

/// Quasihomeomorphism and subspace embedding at once.
bool is_strict_embedding(const SpaceMap& f);

/// Between S0 spaces: subspace embedding <=> f^<- surjective onto C(X).
TheoremReport embedding_iff_surjection(const SpaceMap& f);

/// Sobrification characterization for sober Y: (1) Y is a sobrification of X
/// (decided via uniqueness: some homeomorphism S(X) -> Y exists), (2) some
/// quasihomeomorphism X -> Y exists, (3) (C(X), sub) and (C(Y), sub) are
/// L-order-isomorphic. All three must agree.
TheoremReport characterize_sobrification(const SpacePtr& x, const SpacePtr& y,
                                         const Limits& limits = default_limits());

/// S(f) is a homeomorphism <=> f is a quasihomeomorphism.
TheoremReport lift_is_homeo_iff_quasi(const SpaceMap& f);

/// Extends f: Y -> X along the strict embedding j: Y -> Z into sober X via
/// eta_X^-1 o S(f) o S(j)^-1 o eta_Z; checks the factorization and asserts
/// uniqueness by enumerating all convexity-preserving g: Z -> X with g o j = f.
SpaceMap extend_along(const SpaceMap& j, const SpaceMap& f, const SpacePtr& x,
                      const Limits& limits = default_limits());

/// Strict injectivity vs sobriety probe for an S0 space. Sober: every pooled
/// (j, f) pair plus the canonical (eta_X, id) pair must extend. Not sober:
/// no convexity-preserving g: S(X) -> X satisfies g o eta_X = id (otherwise X
/// would be a retraction kernel of the sober S(X), hence sober).
TheoremReport injectivity_probe(const SpacePtr& x, std::span<const SpaceMap> embeddings,
                                std::span<const SpaceMap> maps,
                                const Limits& limits = default_limits());

/// Equalizer of two convexity-preserving maps from a sober space to an S0
/// space, as a subspace of the source, is sober. Throws EmptyEqualizer when
/// the maps agree nowhere.
TheoremReport equalizer_sober(const SpaceMap& f, const SpaceMap& g,
                              const Limits& limits = default_limits());

/// A retraction kernel (r o d = id) of a sober space is sober.
TheoremReport retraction_kernel_sober(const SpaceMap& r, const SpaceMap& d,
                                      const Limits& limits = default_limits());

}  // namespace lconvex
