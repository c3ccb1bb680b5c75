#pragma once

#include "bordism/borel.hpp"
#include "bordism/fixedring.hpp"
#include "bordism/manifold.hpp"

#include <optional>
#include <string>

namespace bordism {

/// The localized bundling transformation (S^{-1} eta) o iota o incl applied
/// to a fixed-point datum, evaluated on generators: e_V -> e(V),
/// e_V^{-1} -> 1/e(V), Y_{V,d} -> CP^{d-1}-pushforward of (x +_F e(V))^{-1}.
/// The result has effective precision exactly D. rank_hint supplies the torus
/// rank when the datum has no weights.
LocalizedBorel localize(const FixedDatum& x, int D, int rank_hint = 1);

/// Outcome of the realizability test: membership in the geometric cone plus
/// tom Dieck integrality of the localized Borel image. A negative verdict is
/// a certificate; a positive one holds up to the stated precision.
struct Verdict {
    bool cone_ok = false;
    bool integrality_ok = false;
    int precision = 0;                          // effective C-degree precision
    std::optional<Obstruction> witness;         // on integrality failure
    std::optional<MuElement> constant_term;     // augmentation of the image, when integral
    bool homogeneous_input = true;              // heterogeneous inputs are judged per component

    bool realizable() const { return cone_ok && integrality_ok; }
    std::string str() const;
};

/// Decide realizability of x up to C-degree D (and the context's coefficient
/// truncation). Heterogeneous x is split by total degree and every component
/// must pass.
Verdict realizable(const FixedDatum& x, int D, int rank_hint = 1);

/// Consistency oracle: the constant C-term of the integralized Borel image of
/// phi_omega(m) must equal the class of the underlying manifold.
bool augmentation_check(const ContextPtr& ctx, const ManifoldExpr& m, int D);

} // namespace bordism
