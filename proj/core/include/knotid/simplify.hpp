#pragma once

#include <optional>
#include <vector>

#include "knotid/egc.hpp"

namespace knotid {

// Reidemeister I: removes the smallest-labelled kink (a label whose two
// tokens are cyclically adjacent in one component). A kink that is the only
// crossing of its component is never removed; such a component is normalized
// to the twist "b?-a?-" instead. Returns nullopt when nothing changes.
std::optional<Diagram> reduce_r1_once(const Diagram& d);

// Reidemeister II: removes the smallest-labelled bigon, i.e. labels x != y
// adjacent once as over/over and once as under/under, with opposite signs.
// Components that would be left empty become a fresh twist "b?-a?-".
std::optional<Diagram> reduce_r2_once(const Diagram& d);

// R1 then R2 to a fixpoint. Output is canonically labelled and keeps the
// component count.
Diagram simplify(const Diagram& d);

namespace rewrite {

// Unprotected R1/R2 reduction on raw components, preserving the linear
// order of surviving tokens. Components may end up empty (free unknotted
// loops). Returns the number of crossings removed.
int reduce_unprotected(std::vector<Component>& components);

}  // namespace rewrite

}  // namespace knotid
