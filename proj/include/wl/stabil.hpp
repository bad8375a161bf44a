#pragma once

#include <utility>

#include "wl/core.hpp"

namespace wl {

// Triangle fingerprint of the basis arc (u,v): tally of (colors(u,w),
// colors(w,v)) over all w, returned as sorted nonzero triples. Loops count
// too (u == v allowed). Throws std::invalid_argument on out-of-range vertices.
Fingerprint arc_fingerprint(const ColorMatrix& m, int u, int v);

// One synchronous refinement pass: every arc is fingerprinted against m, each
// color class is split by fingerprint. The group of the first-scanned arc
// keeps the old color, other groups get fresh colors appended in
// first-occurrence order. Returns the refined matrix and whether it changed.
std::pair<ColorMatrix, bool> stabil_iteration(const ColorMatrix& m);

// Iterates stabil_iteration to fixpoint. iterations counts all passes
// including the final confirming one (an already-stable input reports 1).
// If with_constants, attaches the structure constants read off the stable
// coloring's fingerprints.
StableResult stabil_closure(const ColorMatrix& m, bool with_constants = false);

// Structure constants of a stable coloring, read from one representative arc
// per color. Assumes stability (use oracle::structure_constants to verify).
StructureConstants read_constants(const ColorMatrix& stable);

}  // namespace wl
