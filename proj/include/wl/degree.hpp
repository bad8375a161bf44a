#pragma once

#include "wl/core.hpp"

namespace wl {

// Depth-2 stabilization: the coarsest partition of vertices refining the
// diagonal-color partition such that any two vertices of a class have, for
// every class C and arc color k, the same number of color-k arcs into C.
// Computed by iterating valency-vector refinement until the partition repeats.
VertexPartition total_degree_partition(const ColorMatrix& m);

// The preprocessing recoloring: one round of vertex refinement by per-color
// (out, in) incidence counts, then one round of arc refinement by the ordered
// pair of new endpoint classes. Not a fixpoint loop; the main engines finish
// the job. The output refines the input.
ColorMatrix preprocess_recolor(const ColorMatrix& m);

}  // namespace wl
