#pragma once

#include "crwp/clifford.hpp"
#include "crwp/pipeline.hpp"

namespace crwp {

/// Hook that rewrites one factor-table entry: in the first task whose table
/// has a column from a higher component, t of the first such entry is
/// replaced by a generator with a different value.
PipelineHooks corrupt_factor_hook(const CRSemigroup& s);

/// Copy of `s` where the image of the first generator under the first
/// structure map is replaced by a different linked triple.
CRSemigroup corrupt_structure_map(const CRSemigroup& s);

}  // namespace crwp
