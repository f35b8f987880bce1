#pragma once

namespace mailsieve {

// Every data-parallel kernel (matrix building, candidate scoring inside the
// searches, grid cells) has a serial path and an OpenMP path. Results are
// required to be bit-identical: parallel loops write into preallocated slots
// and all winner/tie decisions happen in a deterministic serial merge.
enum class ExecPolicy { Serial, Parallel };

}  // namespace mailsieve
