// Deterministic work distribution for the verification sweeps.  The worker
// count comes from SCHUBERT_THREADS (0 or unset picks the hardware count, 1
// forces serial); results must be written into preallocated slots indexed by
// the case number so output never depends on scheduling.

#pragma once

#include <cstddef>
#include <functional>

namespace schubert {

int configured_threads();

// runs fn(0..n-1), possibly concurrently; rethrows the first worker exception
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace schubert
