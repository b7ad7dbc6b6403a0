#pragma once

namespace puviz {

// Worker count for the OpenMP kernels. PUVIZ_THREADS caps it; 0 or unset
// means all hardware threads. Kernels are written so the output is
// bit-identical for every worker count.
int worker_count();

} // namespace puviz
