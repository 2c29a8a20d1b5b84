#pragma once

namespace corelat {

enum class Exec { Serial, Parallel };

// Worker count for parallel kernels: CORELAT_THREADS when set to a positive integer,
// otherwise the OpenMP default.
int worker_count();

}  // namespace corelat
