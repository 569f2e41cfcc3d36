#pragma once

namespace shefferkit {

/// Kernels with a data-parallel loop come in two flavors: the OpenMP
/// version and the serial reference used to cross-check it.
enum class Execution { Serial, Parallel };

/// Worker count for Parallel kernels; 0 restores the OpenMP default.
void set_worker_count(int workers);
int worker_count();

}  // namespace shefferkit
