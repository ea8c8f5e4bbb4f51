#pragma once

namespace sgh {

// Caps the team size used by the OpenMP kernels. 0 restores the runtime
// default. All kernels produce identical results at any thread count.
void set_max_threads(int n);
int max_threads();

}  // namespace sgh
