#pragma once

#include <cstddef>
#include <functional>

namespace gkm {

// Worker count used by the library; results never depend on it.
void set_threads(int n);
int threads();

// Runs body(i) for i in [0, n). Each index writes only its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gkm
