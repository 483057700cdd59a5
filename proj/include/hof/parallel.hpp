#ifndef HOF_PARALLEL_HPP
#define HOF_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hof {

// Runs fn(i) for i in [0, count) on `threads` workers. Each index writes its
// own result slot, so output is identical for any thread count.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace hof

#endif
