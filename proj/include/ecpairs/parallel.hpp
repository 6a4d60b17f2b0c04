#pragma once

#include <cstddef>
#include <functional>

namespace ecpairs {

/// Runs body(i) for every i in [0, n) on up to `threads` workers.  Blocks
/// are claimed dynamically; callers that need determinism write into
/// slot i and merge in index order afterwards.  threads == 0 means one.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace ecpairs
