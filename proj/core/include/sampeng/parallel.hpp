#pragma once

#include <cstddef>

namespace sampeng {

/// Threads used by row-parallel loops (hop powers, embeddings, matching).
/// 0 restores the runtime default. Without OpenMP everything runs serially.
void set_default_threads(std::size_t threads);
std::size_t default_threads();

}  // namespace sampeng
