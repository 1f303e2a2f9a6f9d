#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <tbb/parallel_for.h>

namespace heatdens {

/// Half-open index range [begin, end) handed to one chunk.
struct Chunk {
  std::size_t index;
  std::size_t begin;
  std::size_t end;
};

/// Splits [0, count) into a fixed number of chunks that depends only on
/// `count` and `chunk_size`, never on the thread count. Callers write into
/// per-chunk slots and reduce in chunk order, so results are seed-stable.
inline std::vector<Chunk> make_chunks(std::size_t count, std::size_t chunk_size) {
  std::vector<Chunk> chunks;
  chunk_size = std::max<std::size_t>(chunk_size, 1);
  for (std::size_t b = 0, i = 0; b < count; b += chunk_size, ++i)
    chunks.push_back({i, b, std::min(count, b + chunk_size)});
  return chunks;
}

template <class Fn>
void parallel_for_chunks(const std::vector<Chunk>& chunks, Fn&& fn) {
  tbb::parallel_for(std::size_t{0}, chunks.size(), [&](std::size_t i) { fn(chunks[i]); });
}

template <class Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
  tbb::parallel_for(std::size_t{0}, count, [&](std::size_t i) { fn(i); });
}

}  // namespace heatdens
