#pragma once

#include <cstdint>

namespace squares {

// Dense vertex index into the owning graph, 0 <= id < n.
using VertexId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;

}  // namespace squares
