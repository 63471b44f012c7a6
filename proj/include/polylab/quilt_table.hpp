#pragma once

namespace polylab::detail {

extern const int kTableDepth;
extern const unsigned kTableQuilt[1024];

}  // namespace polylab::detail
