#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thrc/int_types.hpp"

namespace thrc {

// Size / fan-in / weight statistics and provenance attached to every
// transformation output. `extras` carries the per-pass parameters the
// bound checker re-asserts (block counts, prime bounds, ...).
struct PassReport {
  std::string lemma_name;
  Int input_size = 0;
  Int output_size = 0;
  Int top_fanin = 0;
  Int max_abs_weight = 0;
  std::optional<Rat> epsilon;
  std::optional<uint64_t> seed;
  std::vector<uint64_t> prime_list;
  std::map<std::string, std::string> extras;
};

}  // namespace thrc
