#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "folty/types.hpp"

namespace folty {

/// For each entry of a source list, an index into a target list. The sentinel for
/// "no such entry" is the target list's length, so `entry == target.size()` reads as NONE.
using IndexList = std::vector<std::uint32_t>;

/// entries[i] = first j with target[j] >= source[i]. One merged forward pass,
/// O(|source| + |target|). Both lists sorted non-decreasing.
IndexList find_exceeding_entry_ls(std::span<const Timestamp> source,
                                  std::span<const Timestamp> target);

/// Same contract as find_exceeding_entry_ls, one binary search per source entry:
/// O(|source| log |target|).
IndexList find_exceeding_entry_bs(std::span<const Timestamp> source,
                                  std::span<const Timestamp> target);

/// entries[i] = last j with target[j] <= source[i] + window, or NONE when even target[0]
/// exceeds the bound. Two-pointer pass; window >= 0.
IndexList find_bounding_entry(std::span<const Timestamp> source, std::span<const Timestamp> target,
                              Duration window);

/// Variants that write into a caller-owned buffer (resized to |source|), for hot loops.
void find_exceeding_entry_ls(std::span<const Timestamp> source, std::span<const Timestamp> target,
                             IndexList& out);
void find_exceeding_entry_bs(std::span<const Timestamp> source, std::span<const Timestamp> target,
                             IndexList& out);
void find_bounding_entry(std::span<const Timestamp> source, std::span<const Timestamp> target,
                         Duration window, IndexList& out);

}  // namespace folty
