#include "folty/scan.hpp"

#include <algorithm>

namespace folty {

void find_exceeding_entry_ls(std::span<const Timestamp> source, std::span<const Timestamp> target,
                             IndexList& out) {
  out.resize(source.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    while (j < target.size() && target[j] < source[i]) ++j;
    out[i] = static_cast<std::uint32_t>(j);
  }
}

void find_exceeding_entry_bs(std::span<const Timestamp> source, std::span<const Timestamp> target,
                             IndexList& out) {
  out.resize(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(
        std::lower_bound(target.begin(), target.end(), source[i]) - target.begin());
  }
}

void find_bounding_entry(std::span<const Timestamp> source, std::span<const Timestamp> target,
                         Duration window, IndexList& out) {
  const auto none = static_cast<std::uint32_t>(target.size());
  out.resize(source.size());
  // j counts the target entries at or below the current bound source[i] + window.
  std::size_t j = 0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    while (j < target.size() &&
           (target[j] <= source[i] || within_window(source[i], target[j], window)))
      ++j;
    out[i] = j == 0 ? none : static_cast<std::uint32_t>(j - 1);
  }
}

IndexList find_exceeding_entry_ls(std::span<const Timestamp> source,
                                  std::span<const Timestamp> target) {
  IndexList out;
  find_exceeding_entry_ls(source, target, out);
  return out;
}

IndexList find_exceeding_entry_bs(std::span<const Timestamp> source,
                                  std::span<const Timestamp> target) {
  IndexList out;
  find_exceeding_entry_bs(source, target, out);
  return out;
}

IndexList find_bounding_entry(std::span<const Timestamp> source, std::span<const Timestamp> target,
                              Duration window) {
  IndexList out;
  find_bounding_entry(source, target, window, out);
  return out;
}

}  // namespace folty
