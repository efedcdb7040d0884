#pragma once

// Size-then-lexicographic enumeration of index subsets and a batched,
// order-preserving parallel map over them. Not installed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

namespace epw::detail {

/// Sum of C(m, i) for i = 0..d, saturating at UINT64_MAX.
inline std::uint64_t subsets_up_to(std::size_t m, std::size_t d) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(m, i)
  for (std::size_t i = 0; i <= std::min(d, m); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - c) return std::numeric_limits<std::uint64_t>::max();
    total += c;
    // C(m, i+1) = C(m, i) * (m - i) / (i + 1), computed without overflow where possible
    const std::uint64_t num = m - i;
    if (c > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(num, 1)) {
      if (i + 1 <= std::min(d, m)) return std::numeric_limits<std::uint64_t>::max();
      break;
    }
    c = c * num / (i + 1);
  }
  return total;
}

/// Walks subsets of {0..m-1} with at most `max_size` elements: first by
/// size, then lexicographically.
class SubsetCursor {
 public:
  SubsetCursor(std::size_t m, std::size_t max_size) : m_(m), max_size_(std::min(max_size, m)) {}

  /// Fills `out` with the next subset; false once everything was produced.
  bool next(std::vector<int>& out) {
    if (done_) return false;
    out = current_;
    advance();
    return true;
  }

 private:
  void advance() {
    const std::size_t k = current_.size();
    // rightmost position that can still move right
    for (std::size_t i = k; i-- > 0;) {
      if (static_cast<std::size_t>(current_[i]) < m_ - k + i) {
        ++current_[i];
        for (std::size_t j = i + 1; j < k; ++j) current_[j] = current_[j - 1] + 1;
        return;
      }
    }
    if (k + 1 > max_size_) {
      done_ = true;
      return;
    }
    current_.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) current_[j] = static_cast<int>(j);
  }

  std::size_t m_;
  std::size_t max_size_;
  std::vector<int> current_;
  bool done_ = false;
};

/// Applies `eval` to every item using up to `jobs` threads; results keep the
/// item order.
template <typename Item, typename Result, typename Eval>
std::vector<Result> parallel_map(const std::vector<Item>& items, int jobs, Eval&& eval) {
  std::vector<Result> results(items.size());
  if (jobs <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = eval(items[i]);
    return results;
  }
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < items.size(); i = cursor++) results[i] = eval(items[i]);
  };
  std::vector<std::thread> threads;
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(jobs), items.size());
  for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace epw::detail
