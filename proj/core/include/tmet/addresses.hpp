#pragma once

#include <string>

#include "tmet/nets.hpp"

namespace tmet {

// Compatible chain through the level grids. The chain is determined by its
// deepest tuple: level i reads off the first i entries.
struct Address {
  IndexTuple levels;  // (a_1, ..., a_L), 1-based entries

  int depth() const { return static_cast<int>(levels.size()); }
  IndexTuple prefix(int i) const;

  std::string text() const { return tuple_text(levels); }  // "a1.a2...."
  static Address parse(const std::string& text);

  auto operator<=>(const Address&) const = default;
};

struct Resolution {
  int point;
  // 0 when the point is pinned exactly (hierarchy at stability and the
  // chain reaches full depth); otherwise the deepest level radius, within
  // which the chain locates its target.
  double error_radius;
};

// Deepest-level center of the chain. Throws on out-of-range entries.
Resolution resolve(const NetHierarchy& H, const Address& alpha);

// Lexicographically smallest chain whose level-i center stays within eps_i
// of the point at every level. Round-trips through resolve exactly when the
// hierarchy is at stability.
Address address_of(const NetHierarchy& H, int point);

// Lazy lexicographic enumeration of the full depth-L tuple grid.
class AddressGrid {
 public:
  explicit AddressGrid(const LevelPlan& plan) : sizes_(plan.sizes) {}
  explicit AddressGrid(std::vector<int> sizes) : sizes_(std::move(sizes)) {}

  long long count() const;

  class iterator {
   public:
    iterator() = default;
    iterator(const std::vector<int>* sizes, bool end);
    const IndexTuple& operator*() const { return current_; }
    iterator& operator++();
    bool operator!=(const iterator& other) const { return done_ != other.done_; }

   private:
    const std::vector<int>* sizes_ = nullptr;
    IndexTuple current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(&sizes_, false); }
  iterator end() const { return iterator(&sizes_, true); }

 private:
  std::vector<int> sizes_;
};

}  // namespace tmet
