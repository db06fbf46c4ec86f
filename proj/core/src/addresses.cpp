#include "tmet/addresses.hpp"

#include <stdexcept>

namespace tmet {

IndexTuple Address::prefix(int i) const {
  if (i < 1 || i > depth()) throw std::out_of_range("prefix depth");
  return IndexTuple(levels.begin(), levels.begin() + i);
}

Address Address::parse(const std::string& text) {
  Address a;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t dot = text.find('.', pos);
    if (dot == std::string::npos) dot = text.size();
    const int entry = std::stoi(text.substr(pos, dot - pos));
    if (entry < 1) throw std::invalid_argument("address entries are 1-based");
    a.levels.push_back(entry);
    pos = dot + 1;
  }
  if (a.levels.empty()) throw std::invalid_argument("empty address");
  return a;
}

Resolution resolve(const NetHierarchy& H, const Address& alpha) {
  const int point = H.center(alpha.levels);  // validates entries
  const bool exact = H.at_stability && alpha.depth() == H.plan.depth;
  return {point, exact ? 0.0 : level_radius(alpha.depth())};
}

Address address_of(const NetHierarchy& H, int point) {
  if (H.plan.depth == 0) throw std::invalid_argument("hierarchy has no levels");
  if (point < 0 || point >= H.host->size())
    throw std::out_of_range("point index");
  const auto& X = *H.host;

  Address a;
  int current = -1;
  for (int k = 0; k < H.plan.sizes[0]; ++k) {
    if (X.dist[H.roots[k]][point] <= level_radius(1)) {
      a.levels.push_back(k + 1);
      current = H.roots[k];
      break;
    }
  }
  if (current < 0) throw std::runtime_error("point not covered at level 1");

  for (int i = 2; i <= H.plan.depth; ++i) {
    const auto& slots = H.child_slots(i - 1, current);
    int pick = -1;
    for (int k = 0; k < static_cast<int>(slots.size()); ++k) {
      if (X.dist[slots[k]][point] <= level_radius(i)) { pick = k; break; }
    }
    if (pick < 0)
      throw std::runtime_error("refinement gap at level " + std::to_string(i));
    a.levels.push_back(pick + 1);
    current = slots[pick];
  }
  return a;
}

long long AddressGrid::count() const {
  if (sizes_.empty()) return 0;
  long long count = 1;
  for (int s : sizes_) {
    count *= s;
    if (count > (1LL << 50)) throw std::runtime_error("tuple grid overflow");
  }
  return count;
}

AddressGrid::iterator::iterator(const std::vector<int>* sizes, bool end)
    : sizes_(sizes), done_(end) {
  if (!done_) {
    current_.assign(sizes_->size(), 1);
    if (sizes_->empty()) done_ = true;  // depth 0: nothing to enumerate
  }
}

AddressGrid::iterator& AddressGrid::iterator::operator++() {
  for (int i = static_cast<int>(current_.size()) - 1; i >= 0; --i) {
    if (current_[i] < (*sizes_)[i]) {
      ++current_[i];
      return *this;
    }
    current_[i] = 1;
  }
  done_ = true;
  return *this;
}

}  // namespace tmet
