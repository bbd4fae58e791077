#include "cobalg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cobalg/error.hpp"

namespace cobalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  for (int p : parts_) {
    if (p < 1) throw Error("partition parts must be positive");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text == "0") return Partition();
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    int value = 0;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
      value = value * 10 + (text[j] - '0');
      ++j;
    }
    if (j == i || value < 1) throw ParseError("bad partition '" + std::string(text) + "'");
    parts.push_back(value);
    if (j < text.size()) {
      if (text[j] != '+') throw ParseError("bad partition '" + std::string(text) + "'");
      ++j;
    }
    i = j;
  }
  if (parts.empty()) throw ParseError("bad partition '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

namespace {

void extend(std::vector<Partition>& out, std::vector<int>& stack, int remaining, int max_part) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    extend(out, stack, remaining - part, part);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw Error("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> stack;
  extend(out, stack, d, d == 0 ? 1 : d);
  return out;
}

}  // namespace cobalg
