// Copyright (c) 2026 EcoPlan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecoplan/open_list.hpp"

#include <stdexcept>
#include <utility>

namespace ecoplan
{

bool OpenList::before(const Entry & a, const Entry & b)
{
  if (a.f != b.f) {
    return a.f < b.f;
  }
  if (a.g != b.g) {
    return a.g > b.g;
  }
  if (a.node.vidx != b.node.vidx) {
    return a.node.vidx < b.node.vidx;
  }
  return a.node.stage < b.node.stage;
}

void OpenList::place(std::size_t i)
{
  position_[heap_[i].node] = i;
}

void OpenList::sift_up(std::size_t i)
{
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!before(heap_[i], heap_[parent])) {
      break;
    }
    std::swap(heap_[i], heap_[parent]);
    place(i);
    place(parent);
    i = parent;
  }
}

void OpenList::sift_down(std::size_t i)
{
  const std::size_t n = heap_.size();
  while (true) {
    std::size_t best = i;
    const std::size_t left = 2 * i + 1;
    const std::size_t right = 2 * i + 2;
    if (left < n && before(heap_[left], heap_[best])) {
      best = left;
    }
    if (right < n && before(heap_[right], heap_[best])) {
      best = right;
    }
    if (best == i) {
      break;
    }
    std::swap(heap_[i], heap_[best]);
    place(i);
    place(best);
    i = best;
  }
}

void OpenList::push_or_update(NodeId n, double f, double g)
{
  const auto it = position_.find(n);
  if (it == position_.end()) {
    heap_.push_back({n, f, g});
    const std::size_t i = heap_.size() - 1;
    place(i);
    sift_up(i);
    return;
  }
  const std::size_t i = it->second;
  heap_[i].f = f;
  heap_[i].g = g;
  sift_up(i);
  sift_down(i);
}

OpenList::Entry OpenList::pop_min()
{
  if (heap_.empty()) {
    throw std::logic_error("OpenList::pop_min on empty list");
  }
  Entry top = heap_.front();
  position_.erase(top.node);
  if (heap_.size() > 1) {
    heap_.front() = heap_.back();
    heap_.pop_back();
    place(0);
    sift_down(0);
  } else {
    heap_.pop_back();
  }
  return top;
}

}  // namespace ecoplan
