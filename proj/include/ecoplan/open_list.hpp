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

#ifndef ECOPLAN_OPEN_LIST_HPP_
#define ECOPLAN_OPEN_LIST_HPP_

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "ecoplan/grid.hpp"

namespace ecoplan
{

/// Min-ordered binary heap keyed by f, with a hash table mapping each node
/// to its heap slot so membership tests and decrease-key run without
/// duplicate entries. Ties on f pop the larger g first, then the lower
/// velocity index, then the lower stage.
class OpenList
{
public:
  struct Entry
  {
    NodeId node;
    double f = 0.0;
    double g = 0.0;
  };

  bool empty() const {return heap_.empty();}
  std::size_t size() const {return heap_.size();}
  bool contains(NodeId n) const {return position_.count(n) != 0;}

  /// Inserts a new node or re-keys an existing one.
  void push_or_update(NodeId n, double f, double g);

  /// Removes and returns the minimum entry. Requires !empty().
  Entry pop_min();

  /// Heap storage in no particular order; for whole-frontier scans.
  const std::vector<Entry> & entries() const {return heap_;}

private:
  static bool before(const Entry & a, const Entry & b);
  void sift_up(std::size_t i);
  void sift_down(std::size_t i);
  void place(std::size_t i);

  std::vector<Entry> heap_;
  std::unordered_map<NodeId, std::size_t, NodeIdHash> position_;
};

}  // namespace ecoplan

#endif  // ECOPLAN_OPEN_LIST_HPP_
