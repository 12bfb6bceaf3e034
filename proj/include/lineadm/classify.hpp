#pragma once

// Classification of an arrangement by the minimum number k of its lines
// needed to cover all points of multiplicity >= 3.

#include <cstddef>
#include <vector>

#include "lineadm/arrangement.hpp"

namespace lineadm {

struct CkClassification {
  std::size_t k = 0;
  // Every covering line set of the minimal size, each sorted ascending,
  // listed in lexicographic order. For k = 0 this is the single empty set.
  std::vector<std::vector<std::size_t>> minimal_covers;
  // Meaningful only for k = 3: true iff some minimal cover is a
  // concurrent triple. Always false otherwise.
  bool concurrent_flag = false;
};

// True iff every multiplicity->=3 point lies on a line indexed by `subset`.
// Throws std::out_of_range on an invalid index.
bool covers(const Arrangement& arr, const std::vector<std::size_t>& subset);

// True iff the three lines share a common point.
// Throws std::out_of_range / std::invalid_argument on bad input.
bool concurrent(const Arrangement& arr, const std::vector<std::size_t>& triple);

CkClassification classify(const Arrangement& arr);

}  // namespace lineadm
