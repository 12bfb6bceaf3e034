#include "lineadm/classify.hpp"

#include <stdexcept>

namespace lineadm {

namespace {

bool covers_points(const Arrangement& arr, const std::vector<MultiplePoint>& pts,
                   const std::vector<std::size_t>& subset) {
  for (const MultiplePoint& p : pts) {
    if (!arr.point_covered(p, subset)) return false;
  }
  return true;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Appends, in lexicographic order, every size-k subset of {0..n-1} that
// covers all multiple points.
void collect_covers(const Arrangement& arr, const std::vector<MultiplePoint>& pts,
                    std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = arr.size();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    if (covers_points(arr, pts, idx)) out.push_back(idx);
  } while (next_combination(idx, n));
}

}  // namespace

bool covers(const Arrangement& arr, const std::vector<std::size_t>& subset) {
  return covers_points(arr, arr.multiple_points(), subset);
}

bool concurrent(const Arrangement& arr, const std::vector<std::size_t>& triple) {
  if (triple.size() != 3) throw std::invalid_argument("concurrency check needs three lines");
  for (std::size_t j : triple) {
    if (j >= arr.size()) throw std::out_of_range("line index out of range");
  }
  ProjPoint o = intersect(arr.lines()[triple[0]], arr.lines()[triple[1]]);
  return incident(o, arr.lines()[triple[2]]);
}

CkClassification classify(const Arrangement& arr) {
  CkClassification out;
  const std::vector<MultiplePoint> pts = arr.multiple_points();
  if (pts.empty()) {
    out.k = 0;
    out.minimal_covers = {{}};
    return out;
  }
  for (std::size_t k = 1; k <= arr.size(); ++k) {
    std::vector<std::vector<std::size_t>> found;
    collect_covers(arr, pts, k, found);
    if (!found.empty()) {
      out.k = k;
      out.minimal_covers = std::move(found);
      break;
    }
  }
  if (out.k == 3) {
    for (const auto& cover : out.minimal_covers) {
      if (concurrent(arr, cover)) {
        out.concurrent_flag = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace lineadm
