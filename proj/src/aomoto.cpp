#include "lineadm/aomoto.hpp"

#include <stdexcept>
#include <utility>

#include "lineadm/errors.hpp"

namespace lineadm {

std::size_t OSDegree2Basis::point_of_pair(std::size_t u, std::size_t v) const {
  if (u >= pair_point_.size() || v >= pair_point_.size()) {
    throw std::out_of_range("line index out of range");
  }
  return pair_point_[u][v];
}

std::size_t OSDegree2Basis::element_index(std::size_t point, std::size_t line) const {
  if (point >= elem_lookup_.size()) throw std::out_of_range("point index out of range");
  for (std::size_t id : elem_lookup_[point]) {
    if (elements_[id].line == line) return id;
  }
  throw std::invalid_argument("no basis element for that point and line");
}

OSDegree2Basis os_degree2_basis(const Arrangement& arr, std::size_t base) {
  AffineArrangement aff = decone(arr, base);
  OSDegree2Basis b;
  b.base_ = base;
  b.points_ = std::move(aff.affine_points);
  b.pair_point_.assign(arr.size(), std::vector<std::size_t>(arr.size(), OSDegree2Basis::npos));
  b.elem_lookup_.assign(b.points_.size(), {});
  for (std::size_t pi = 0; pi < b.points_.size(); ++pi) {
    const IncidencePoint& ip = b.points_[pi];
    for (std::size_t a = 0; a < ip.incident.size(); ++a) {
      for (std::size_t c = a + 1; c < ip.incident.size(); ++c) {
        b.pair_point_[ip.incident[a]][ip.incident[c]] = pi;
        b.pair_point_[ip.incident[c]][ip.incident[a]] = pi;
      }
    }
    // one element per non-minimal line through the point
    for (std::size_t a = 1; a < ip.incident.size(); ++a) {
      b.elem_lookup_[pi].push_back(b.elements_.size());
      b.elements_.push_back(OSDegree2Basis::Element{pi, ip.incident[a]});
    }
  }
  return b;
}

std::vector<std::pair<std::size_t, int>> reduce_product(const OSDegree2Basis& basis,
                                                        std::size_t i, std::size_t j) {
  if (i == basis.base() || j == basis.base()) {
    throw std::invalid_argument("base line is not part of the affine model");
  }
  if (i == j) throw std::invalid_argument("product requires distinct lines");
  int sign = 1;
  std::size_t u = i;
  std::size_t v = j;
  if (u > v) {
    std::swap(u, v);
    sign = -1;
  }
  const std::size_t p = basis.point_of_pair(u, v);
  if (p == OSDegree2Basis::npos) return {};  // parallel pair
  const std::vector<std::size_t>& through = basis.points()[p].incident;
  if (u == through.front()) {
    return {{basis.element_index(p, v), sign}};
  }
  return {{basis.element_index(p, v), sign}, {basis.element_index(p, u), -sign}};
}

std::array<std::size_t, 3> betti(const Arrangement& arr, std::size_t base) {
  if (arr.size() < 2) throw std::invalid_argument("betti needs at least 2 lines");
  const OSDegree2Basis basis = os_degree2_basis(arr, base);
  return {1, arr.size() - 1, basis.dim()};
}

std::array<std::size_t, 3> betti(const Arrangement& arr) {
  return betti(arr, arr.infinity_line().value_or(0));
}

ExactMatrix aomoto_d1(const OSDegree2Basis& basis, const Arrangement& arr,
                      const ResidueVector& alpha) {
  const std::size_t base = basis.base();
  std::vector<std::size_t> cols;  // non-base lines, ascending
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (j != base) cols.push_back(j);
  }
  ExactMatrix m(basis.dim(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::size_t i = cols[c];
    for (std::size_t j : cols) {
      if (j == i || alpha[j].is_zero()) continue;
      for (const auto& [elem, sign] : reduce_product(basis, j, i)) {
        QComplex term = alpha[j];
        if (sign < 0) term = -term;
        m.at(elem, c) += term;
      }
    }
  }
  return m;
}

AomotoResult aomoto_dims(const Arrangement& arr, const ResidueVector& alpha, std::size_t base) {
  if (alpha.size() != arr.size()) throw std::invalid_argument("size mismatch");
  if (base >= arr.size()) throw std::out_of_range("invalid base index");
  const OSDegree2Basis basis = os_degree2_basis(arr, base);

  bool omega_nonzero = false;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (j != base && !alpha[j].is_zero()) {
      omega_nonzero = true;
      break;
    }
  }

  AomotoResult r;
  r.dim_a2 = basis.dim();
  r.rank_d0 = omega_nonzero ? 1 : 0;
  r.rank_d1 = rank(aomoto_d1(basis, arr, alpha));
  const std::size_t n_affine = arr.size() - 1;
  if (r.rank_d1 + r.rank_d0 > n_affine) {
    throw internal_error("differential ranks exceed the cochain dimension");
  }
  r.h0 = 1 - r.rank_d0;
  r.h1 = n_affine - r.rank_d1 - r.rank_d0;
  r.h2 = r.dim_a2 - r.rank_d1;
  return r;
}

}  // namespace lineadm
