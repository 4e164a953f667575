// Copyright 2026 The Authors.
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

#ifndef SUBMAX_OBJECTIVES_SURROGATE_HPP_
#define SUBMAX_OBJECTIVES_SURROGATE_HPP_

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/ground_set.hpp"
#include "submax/oracle.hpp"
#include "submax/random.hpp"

namespace submax {

enum class Curvature { kSubmodular, kSupermodular };

struct CellRect {
  int x0 = 0;  // column of the left edge
  int y0 = 0;  // row of the top edge
  int width = 0;
  int height = 0;

  bool contains(int row, int col) const {
    return row >= y0 && row < y0 + height && col >= x0 && col < x0 + width;
  }
};

// A model-free stand-in for a detector scorer. A saliency field over a cell
// grid carries a planted target box; the grid is partitioned into m regions
// by a regular tiling. The score of a region set combines a clue term (how
// much in-box evidence the set contains, curvature-transformed) with a
// collaboration term (how much evidence the complement would withhold).
// Both terms live in [0, 1], the function is monotone non-decreasing, and the
// transform decides the returns regime: sqrt gives diminishing returns,
// square gives increasing returns.
class AttributionSurrogate {
 public:
  AttributionSurrogate(int grid_height, int grid_width,
                       std::vector<double> saliency,
                       std::vector<int> region_of_cell, int region_count,
                       CellRect target_box, double clue_weight,
                       double colla_weight, Curvature curvature)
      : grid_height_(grid_height),
        grid_width_(grid_width),
        saliency_(std::move(saliency)),
        region_of_cell_(std::move(region_of_cell)),
        target_box_(target_box),
        clue_weight_(clue_weight),
        colla_weight_(colla_weight),
        curvature_(curvature) {
    if (grid_height_ < 1 || grid_width_ < 1)
      throw InvalidParameter("AttributionSurrogate: empty grid");
    const std::size_t cells =
        static_cast<std::size_t>(grid_height_) * grid_width_;
    if (saliency_.size() != cells || region_of_cell_.size() != cells)
      throw InvalidParameter("AttributionSurrogate: field/grid mismatch");
    if (target_box_.width < 1 || target_box_.height < 1)
      throw InvalidParameter("AttributionSurrogate: empty target box");
    if (target_box_.x0 < 0 || target_box_.y0 < 0 ||
        target_box_.x0 + target_box_.width > grid_width_ ||
        target_box_.y0 + target_box_.height > grid_height_)
      throw InvalidParameter("AttributionSurrogate: box outside grid");
    if (clue_weight_ < 0.0 || colla_weight_ < 0.0 ||
        clue_weight_ + colla_weight_ <= 0.0)
      throw InvalidParameter("AttributionSurrogate: bad term weights");
    if (region_count < 1)
      throw InvalidParameter("AttributionSurrogate: no regions");

    in_box_mass_.assign(region_count, 0.0);
    cell_count_.assign(region_count, 0);
    for (int row = 0; row < grid_height_; ++row) {
      for (int col = 0; col < grid_width_; ++col) {
        const std::size_t cell =
            static_cast<std::size_t>(row) * grid_width_ + col;
        const int region = region_of_cell_[cell];
        if (region < 0 || region >= region_count)
          throw InvalidParameter("AttributionSurrogate: bad region id");
        ++cell_count_[region];
        if (target_box_.contains(row, col))
          in_box_mass_[region] += saliency_[cell];
      }
    }
    for (int count : cell_count_)
      if (count == 0)
        throw InvalidParameter("AttributionSurrogate: region with no cells");
    total_in_box_mass_ = 0.0;
    for (double mass : in_box_mass_) total_in_box_mass_ += mass;
    if (!(total_in_box_mass_ > 0.0))
      throw InvalidParameter("AttributionSurrogate: box carries no mass");
  }

  int size() const { return static_cast<int>(in_box_mass_.size()); }
  int grid_height() const { return grid_height_; }
  int grid_width() const { return grid_width_; }
  const CellRect& target_box() const { return target_box_; }
  Curvature curvature() const { return curvature_; }
  double clue_weight() const { return clue_weight_; }
  double colla_weight() const { return colla_weight_; }
  const std::vector<double>& saliency() const { return saliency_; }
  const std::vector<int>& region_of_cell() const { return region_of_cell_; }
  const std::vector<double>& region_in_box_mass() const {
    return in_box_mass_;
  }

  // Region cell counts double as area weights.
  GroundSet ground_set() const {
    std::vector<double> areas(cell_count_.begin(), cell_count_.end());
    return GroundSet(std::move(areas));
  }

  double operator()(std::span<const int> subset) const {
    double mass = 0.0;
    for (int r : subset) mass += in_box_mass_.at(r);
    const double fraction = mass / total_in_box_mass_;
    const double clue = curvature_ == Curvature::kSubmodular
                            ? std::sqrt(fraction)
                            : fraction * fraction;
    // Collaboration: evidence the complement would withhold if removed.
    const double colla = fraction;
    return clue_weight_ * clue + colla_weight_ * colla;
  }

  SetFunction as_function() const {
    return [copy = *this](std::span<const int> s) { return copy(s); };
  }

 private:
  int grid_height_;
  int grid_width_;
  std::vector<double> saliency_;
  std::vector<int> region_of_cell_;
  CellRect target_box_;
  double clue_weight_;
  double colla_weight_;
  Curvature curvature_;
  std::vector<double> in_box_mass_;
  std::vector<int> cell_count_;
  double total_in_box_mass_ = 0.0;
};

namespace detail {

// Tiling rows: the divisor of m closest to sqrt(m), so region blocks are as
// square as the factorization allows.
inline int tiling_rows(int m) {
  const double root = std::sqrt(static_cast<double>(m));
  int best = 1;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    if (std::abs(d - root) < std::abs(best - root)) best = d;
  }
  return best;
}

}  // namespace detail

// Deterministic surrogate instance. Saliency is pseudo-random positive noise
// with a x10 multiplier inside the target box; on top of that the in-box
// field concentrates around the box center, so a handful of regions carry
// most of the evidence while boundary regions keep small but real mass.
inline AttributionSurrogate make_surrogate(
    std::uint64_t seed, int m, int grid_height, int grid_width,
    CellRect target_box, Curvature curvature, double clue_weight = 0.5,
    double colla_weight = 0.5) {
  if (m < 1) throw InvalidParameter("make_surrogate: m must be >= 1");
  if (grid_height < 1 || grid_width < 1)
    throw InvalidParameter("make_surrogate: empty grid");
  if (static_cast<long long>(grid_height) * grid_width < m)
    throw InvalidParameter("make_surrogate: more regions than cells");
  if (target_box.width < 1 || target_box.height < 1)
    throw InvalidParameter("make_surrogate: empty target box");

  const int rows = detail::tiling_rows(m);
  const int cols = m / rows;
  if (rows > grid_height || cols > grid_width)
    throw InvalidParameter("make_surrogate: tiling finer than grid");

  Rng rng(splitmix64(seed) ^ 0x73757272ULL);
  const std::size_t cells =
      static_cast<std::size_t>(grid_height) * grid_width;
  std::vector<double> saliency(cells);
  const double cx = target_box.x0 + target_box.width / 2.0;
  const double cy = target_box.y0 + target_box.height / 2.0;
  const double sigma_x = std::max(1.0, target_box.width / 4.0);
  const double sigma_y = std::max(1.0, target_box.height / 4.0);
  for (int row = 0; row < grid_height; ++row) {
    for (int col = 0; col < grid_width; ++col) {
      const std::size_t cell =
          static_cast<std::size_t>(row) * grid_width + col;
      double value = rng.next_double(0.05, 1.05);
      if (target_box.contains(row, col)) {
        const double dx = (col + 0.5 - cx) / sigma_x;
        const double dy = (row + 0.5 - cy) / sigma_y;
        value *= 10.0 * std::exp(-0.5 * (dx * dx + dy * dy));
      }
      saliency[cell] = value;
    }
  }

  std::vector<int> region_of_cell(cells);
  for (int row = 0; row < grid_height; ++row) {
    // Block boundaries partition the grid exactly, every block non-empty.
    const int tile_row = static_cast<int>(
        (static_cast<long long>(row) * rows) / grid_height);
    for (int col = 0; col < grid_width; ++col) {
      const int tile_col = static_cast<int>(
          (static_cast<long long>(col) * cols) / grid_width);
      region_of_cell[static_cast<std::size_t>(row) * grid_width + col] =
          tile_row * cols + tile_col;
    }
  }

  return AttributionSurrogate(grid_height, grid_width, std::move(saliency),
                              std::move(region_of_cell), m, target_box,
                              clue_weight, colla_weight, curvature);
}

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_SURROGATE_HPP_
