#include "teichlab/metric/space.hpp"

#include <cmath>
#include <limits>

namespace teichlab::metric {

TableSpace::TableSpace(std::vector<std::string> ids,
                       std::vector<double> dist_row_major,
                       const std::string& base_id)
    : n_(ids.size()), ids_(std::move(ids)), dist_(std::move(dist_row_major)) {
  if (n_ == 0) throw input_error("space has no points");
  if (dist_.size() != n_ * n_)
    throw input_error("distance table size does not match point count");
  for (std::size_t i = 0; i < n_; ++i) {
    if (!index_.emplace(ids_[i], static_cast<Point>(i)).second)
      throw input_error("duplicate point id: " + ids_[i]);
  }
  auto it = index_.find(base_id);
  if (it == index_.end()) throw input_error("base point not in space: " + base_id);
  base_ = it->second;

  for (std::size_t i = 0; i < n_; ++i) {
    if (dist_[i * n_ + i] != 0.0)
      throw input_error("nonzero diagonal at " + ids_[i]);
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = dist_[i * n_ + j];
      if (!std::isfinite(d) || d < 0.0)
        throw input_error("invalid distance between " + ids_[i] + " and " + ids_[j]);
      if (d != dist_[j * n_ + i])
        throw input_error("asymmetric distance between " + ids_[i] + " and " + ids_[j]);
    }
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (dist_[i * n_ + k] > dist_[i * n_ + j] + dist_[j * n_ + k] + kTriangleTol)
          throw input_error("triangle inequality violated at (" + ids_[i] + "," +
                            ids_[j] + "," + ids_[k] + ")");
}

TableSpace::Point TableSpace::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw input_error("unknown point id: " + id);
  return it->second;
}

TableSpace TableSpace::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw input_error("scale factor must be positive");
  std::vector<double> d(dist_);
  for (double& x : d) x *= lambda;
  return TableSpace(ids_, std::move(d), ids_[base_]);
}

}  // namespace teichlab::metric
