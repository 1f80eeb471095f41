#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fuzzbet/errors.hpp"

namespace fuzzbet {

// Symmetric kernel over a labeled index set.
class KernelMatrix {
public:
  KernelMatrix(std::vector<std::string> labels, Eigen::MatrixXd entries);
  KernelMatrix(std::vector<std::string> labels,
               const std::vector<std::vector<double>>& entries);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t index_of(std::string_view label) const;  // throws unknown_label
  double at(std::size_t i, std::size_t j) const { return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }

private:
  std::vector<std::string> labels_;
  Eigen::MatrixXd entries_;
};

// Smallest eigenvalue >= -tol.
bool check_psd(const KernelMatrix& k, double tol = 1e-9);

// Induced distance sqrt(K(i,i) + K(j,j) - 2K(i,j)); requires a PSD kernel,
// and throws when the radicand is significantly negative.
double kernel_metric(const KernelMatrix& k, std::string_view i, std::string_view j);

}  // namespace fuzzbet
