#include "fuzzbet/kernel.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include <Eigen/Eigenvalues>

namespace fuzzbet {

KernelMatrix::KernelMatrix(std::vector<std::string> labels, Eigen::MatrixXd entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (n == 0) throw Error(errc::input, "kernel: empty label list");
  if (entries_.rows() != n || entries_.cols() != n) {
    throw Error(errc::input, "kernel: entries must form a " + std::to_string(labels_.size()) +
                                 "x" + std::to_string(labels_.size()) + " matrix");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty() || !seen.insert(label).second) {
      throw Error(errc::input, "kernel: labels must be unique and non-empty");
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(entries_(i, j))) {
        throw Error(errc::input, "kernel: non-finite entry at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
      }
      if (entries_(i, j) != entries_(j, i)) {
        throw Error(errc::input, "kernel: asymmetric entries at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
      }
    }
  }
}

KernelMatrix::KernelMatrix(std::vector<std::string> labels,
                           const std::vector<std::vector<double>>& entries)
    : KernelMatrix(std::move(labels), [&] {
        Eigen::MatrixXd m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
          if (entries[i].size() != entries.size()) {
            throw Error(errc::input, "kernel: row " + std::to_string(i) +
                                         " has wrong length (matrix must be square)");
          }
          for (std::size_t j = 0; j < entries[i].size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[i][j];
          }
        }
        return m;
      }()) {}

std::size_t KernelMatrix::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw Error(errc::unknown_label, "kernel: unknown label '" + std::string(label) + "'");
}

bool check_psd(const KernelMatrix& k, double tol) {
  if (!(tol >= 0.0)) throw Error(errc::domain, "check_psd: tolerance must be >= 0");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k.entries(),
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

double kernel_metric(const KernelMatrix& k, std::string_view i, std::string_view j) {
  const auto a = k.index_of(i);
  const auto b = k.index_of(j);
  const double radicand = k.at(a, a) + k.at(b, b) - 2.0 * k.at(a, b);
  const double scale = std::max({1.0, std::abs(k.at(a, a)), std::abs(k.at(b, b))});
  if (radicand < -1e-9 * scale) {
    throw Error(errc::domain,
                "kernel_metric: negative squared distance; kernel is not positive semidefinite");
  }
  return std::sqrt(std::max(0.0, radicand));
}

}  // namespace fuzzbet
