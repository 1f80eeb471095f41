#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fuzzbet::cli {

struct GlobalOpts {
  std::string workspace;
  std::string format = "json";
  std::uint64_t seed = 1;
  double tol = 1e-12;
};

struct DistOpts {
  std::string metric;
  std::string lhs;
  std::string rhs;
  std::string eta = "lebesgue";
  std::string measure;
  std::string kernel;
};

struct BetweenOpts {
  std::string mode;
  std::string a;
  std::string b;
  std::string c;
  std::string eta = "lebesgue";
  std::string measure;
  bool witness = false;
  bool gap = false;
};

struct CutOpts {
  std::string name;
  std::optional<double> alpha;
  std::optional<double> alpha1;
  std::optional<double> alpha2;
};

struct ShowOpts {
  std::string name;
};

struct CheckCmdOpts {
  std::string suite = "all";
  int exhaustive = 4;
  int grid = 5;
  std::optional<long> trials;
};

int run_dist(const GlobalOpts& g, const DistOpts& o);
int run_between(const GlobalOpts& g, const BetweenOpts& o);
int run_cut(const GlobalOpts& g, const CutOpts& o);
int run_show(const GlobalOpts& g, const ShowOpts& o);
int run_check(const GlobalOpts& g, const CheckCmdOpts& o);

}  // namespace fuzzbet::cli
