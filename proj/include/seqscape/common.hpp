#pragma once
// Shared aliases, error taxonomy and small utilities.

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqscape {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;  // column-major
// Sample tables are stored row-per-voxel; row-major keeps per-row access contiguous.
using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

// Error taxonomy. The CLI maps these onto exit codes:
//   usage errors (bad flags)        -> 2
//   config_error / parse_error      -> 3 (validation)
//   io_error / numeric_error        -> 1 (runtime)
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct input_error : config_error {
    explicit input_error(const std::string& msg) : config_error(msg) {}
};
struct parse_error : config_error {
    explicit parse_error(const std::string& msg) : config_error(msg) {}
};
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// FNV-1a 64-bit content digests (manifests, checkpoint/report digests).
std::uint64_t fnv1a64(const void* data, std::size_t n);
std::uint64_t fnv1a64(const std::string& s);
std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t v);

// SplitMix64 step; used to derive independent stream seeds from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Type-7 (linear interpolation) quantile of an already sorted vector, q in [0,1].
double sorted_quantile(const std::vector<double>& sorted, double q);

}  // namespace seqscape
