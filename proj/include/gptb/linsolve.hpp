#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gptb/vec.hpp"

namespace gptb {

/// Solution of A x = b when it is unique; nullopt when A is singular.
/// In real mode, pivots with |p| <= eps count as zero.
std::optional<Vec> solve_unique(const Mat& A, const Vec& b, double eps);

size_t matrix_rank(const Mat& A, double eps);

/// Rank of the set of row vectors.
size_t rank_of(const std::vector<Vec>& rows, double eps);

/* Reconstructs the unique normalization-preserving linear map T (last row
 * pinned to (0,...,0,1)) with T(source_i) = image_i for every pair. Sources
 * and images live on the slice where the last coordinate equals 1. Throws
 * AffineMapError when the sources are affinely dependent (under-determined)
 * or an over-determining pair is violated; the exception carries the index
 * of the violating pair. */
Mat solve_affine_map(const std::vector<std::pair<Vec, Vec>>& pairs, double eps);

}  // namespace gptb
