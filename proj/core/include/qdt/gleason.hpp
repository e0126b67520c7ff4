// Copyright 2026 The qdt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file gleason.hpp
 * Frame functions on rank-one projectors, density-operator reconstruction
 * by linear least squares, and a randomized contextuality detector.
 *
 * A frame function assigns a value to each unit vector (standing for its
 * projector). A contextual assignment may additionally depend on which
 * orthonormal basis the vector is measured in. The detector searches for a
 * vector whose value changes between two bases that contain it.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdt/hilbert.hpp"
#include "qdt/random.hpp"

namespace qdt {

inline constexpr double kDensityHermitianTolerance = 1e-10;
inline constexpr double kDensityTraceTolerance = 1e-9;
inline constexpr double kDensityPsdTolerance = 1e-8;
inline constexpr double kWitnessTolerance = 1e-6;

class FrameFunction {
  public:
    using Evaluator = std::function<double(const StateVector &)>;

    FrameFunction(std::size_t dim, Evaluator evaluate);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    /// Throws DimensionMismatch for a vector of the wrong dimension.
    [[nodiscard]] double operator()(const StateVector &psi) const;

  private:
    std::size_t dim_;
    Evaluator evaluate_;
};

class ContextualAssignment {
  public:
    using Evaluator = std::function<double(const OrthonormalBasis &, std::size_t)>;

    ContextualAssignment(std::size_t dim, Evaluator evaluate);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double operator()(const OrthonormalBasis &basis, std::size_t index) const;

  private:
    std::size_t dim_;
    Evaluator evaluate_;
};

/// Hermitian, trace-one, positive-semidefinite matrix. Fits are returned
/// through unchecked() so that a non-physical result stays observable; use
/// verify_density_operator() on those.
class DensityOperator {
  public:
    /// Throws InvariantViolation naming the first violated invariant
    /// (Hermitian within 1e-10, trace 1 within 1e-9, min eigenvalue >= -1e-8).
    [[nodiscard]] static DensityOperator validated(CMatrix matrix);
    /// Only requires a square matrix.
    [[nodiscard]] static DensityOperator unchecked(CMatrix matrix);

    [[nodiscard]] static DensityOperator maximally_mixed(std::size_t dim);
    [[nodiscard]] static DensityOperator pure(const StateVector &psi);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }

  private:
    explicit DensityOperator(CMatrix matrix) : matrix_(std::move(matrix)) {}

    CMatrix matrix_;
};

/// G G^dagger / tr(G G^dagger) with G a dim x rank complex Ginibre matrix.
/// rank = 0 means full rank.
[[nodiscard]] DensityOperator random_density_operator(std::size_t dim, Rng &rng,
                                                      std::size_t rank = 0);

/// f(psi) = <psi|rho|psi>
[[nodiscard]] FrameFunction born_frame_function(const DensityOperator &rho);

/// | sum_k f(psi_k) - 1 |
[[nodiscard]] double check_basis_normalization(const FrameFunction &f,
                                               const OrthonormalBasis &basis);

/// Context-free assignment a(B, k) = f(B[k]).
[[nodiscard]] ContextualAssignment assignment_from_frame_function(FrameFunction f);

/// Drops the context: f(psi) = a(B(psi), 0) where B(psi) completes psi with
/// the computational basis vectors in order.
[[nodiscard]] FrameFunction flatten_assignment(ContextualAssignment a);

/// a(B, k) = 1/|S| for k in S = { k : |<psi_k|chi>| > epsilon }, else 0.
[[nodiscard]] ContextualAssignment uniform_support_assignment(const StateVector &chi,
                                                              double epsilon = 1e-9);

/// The d^2 states e_k, (e_j + e_k)/sqrt2, (e_j + i e_k)/sqrt2 for j < k.
[[nodiscard]] std::vector<StateVector> fiducial_states(std::size_t dim);

struct FitOptions {
    /// Haar-random probe states; must be at least dim^2.
    std::size_t num_probes = 0;
    /// Also probe the fiducial_states() set. Contextual rules typically
    /// agree with a density operator on Haar-generic vectors and deviate
    /// only on structured ones.
    bool include_fiducials = false;
    /// Resampling budget when the probe design is rank deficient.
    std::size_t max_attempts = 4;
};

struct FitResult {
    DensityOperator rho;
    /// Root-mean-square of f(psi_i) - <psi_i|rho|psi_i> over all probes.
    double fit_residual;
    std::size_t probes_used;
    std::size_t attempts;
    std::vector<std::string> warnings;
};

/// Solves tr(rho P_i) = f(psi_i) by least squares over Hermitian matrices
/// with unit trace: rho is parametrized by d^2 - 1 real coordinates (d - 1
/// diagonal entries plus real and imaginary parts above the diagonal, the
/// last diagonal entry eliminated by the trace). Positivity is not imposed.
[[nodiscard]] FitResult fit_density_operator(const FrameFunction &f,
                                             const FitOptions &options, Rng &rng);

struct DensityVerification {
    double hermiticity_error = 0.0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
    double tolerance = 0.0;

    [[nodiscard]] bool hermitian() const noexcept { return hermiticity_error <= tolerance; }
    [[nodiscard]] bool unit_trace() const noexcept { return trace_error <= tolerance; }
    [[nodiscard]] bool positive() const noexcept { return min_eigenvalue >= -tolerance; }
    [[nodiscard]] bool passed() const noexcept {
        return hermitian() && unit_trace() && positive();
    }
};

[[nodiscard]] DensityVerification verify_density_operator(const CMatrix &matrix, double tol);
[[nodiscard]] DensityVerification verify_density_operator(const DensityOperator &rho,
                                                          double tol);

/// Half the sum of absolute eigenvalues of the Hermitian part of (a - b).
[[nodiscard]] double trace_distance(const CMatrix &a, const CMatrix &b);

struct ContextualityWitness {
    StateVector psi;
    OrthonormalBasis first;
    std::size_t first_index;
    OrthonormalBasis second;
    std::size_t second_index;
    double first_value;
    double second_value;
    double gap;
    std::size_t trial;
};

struct ContextualityResult {
    std::optional<ContextualityWitness> witness;
    std::size_t trials_run = 0;
    std::vector<std::string> warnings;
};

/// |a(first, i) - a(second, j)|; requires first[i] and second[j] to be the
/// same ray.
[[nodiscard]] double witness_gap(const ContextualAssignment &a,
                                 const OrthonormalBasis &first, std::size_t first_index,
                                 const OrthonormalBasis &second, std::size_t second_index);

/// Randomized search. Trial t draws from derive_seed(seed, t) a vector psi
/// (computational basis vectors first, then alternately sparse and Haar
/// vectors) and compares a on two completions of psi: one with the
/// computational basis, one with Gaussian vectors. Returns the first
/// witness whose gap exceeds `tol`.
[[nodiscard]] ContextualityResult detect_contextuality(const ContextualAssignment &a,
                                                       std::size_t trials,
                                                       std::uint64_t seed,
                                                       double tol = kWitnessTolerance);

} // namespace qdt
