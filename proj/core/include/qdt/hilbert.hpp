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
 * @file hilbert.hpp
 * Finite-dimensional complex linear algebra: unit states, Hermitian
 * operators, orthonormal bases, Haar sampling and eigendecomposition.
 *
 * Vectors and bases produced here follow a single phase convention: the
 * first component with modulus above kPhaseTolerance is real and positive.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qdt/random.hpp"

namespace qdt {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kOrthonormalTolerance = 1e-10;
inline constexpr double kRankTolerance = 1e-9;
inline constexpr double kPhaseTolerance = 1e-12;
inline constexpr double kExpectationImagTolerance = 1e-10;

/// Unit-norm amplitude vector.
class StateVector {
  public:
    /// Throws InvariantViolation unless dim >= 1 and | ||v|| - 1 | <= 1e-12.
    explicit StateVector(CVector amplitudes);

    /// Rescales `raw` to unit norm; throws DegenerateInput for a zero vector.
    [[nodiscard]] static StateVector normalized(CVector raw);
    [[nodiscard]] static StateVector basis_vector(std::size_t dim,
                                                  std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    [[nodiscard]] const CVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const {
        return amplitudes_(static_cast<Eigen::Index>(i));
    }

  private:
    CVector amplitudes_;
};

class HermitianOperator {
  public:
    /// Throws InvariantViolation when the matrix is not square or deviates
    /// from its adjoint by more than 1e-12 in any entry.
    explicit HermitianOperator(CMatrix entries);

    [[nodiscard]] static HermitianOperator diagonal(std::span<const double> values);
    [[nodiscard]] static HermitianOperator identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return entries_; }

  private:
    CMatrix entries_;
};

class OrthonormalBasis {
  public:
    /// Requires exactly dim vectors of a common dimension that are pairwise
    /// orthonormal within 1e-10.
    explicit OrthonormalBasis(std::vector<StateVector> vectors);

    [[nodiscard]] static OrthonormalBasis computational(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return vectors_.size(); }
    [[nodiscard]] const StateVector &operator[](std::size_t i) const {
        return vectors_.at(i);
    }
    [[nodiscard]] const std::vector<StateVector> &vectors() const noexcept {
        return vectors_;
    }
    [[nodiscard]] auto begin() const noexcept { return vectors_.begin(); }
    [[nodiscard]] auto end() const noexcept { return vectors_.end(); }

    /// Columns are the basis vectors.
    [[nodiscard]] CMatrix as_matrix() const;

  private:
    std::vector<StateVector> vectors_;
};

struct Eigendecomposition {
    std::vector<double> eigenvalues; // ascending
    OrthonormalBasis eigenbasis;
};

/// <a|b>, conjugate-linear in `a`.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

/// <psi|op|psi>. Throws InvariantViolation if the raw imaginary part
/// exceeds 1e-10.
[[nodiscard]] double expectation(const HermitianOperator &op,
                                 const StateVector &psi);

[[nodiscard]] StateVector random_state(std::size_t dim, Rng &rng);

/// Haar-distributed basis: Gram-Schmidt on a complex Ginibre matrix.
[[nodiscard]] OrthonormalBasis random_basis(std::size_t dim, Rng &rng);

/// Modified Gram-Schmidt with one re-orthogonalization pass. Requires
/// exactly as many vectors as their dimension; a residual norm below 1e-9
/// raises DegenerateInput.
[[nodiscard]] OrthonormalBasis gram_schmidt(std::span<const CVector> vectors);
[[nodiscard]] OrthonormalBasis gram_schmidt(std::span<const StateVector> vectors);

/// Extends `first` to a full basis using `candidates` in order, silently
/// skipping candidates that are dependent on the vectors accepted so far.
/// The first output vector is `first` under the phase convention.
[[nodiscard]] OrthonormalBasis complete_basis(const StateVector &first,
                                              std::span<const CVector> candidates);

[[nodiscard]] CVector apply_phase_convention(CVector v);

/// Throws InvariantViolation for non-Hermitian input (enforced by the type);
/// degenerate spectra yield an arbitrary orthonormal eigenbasis.
[[nodiscard]] Eigendecomposition
hermitian_eigendecomposition(const HermitianOperator &op);

/// (A + A^dagger)/2 with standard complex Gaussian A.
[[nodiscard]] HermitianOperator random_hermitian(std::size_t dim, Rng &rng);

/// |psi><psi|
[[nodiscard]] CMatrix projector(const StateVector &psi);

/// sum_j value_j |v_j><v_j|
[[nodiscard]] CMatrix reconstruct(const Eigendecomposition &decomposition);

} // namespace qdt
