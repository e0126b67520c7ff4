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
#include "qdt/hilbert.hpp"

#include <cmath>
#include <string>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension " +
                                std::to_string(a) + " vs " + std::to_string(b));
    }
}

CVector gaussian_vector(std::size_t dim, Rng &rng) {
    CVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = standard_normal(rng);
        const double im = standard_normal(rng);
        v(i) = Complex{re, im};
    }
    return v;
}

// Orthogonalizes `v` against `accepted` twice (MGS + re-orthogonalization)
// and returns the residual.
CVector orthogonalize(CVector v, const std::vector<CVector> &accepted) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto &q : accepted) {
            v -= q.dot(v) * q;
        }
    }
    return v;
}

} // namespace

StateVector::StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw InvariantViolation("StateVector: dimension must be positive");
    }
    const double norm = amplitudes_.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
        throw InvariantViolation("StateVector: norm must equal 1 within 1e-12 (got " +
                                 std::to_string(norm) + ")");
    }
}

StateVector StateVector::normalized(CVector raw) {
    const double norm = raw.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DegenerateInput("StateVector: cannot normalize a zero vector");
    }
    raw /= norm;
    return StateVector(std::move(raw));
}

StateVector StateVector::basis_vector(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionMismatch("basis_vector: index " + std::to_string(index) +
                                " out of range for dimension " + std::to_string(dim));
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

HermitianOperator::HermitianOperator(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw InvariantViolation("HermitianOperator: matrix must be square and non-empty");
    }
    const double deviation = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (!(deviation <= kHermitianTolerance)) {
        throw InvariantViolation(
            "HermitianOperator: entries must equal their conjugate transpose within 1e-12");
    }
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                              static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        m(k, k) = values[i];
    }
    return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return HermitianOperator(CMatrix::Identity(n, n));
}

OrthonormalBasis::OrthonormalBasis(std::vector<StateVector> vectors)
    : vectors_(std::move(vectors)) {
    if (vectors_.empty()) {
        throw InvariantViolation("OrthonormalBasis: needs at least one vector");
    }
    const std::size_t d = vectors_.front().dim();
    if (vectors_.size() != d) {
        throw InvariantViolation("OrthonormalBasis: expected " + std::to_string(d) +
                                 " vectors, got " + std::to_string(vectors_.size()));
    }
    for (std::size_t i = 0; i < d; ++i) {
        require_same_dim(vectors_[i].dim(), d, "OrthonormalBasis");
        for (std::size_t j = i; j < d; ++j) {
            const Complex ip = inner_product(vectors_[i], vectors_[j]);
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(ip - target) > kOrthonormalTolerance) {
                throw InvariantViolation(
                    "OrthonormalBasis: vectors " + std::to_string(i) + " and " +
                    std::to_string(j) + " violate orthonormality within 1e-10");
            }
        }
    }
}

OrthonormalBasis OrthonormalBasis::computational(std::size_t dim) {
    std::vector<StateVector> vs;
    vs.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        vs.push_back(StateVector::basis_vector(dim, i));
    }
    return OrthonormalBasis(std::move(vs));
}

CMatrix OrthonormalBasis::as_matrix() const {
    const auto n = static_cast<Eigen::Index>(dim());
    CMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        m.col(j) = vectors_[static_cast<std::size_t>(j)].amplitudes();
    }
    return m;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    require_same_dim(a.dim(), b.dim(), "inner_product");
    // Eigen's dot() conjugates the left operand.
    return a.amplitudes().dot(b.amplitudes());
}

double expectation(const HermitianOperator &op, const StateVector &psi) {
    require_same_dim(op.dim(), psi.dim(), "expectation");
    const Complex value = psi.amplitudes().dot(op.matrix() * psi.amplitudes());
    if (std::abs(value.imag()) > kExpectationImagTolerance) {
        throw InvariantViolation("expectation: imaginary part " +
                                 std::to_string(value.imag()) + " exceeds 1e-10");
    }
    return value.real();
}

StateVector random_state(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw DomainError("random_state: dimension must be positive");
    }
    return StateVector::normalized(gaussian_vector(dim, rng));
}

OrthonormalBasis random_basis(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw DomainError("random_basis: dimension must be positive");
    }
    std::vector<CVector> columns;
    columns.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        columns.push_back(gaussian_vector(dim, rng));
    }
    return gram_schmidt(std::span<const CVector>(columns));
}

CVector apply_phase_convention(CVector v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double modulus = std::abs(v(i));
        if (modulus > kPhaseTolerance) {
            v *= std::conj(v(i)) / modulus;
            v(i) = modulus;
            break;
        }
    }
    return v;
}

OrthonormalBasis gram_schmidt(std::span<const CVector> vectors) {
    if (vectors.empty()) {
        throw DimensionMismatch("gram_schmidt: empty input");
    }
    const auto d = static_cast<std::size_t>(vectors.front().size());
    if (vectors.size() != d) {
        throw DimensionMismatch("gram_schmidt: need " + std::to_string(d) +
                                " vectors, got " + std::to_string(vectors.size()));
    }
    std::vector<CVector> accepted;
    accepted.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        require_same_dim(static_cast<std::size_t>(vectors[k].size()), d, "gram_schmidt");
        CVector residual = orthogonalize(vectors[k], accepted);
        const double norm = residual.norm();
        if (!(norm >= kRankTolerance)) {
            throw DegenerateInput("gram_schmidt: input vector " + std::to_string(k) +
                                  " is linearly dependent (residual norm below 1e-9)");
        }
        accepted.push_back(apply_phase_convention(residual / norm));
    }
    std::vector<StateVector> out;
    out.reserve(d);
    for (auto &v : accepted) {
        out.push_back(StateVector::normalized(std::move(v)));
    }
    return OrthonormalBasis(std::move(out));
}

OrthonormalBasis gram_schmidt(std::span<const StateVector> vectors) {
    std::vector<CVector> raw;
    raw.reserve(vectors.size());
    for (const auto &v : vectors) {
        raw.push_back(v.amplitudes());
    }
    return gram_schmidt(std::span<const CVector>(raw));
}

OrthonormalBasis complete_basis(const StateVector &first,
                                std::span<const CVector> candidates) {
    const std::size_t d = first.dim();
    std::vector<CVector> accepted;
    accepted.reserve(d);
    accepted.push_back(apply_phase_convention(first.amplitudes()));
    for (const auto &c : candidates) {
        if (accepted.size() == d) {
            break;
        }
        require_same_dim(static_cast<std::size_t>(c.size()), d, "complete_basis");
        CVector residual = orthogonalize(c, accepted);
        const double norm = residual.norm();
        if (norm >= kRankTolerance) {
            accepted.push_back(apply_phase_convention(residual / norm));
        }
    }
    if (accepted.size() != d) {
        throw DegenerateInput("complete_basis: candidates do not span the complement");
    }
    std::vector<StateVector> out;
    out.reserve(d);
    for (auto &v : accepted) {
        out.push_back(StateVector::normalized(std::move(v)));
    }
    return OrthonormalBasis(std::move(out));
}

Eigendecomposition hermitian_eigendecomposition(const HermitianOperator &op) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(op.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eigendecomposition: solver did not converge");
    }
    const auto n = static_cast<std::size_t>(op.dim());
    std::vector<double> values(n);
    std::vector<StateVector> vectors;
    vectors.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto k = static_cast<Eigen::Index>(j);
        values[j] = solver.eigenvalues()(k);
        vectors.push_back(
            StateVector::normalized(apply_phase_convention(solver.eigenvectors().col(k))));
    }
    return Eigendecomposition{std::move(values), OrthonormalBasis(std::move(vectors))};
}

HermitianOperator random_hermitian(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw DomainError("random_hermitian: dimension must be positive");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix a(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        a.col(j) = gaussian_vector(dim, rng);
    }
    CMatrix h = (a + a.adjoint()) * 0.5;
    return HermitianOperator(std::move(h));
}

CMatrix projector(const StateVector &psi) {
    return psi.amplitudes() * psi.amplitudes().adjoint();
}

CMatrix reconstruct(const Eigendecomposition &decomposition) {
    const auto n = static_cast<Eigen::Index>(decomposition.eigenvalues.size());
    CMatrix m = CMatrix::Zero(n, n);
    for (std::size_t j = 0; j < decomposition.eigenvalues.size(); ++j) {
        m += decomposition.eigenvalues[j] * projector(decomposition.eigenbasis[j]);
    }
    return m;
}

} // namespace qdt
