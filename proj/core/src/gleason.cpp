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
#include "qdt/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

constexpr double kFitRankThreshold = 1e-10;
constexpr double kSameRayTolerance = 1e-9;

std::vector<CVector> computational_vectors(std::size_t dim) {
    std::vector<CVector> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out.push_back(StateVector::basis_vector(dim, i).amplitudes());
    }
    return out;
}

CVector gaussian(std::size_t dim, Rng &rng) {
    CVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = standard_normal(rng);
        const double im = standard_normal(rng);
        v(i) = Complex{re, im};
    }
    return v;
}

// Complex Gaussian entries on a random nonempty proper subset of coordinates.
StateVector sparse_state(std::size_t dim, Rng &rng) {
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, dim - 1));
    const std::size_t k = count(rng);
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < k; ++i) {
        const double re = standard_normal(rng);
        const double im = standard_normal(rng);
        v(static_cast<Eigen::Index>(order[i])) = Complex{re, im};
    }
    return StateVector::normalized(std::move(v));
}

// Row of the linear map theta -> <psi|rho(theta)|psi> - |psi_{d-1}|^2.
Eigen::RowVectorXd design_row(const StateVector &psi) {
    const std::size_t d = psi.dim();
    Eigen::RowVectorXd row(static_cast<Eigen::Index>(d * d - 1));
    const double last = std::norm(psi[d - 1]);
    Eigen::Index c = 0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        row(c++) = std::norm(psi[k]) - last;
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            const Complex w = std::conj(psi[j]) * psi[k];
            row(c++) = 2.0 * w.real();
            row(c++) = -2.0 * w.imag();
        }
    }
    return row;
}

CMatrix assemble_density(const Eigen::VectorXd &theta, std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    CMatrix rho = CMatrix::Zero(n, n);
    Eigen::Index c = 0;
    double trace = 0.0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        rho(k, k) = theta(c);
        trace += theta(c++);
    }
    rho(n - 1, n - 1) = 1.0 - trace;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            const Complex v{theta(c), theta(c + 1)};
            c += 2;
            rho(j, k) = v;
            rho(k, j) = std::conj(v);
        }
    }
    return rho;
}

} // namespace

FrameFunction::FrameFunction(std::size_t dim, Evaluator evaluate)
    : dim_(dim), evaluate_(std::move(evaluate)) {
    if (dim_ == 0) {
        throw DomainError("FrameFunction: dimension must be positive");
    }
}

double FrameFunction::operator()(const StateVector &psi) const {
    if (psi.dim() != dim_) {
        throw DimensionMismatch("FrameFunction: expected dimension " + std::to_string(dim_) +
                                ", got " + std::to_string(psi.dim()));
    }
    return evaluate_(psi);
}

ContextualAssignment::ContextualAssignment(std::size_t dim, Evaluator evaluate)
    : dim_(dim), evaluate_(std::move(evaluate)) {
    if (dim_ == 0) {
        throw DomainError("ContextualAssignment: dimension must be positive");
    }
}

double ContextualAssignment::operator()(const OrthonormalBasis &basis,
                                        std::size_t index) const {
    if (basis.dim() != dim_) {
        throw DimensionMismatch("ContextualAssignment: expected dimension " +
                                std::to_string(dim_) + ", got " +
                                std::to_string(basis.dim()));
    }
    if (index >= dim_) {
        throw DomainError("ContextualAssignment: index out of range");
    }
    return evaluate_(basis, index);
}

DensityOperator DensityOperator::validated(CMatrix matrix) {
    const auto v = verify_density_operator(matrix, 0.0);
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
        throw InvariantViolation("DensityOperator: matrix must be square and non-empty");
    }
    if (v.hermiticity_error > kDensityHermitianTolerance) {
        throw InvariantViolation("DensityOperator: must be Hermitian within 1e-10");
    }
    if (v.trace_error > kDensityTraceTolerance) {
        throw InvariantViolation("DensityOperator: trace must equal 1 within 1e-9");
    }
    if (v.min_eigenvalue < -kDensityPsdTolerance) {
        throw InvariantViolation(
            "DensityOperator: minimum eigenvalue must be >= -1e-8 (positive semidefinite)");
    }
    return DensityOperator(std::move(matrix));
}

DensityOperator DensityOperator::unchecked(CMatrix matrix) {
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
        throw InvariantViolation("DensityOperator: matrix must be square and non-empty");
    }
    return DensityOperator(std::move(matrix));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    if (dim == 0) {
        throw DomainError("maximally_mixed: dimension must be positive");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    return DensityOperator(CMatrix::Identity(n, n) / static_cast<double>(dim));
}

DensityOperator DensityOperator::pure(const StateVector &psi) {
    return DensityOperator(projector(psi));
}

DensityOperator random_density_operator(std::size_t dim, Rng &rng, std::size_t rank) {
    if (dim == 0) {
        throw DomainError("random_density_operator: dimension must be positive");
    }
    if (rank == 0 || rank > dim) {
        rank = dim;
    }
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix g(n, static_cast<Eigen::Index>(rank));
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        g.col(j) = gaussian(dim, rng);
    }
    CMatrix rho = g * g.adjoint();
    rho = (rho + rho.adjoint()) * 0.5;
    rho /= rho.trace().real();
    return DensityOperator::validated(std::move(rho));
}

FrameFunction born_frame_function(const DensityOperator &rho) {
    return FrameFunction(rho.dim(), [m = rho.matrix()](const StateVector &psi) {
        return psi.amplitudes().dot(m * psi.amplitudes()).real();
    });
}

double check_basis_normalization(const FrameFunction &f, const OrthonormalBasis &basis) {
    if (basis.dim() != f.dim()) {
        throw DimensionMismatch("check_basis_normalization: basis dimension " +
                                std::to_string(basis.dim()) + " vs frame function " +
                                std::to_string(f.dim()));
    }
    double total = 0.0;
    for (const auto &v : basis) {
        total += f(v);
    }
    return std::abs(total - 1.0);
}

ContextualAssignment assignment_from_frame_function(FrameFunction f) {
    const std::size_t d = f.dim();
    return ContextualAssignment(d, [f = std::move(f)](const OrthonormalBasis &b,
                                                      std::size_t k) { return f(b[k]); });
}

FrameFunction flatten_assignment(ContextualAssignment a) {
    const std::size_t d = a.dim();
    return FrameFunction(d, [a = std::move(a), candidates = computational_vectors(d)](
                                const StateVector &psi) {
        return a(complete_basis(psi, candidates), 0);
    });
}

ContextualAssignment uniform_support_assignment(const StateVector &chi, double epsilon) {
    return ContextualAssignment(chi.dim(), [chi, epsilon](const OrthonormalBasis &b,
                                                          std::size_t k) {
        std::size_t support = 0;
        bool member = false;
        for (std::size_t i = 0; i < b.dim(); ++i) {
            if (std::abs(inner_product(b[i], chi)) > epsilon) {
                ++support;
                member = member || i == k;
            }
        }
        if (support == 0) {
            throw DegenerateInput("uniform_support_assignment: empty support");
        }
        return member ? 1.0 / static_cast<double>(support) : 0.0;
    });
}

std::vector<StateVector> fiducial_states(std::size_t dim) {
    std::vector<StateVector> out;
    out.reserve(dim * dim);
    const double h = 1.0 / std::sqrt(2.0);
    const auto n = static_cast<Eigen::Index>(dim);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.push_back(StateVector::basis_vector(dim, static_cast<std::size_t>(k)));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            CVector plus = CVector::Zero(n);
            plus(j) = h;
            plus(k) = h;
            out.emplace_back(plus);
            CVector twisted = CVector::Zero(n);
            twisted(j) = h;
            twisted(k) = Complex{0.0, h};
            out.emplace_back(twisted);
        }
    }
    return out;
}

FitResult fit_density_operator(const FrameFunction &f, const FitOptions &options,
                               Rng &rng) {
    const std::size_t d = f.dim();
    std::vector<std::string> warnings;
    if (d < 2) {
        throw DomainError("fit_density_operator: dimension must be at least 2");
    }
    if (d == 2) {
        warnings.emplace_back(
            "dimension 2: the frame-function representation theorem needs dimension > 2; "
            "the fit is reported but carries no guarantee");
    }
    if (options.num_probes < d * d) {
        throw DomainError("fit_density_operator: need at least dim^2 = " +
                          std::to_string(d * d) + " probes, got " +
                          std::to_string(options.num_probes));
    }
    const std::size_t attempts_allowed = std::max<std::size_t>(1, options.max_attempts);
    const auto unknowns = static_cast<Eigen::Index>(d * d - 1);

    for (std::size_t attempt = 1; attempt <= attempts_allowed; ++attempt) {
        std::vector<StateVector> probes;
        if (options.include_fiducials) {
            probes = fiducial_states(d);
        }
        for (std::size_t i = 0; i < options.num_probes; ++i) {
            probes.push_back(random_state(d, rng));
        }
        const auto m = static_cast<Eigen::Index>(probes.size());
        Eigen::MatrixXd design(m, unknowns);
        Eigen::VectorXd target(m);
        Eigen::VectorXd observed(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const auto &psi = probes[static_cast<std::size_t>(i)];
            design.row(i) = design_row(psi);
            observed(i) = f(psi);
            target(i) = observed(i) - std::norm(psi[d - 1]);
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
        qr.setThreshold(kFitRankThreshold);
        if (qr.rank() < unknowns) {
            warnings.push_back("attempt " + std::to_string(attempt) +
                               ": rank-deficient probe set, resampling");
            continue;
        }
        const Eigen::VectorXd theta = qr.solve(target);
        const Eigen::VectorXd residual = design * theta - target;
        const double rms = std::sqrt(residual.squaredNorm() / static_cast<double>(m));
        return FitResult{DensityOperator::unchecked(assemble_density(theta, d)), rms,
                         probes.size(), attempt, std::move(warnings)};
    }
    throw DegenerateInput("fit_density_operator: probe set rank deficient after " +
                          std::to_string(attempts_allowed) + " attempts");
}

DensityVerification verify_density_operator(const CMatrix &matrix, double tol) {
    DensityVerification v;
    v.tolerance = tol;
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
        v.hermiticity_error = std::numeric_limits<double>::infinity();
        v.trace_error = std::numeric_limits<double>::infinity();
        v.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return v;
    }
    v.hermiticity_error = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    v.trace_error = std::abs(matrix.trace() - Complex{1.0, 0.0});
    const CMatrix hermitian_part = (matrix + matrix.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    v.min_eigenvalue = solver.eigenvalues().minCoeff();
    return v;
}

DensityVerification verify_density_operator(const DensityOperator &rho, double tol) {
    return verify_density_operator(rho.matrix(), tol);
}

double trace_distance(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("trace_distance: operand shapes differ");
    }
    const CMatrix diff = a - b;
    const CMatrix hermitian_part = (diff + diff.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double witness_gap(const ContextualAssignment &a, const OrthonormalBasis &first,
                   std::size_t first_index, const OrthonormalBasis &second,
                   std::size_t second_index) {
    const double overlap = std::abs(inner_product(first[first_index], second[second_index]));
    if (std::abs(overlap - 1.0) > kSameRayTolerance) {
        throw DomainError("witness_gap: the two indexed vectors are not the same ray");
    }
    return std::abs(a(first, first_index) - a(second, second_index));
}

ContextualityResult detect_contextuality(const ContextualAssignment &a, std::size_t trials,
                                         std::uint64_t seed, double tol) {
    const std::size_t d = a.dim();
    ContextualityResult result;
    if (d < 3) {
        result.warnings.emplace_back(
            "dimension " + std::to_string(d) +
            ": noncontextuality constraints are only binding for dimension > 2; "
            "running a best-effort search");
    }
    const auto computational = computational_vectors(d);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, t);
        StateVector psi = t < d ? StateVector::basis_vector(d, t)
                          : (t % 2 == 1) ? sparse_state(d, rng)
                                         : random_state(d, rng);
        std::vector<CVector> random_candidates;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            random_candidates.push_back(gaussian(d, rng));
        }
        random_candidates.insert(random_candidates.end(), computational.begin(),
                                 computational.end());
        OrthonormalBasis first = complete_basis(psi, computational);
        OrthonormalBasis second = complete_basis(psi, random_candidates);
        const double v1 = a(first, 0);
        const double v2 = a(second, 0);
        result.trials_run = t + 1;
        if (std::abs(v1 - v2) > tol) {
            result.witness = ContextualityWitness{std::move(psi),   std::move(first), 0,
                                                  std::move(second), 0,              v1,
                                                  v2,               std::abs(v1 - v2), t};
            return result;
        }
    }
    return result;
}

} // namespace qdt
