#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ucr/config.hpp"

namespace ucr {

using Complex = std::complex<double>;

// Thrown when a positive-definite operation meets a spectrum too close to
// zero to invert safely.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Dense row-major complex matrix. Plain value type; the numerics go through
// Eigen maps so no data is ever copied into a second layout.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> entries;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {
        if (r < 0 || c < 0 || static_cast<long long>(r) * c > kDenseEntryCap)
            throw resource_error("ComplexMatrix: " + std::to_string(r) + "x" + std::to_string(c)
                                 + " exceeds the dense entry cap");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    Complex& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Complex& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    bool is_square() const { return rows == cols; }
};

namespace detail {
using EigenMap = Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using ConstEigenMap =
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

inline ConstEigenMap map(const ComplexMatrix& m) { return {m.entries.data(), m.rows, m.cols}; }
inline EigenMap map(ComplexMatrix& m) { return {m.entries.data(), m.rows, m.cols}; }
} // namespace detail

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("multiply: inner dimensions differ");
    ComplexMatrix out(a.rows, b.cols);
    detail::map(out).noalias() = detail::map(a) * detail::map(b);
    return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols, a.rows);
    detail::map(out) = detail::map(a).adjoint();
    return out;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols, a.rows);
    detail::map(out) = detail::map(a).transpose();
    return out;
}

inline ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix out(a.rows, a.cols);
    detail::map(out) = detail::map(a).conjugate();
    return out;
}

inline ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("add: dimensions differ");
    ComplexMatrix out(a.rows, a.cols);
    detail::map(out) = detail::map(a) + detail::map(b);
    return out;
}

inline ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("subtract: dimensions differ");
    ComplexMatrix out(a.rows, a.cols);
    detail::map(out) = detail::map(a) - detail::map(b);
    return out;
}

inline ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
    ComplexMatrix out(a.rows, a.cols);
    detail::map(out) = detail::map(a) * factor;
    return out;
}

inline Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("trace: matrix not square");
    Complex t = 0.0;
    for (int i = 0; i < a.rows; ++i) t += a.at(i, i);
    return t;
}

inline double frobenius_norm(const ComplexMatrix& a) { return detail::map(a).norm(); }

inline double hermiticity_defect(const ComplexMatrix& a) {
    return (detail::map(a) - detail::map(a).adjoint()).norm();
}

// Kronecker product in the row-major block convention:
// out[(i_a*rb + i_b), (j_a*cb + j_b)] = a[i_a,j_a] * b[i_b,j_b].
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    long long rr = static_cast<long long>(a.rows) * b.rows;
    long long cc = static_cast<long long>(a.cols) * b.cols;
    if (rr * cc > kDenseEntryCap)
        throw resource_error("kron: result " + std::to_string(rr) + "x" + std::to_string(cc)
                             + " exceeds the dense entry cap");
    ComplexMatrix out(static_cast<int>(rr), static_cast<int>(cc));
    for (int ia = 0; ia < a.rows; ++ia)
        for (int ja = 0; ja < a.cols; ++ja) {
            Complex f = a.at(ia, ja);
            if (f == 0.0) continue;
            for (int ib = 0; ib < b.rows; ++ib)
                for (int jb = 0; jb < b.cols; ++jb)
                    out.at(ia * b.rows + ib, ja * b.cols + jb) = f * b.at(ib, jb);
        }
    return out;
}

struct EigResult {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // column k pairs with eigenvalue k
};

inline EigResult hermitian_eig(const ComplexMatrix& h) {
    if (!h.is_square()) throw std::invalid_argument("hermitian_eig: matrix not square");
    double defect = hermiticity_defect(h);
    if (defect > 1e-10 * std::max(1.0, frobenius_norm(h)))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian (defect "
                                    + std::to_string(defect) + ")");
    Eigen::MatrixXcd work = detail::map(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(work);
    if (solver.info() != Eigen::Success)
        throw consistency_error("hermitian_eig: eigensolver failed to converge");
    EigResult result;
    result.eigenvalues.assign(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + h.rows);
    result.eigenvectors = ComplexMatrix(h.rows, h.cols);
    detail::map(result.eigenvectors) = solver.eigenvectors();
    return result;
}

// e^{i·theta·h} for Hermitian h.
inline ComplexMatrix unitary_exp(const ComplexMatrix& h, double theta) {
    EigResult eig = hermitian_eig(h);
    int n = h.rows;
    ComplexMatrix phased(n, n);
    for (int c = 0; c < n; ++c) {
        Complex phase = std::exp(Complex(0.0, theta * eig.eigenvalues[c]));
        for (int r = 0; r < n; ++r)
            phased.at(r, c) = eig.eigenvectors.at(r, c) * phase;
    }
    return multiply(phased, adjoint(eig.eigenvectors));
}

// Number of singular values at or below tol times the largest one, computed
// through the spectrum of a†a. The effective cutoff never drops below the
// double-precision noise floor sqrt(N)·sqrt(eps), since eigenvalues of a†a
// carry an absolute error of order N·eps·‖a†a‖ and exact-zero singular
// values therefore surface at about sqrt(N·eps)·σ_max.
inline int nullspace_dimension(const ComplexMatrix& a, double tol) {
    Eigen::MatrixXcd m = detail::map(a);
    Eigen::MatrixXcd gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    if (solver.info() != Eigen::Success)
        throw consistency_error("nullspace_dimension: eigensolver failed to converge");
    int n = static_cast<int>(gram.rows());
    double sigma_max = 0.0;
    std::vector<double> sigma(n);
    for (int i = 0; i < n; ++i) {
        sigma[i] = std::sqrt(std::max(0.0, solver.eigenvalues()[i]));
        sigma_max = std::max(sigma_max, sigma[i]);
    }
    double bigger = std::max(a.rows, a.cols);
    double floor = std::sqrt(bigger) * std::sqrt(std::numeric_limits<double>::epsilon());
    double cutoff = std::max(tol, floor) * sigma_max;
    int count = 0;
    for (double s : sigma)
        if (s <= cutoff) ++count;
    return count;
}

// G^{-1/2} for Hermitian positive definite G.
inline ComplexMatrix inverse_sqrt_posdef(const ComplexMatrix& g) {
    EigResult eig = hermitian_eig(g);
    if (eig.eigenvalues.front() <= 1e-10)
        throw degeneracy_error("inverse_sqrt_posdef: eigenvalue "
                               + std::to_string(eig.eigenvalues.front())
                               + " is not safely positive");
    int n = g.rows;
    ComplexMatrix scaled(n, n);
    for (int c = 0; c < n; ++c) {
        double f = 1.0 / std::sqrt(eig.eigenvalues[c]);
        for (int r = 0; r < n; ++r)
            scaled.at(r, c) = eig.eigenvectors.at(r, c) * f;
    }
    return multiply(scaled, adjoint(eig.eigenvectors));
}

enum class Keep { first, second };

// Trace out one tensor factor of a square matrix on a space of dimension
// a_dim * b_dim (first factor major).
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int a_dim, int b_dim, Keep keep) {
    if (!rho.is_square() || rho.rows != a_dim * b_dim)
        throw std::invalid_argument("partial_trace: matrix size does not match the factor dimensions");
    if (keep == Keep::first) {
        ComplexMatrix out(a_dim, a_dim);
        for (int i = 0; i < a_dim; ++i)
            for (int j = 0; j < a_dim; ++j) {
                Complex s = 0.0;
                for (int k = 0; k < b_dim; ++k) s += rho.at(i * b_dim + k, j * b_dim + k);
                out.at(i, j) = s;
            }
        return out;
    }
    ComplexMatrix out(b_dim, b_dim);
    for (int i = 0; i < b_dim; ++i)
        for (int j = 0; j < b_dim; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < a_dim; ++k) s += rho.at(k * b_dim + i, k * b_dim + j);
            out.at(i, j) = s;
        }
    return out;
}

// Square matrix validated as a quantum state: Hermitian, unit trace,
// spectrum bounded below by a small negative slack.
struct DensityMatrix {
    ComplexMatrix mat;

    explicit DensityMatrix(ComplexMatrix m) : mat(std::move(m)) {
        if (!mat.is_square())
            throw std::invalid_argument("DensityMatrix: matrix not square");
        if (hermiticity_defect(mat) > 1e-12 * std::max(1.0, frobenius_norm(mat)))
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        Complex t = trace(mat);
        if (std::abs(t - 1.0) > 1e-12)
            throw std::invalid_argument("DensityMatrix: trace is not 1");
        EigResult eig = hermitian_eig(mat);
        if (eig.eigenvalues.front() < -1e-12)
            throw std::invalid_argument("DensityMatrix: negative eigenvalue "
                                        + std::to_string(eig.eigenvalues.front()));
    }

    int dim() const { return mat.rows; }
};

} // namespace ucr
