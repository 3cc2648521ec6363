#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucr/config.hpp"
#include "ucr/ket.hpp"
#include "ucr/linalg.hpp"
#include "ucr/specht.hpp"
#include "ucr/tableau.hpp"

namespace ucr {

// d^n with the configured state-space cap applied; the error names the size
// that would have been needed.
inline long long checked_state_dim(int d, int n, long cap) {
    long long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > cap)
            throw resource_error("state space of dimension " + std::to_string(d) + "^"
                                 + std::to_string(n) + " exceeds the cap of "
                                 + std::to_string(cap));
    }
    return dim;
}

// The d^n-dimensional matrix of the position action of sigma.
inline ComplexMatrix permutation_matrix(const Permutation& sigma, int d) {
    long long dim = checked_state_dim(d, sigma.n(), state_cap());
    ComplexMatrix out(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> digits(sigma.n(), 0);
    for (long long col = 0; col < dim; ++col) {
        long long rem = col;
        for (int p = sigma.n() - 1; p >= 0; --p) {
            digits[p] = static_cast<int>(rem % d);
            rem /= d;
        }
        KetIndex source{std::vector<int>(digits)};
        out.at(static_cast<int>(apply_permutation(sigma, source).rank(d)),
               static_cast<int>(col)) = 1.0;
    }
    return out;
}

inline ComplexMatrix dense_column(const IntKetVector& v) {
    long long dim = checked_state_dim(v.d, v.n, state_cap());
    ComplexMatrix out(static_cast<int>(dim), 1);
    for (const auto& [k, c] : v.coeffs)
        out.at(static_cast<int>(k.rank(v.d)), 0) = static_cast<double>(c);
    return out;
}

// One orthonormalized isotypic block: column (a*dim + b) of `basis` is
// v_{a,b}, copy a in 0..mult-1, position b in 0..dim-1 tracking the order of
// standard tableaux.
struct OrthonormalBlock {
    Partition lambda;
    int d = 0;
    int n = 0;
    int dim = 0;
    int mult = 0;
    ComplexMatrix basis;
};

// Turns the integer family into orthonormal vectors that still carry one
// common permutation representation across all copies. The Gram matrix of
// the family factors exactly as M (x) K, with K the Gram of any single copy
// and M the copy-to-copy scale; applying M^{-1/2} on the copy index and
// K^{-1/2} on the tableau index preserves that shared structure, which plain
// Gram-Schmidt across copies would destroy.
inline OrthonormalBlock orthonormalize_isotypic(const IsotypicFamily& family) {
    int mult = static_cast<int>(family.copies.size());
    if (mult < 1)
        throw std::invalid_argument("orthonormalize_isotypic: family has no copies");
    int dim = static_cast<int>(family.copies[0].basis.size());
    long long state_dim = checked_state_dim(family.d, family.n, state_cap());

    // Exact integer Gram of the full family, copy-major.
    ComplexMatrix gram(mult * dim, mult * dim);
    for (int a = 0; a < mult; ++a)
        for (int b = 0; b < dim; ++b)
            for (int a2 = 0; a2 < mult; ++a2)
                for (int b2 = 0; b2 < dim; ++b2)
                    gram.at(a * dim + b, a2 * dim + b2) = static_cast<double>(
                        family.copies[a].basis[b].inner(family.copies[a2].basis[b2]));

    // K is the Gram of copy 0; M holds the per-pair scale factors, fitted in
    // the least-squares sense so the factorization residual is meaningful.
    ComplexMatrix k_factor(dim, dim);
    for (int b = 0; b < dim; ++b)
        for (int b2 = 0; b2 < dim; ++b2) k_factor.at(b, b2) = gram.at(b, b2);
    double k_norm_sq = std::pow(frobenius_norm(k_factor), 2);
    if (k_norm_sq == 0.0)
        throw consistency_error("orthonormalize_isotypic: first copy has a zero Gram matrix");

    ComplexMatrix m_factor(mult, mult);
    for (int a = 0; a < mult; ++a)
        for (int a2 = 0; a2 < mult; ++a2) {
            Complex overlap = 0.0;
            for (int b = 0; b < dim; ++b)
                for (int b2 = 0; b2 < dim; ++b2)
                    overlap += gram.at(a * dim + b, a2 * dim + b2)
                               * std::conj(k_factor.at(b, b2));
            m_factor.at(a, a2) = overlap / k_norm_sq;
        }

    double residual = frobenius_norm(subtract(gram, kron(m_factor, k_factor)));
    if (residual > 1e-10 * std::max(1.0, frobenius_norm(gram)))
        throw consistency_error("orthonormalize_isotypic: Gram matrix does not factor "
                                "(residual " + std::to_string(residual) + ")");

    ComplexMatrix m_inv_sqrt = inverse_sqrt_posdef(m_factor);
    ComplexMatrix k_inv_sqrt = inverse_sqrt_posdef(k_factor);

    ComplexMatrix raw(static_cast<int>(state_dim), mult * dim);
    for (int a = 0; a < mult; ++a)
        for (int b = 0; b < dim; ++b) {
            for (const auto& [ket, c] : family.copies[a].basis[b].coeffs)
                raw.at(static_cast<int>(ket.rank(family.d)), a * dim + b)
                    = static_cast<double>(c);
        }
    ComplexMatrix mixed = multiply(raw, kron(m_inv_sqrt, k_inv_sqrt));

    OrthonormalBlock block;
    block.lambda = family.lambda;
    block.d = family.d;
    block.n = family.n;
    block.dim = dim;
    block.mult = mult;
    block.basis = std::move(mixed);
    return block;
}

struct DecompositionBlock {
    Partition lambda;
    unsigned long long dim = 0;
    unsigned long long mult = 0;
    ComplexMatrix basis;      // columns v_{a,b}, copy-major
    ComplexMatrix projection; // rank dim*mult central projection
};

struct DecompositionReport {
    int d = 0;
    int n = 0;
    long long dimension = 0; // d^n
    std::vector<DecompositionBlock> blocks;
    unsigned long long dimension_check = 0;     // sum of dim*mult
    unsigned long long commutant_dim = 0;       // sum of dim^2
    unsigned long long interaction_dim = 0;     // sum of mult^2
    unsigned long long largest_full_matrix = 0; // max dim
};

// Full structural decomposition of the n-fold tensor space over d letters:
// one block per shape with at most d rows, reverse-lexicographic.
inline DecompositionReport decomposition_report(int d, int n) {
    if (d < 2) throw std::invalid_argument("decomposition_report: d must be at least 2");
    if (n < 1) throw std::invalid_argument("decomposition_report: n must be at least 1");
    long long dim_total = checked_state_dim(d, n, state_cap());

    DecompositionReport report;
    report.d = d;
    report.n = n;
    report.dimension = dim_total;

    for (const Partition& lambda : enumerate_partitions(n, d)) {
        OrthonormalBlock ortho = orthonormalize_isotypic(isotypic_family(lambda, d, n));
        DecompositionBlock block;
        block.lambda = lambda;
        block.dim = specht_dim(lambda);
        block.mult = multiplicity(lambda, d);
        if (block.dim != static_cast<unsigned long long>(ortho.dim)
            || block.mult != static_cast<unsigned long long>(ortho.mult))
            throw consistency_error("decomposition_report: block sizes disagree with counts for "
                                    + lambda.to_string());
        block.projection = multiply(ortho.basis, adjoint(ortho.basis));
        block.basis = std::move(ortho.basis);

        report.dimension_check += block.dim * block.mult;
        report.commutant_dim += block.dim * block.dim;
        report.interaction_dim += block.mult * block.mult;
        report.largest_full_matrix = std::max(report.largest_full_matrix, block.dim);
        report.blocks.push_back(std::move(block));
    }

    if (report.dimension_check != static_cast<unsigned long long>(dim_total))
        throw consistency_error("decomposition_report: block dimensions sum to "
                                + std::to_string(report.dimension_check) + ", expected "
                                + std::to_string(dim_total));
    return report;
}

} // namespace ucr
