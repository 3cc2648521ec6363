#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucr/config.hpp"
#include "ucr/decomposition.hpp"
#include "ucr/linalg.hpp"

namespace ucr {

// A set of Hermitian d x d rotation generators with their angles. `maximal`
// records whether the traceless parts span the whole traceless Hermitian
// space, the condition under which the fixed-point set collapses to the
// permutation bicommutant.
struct GeneratorSet {
    int d = 0;
    std::vector<ComplexMatrix> generators;
    std::vector<double> angles;
    bool maximal = false;
};

// Real dimension of the span of the traceless parts. Complex rank equals
// real rank here because the inputs are Hermitian.
inline int traceless_span_rank(int d, const std::vector<ComplexMatrix>& generators) {
    if (generators.empty()) return 0;
    ComplexMatrix stacked(d * d, static_cast<int>(generators.size()));
    for (std::size_t g = 0; g < generators.size(); ++g) {
        Complex tr_part = trace(generators[g]) / static_cast<double>(d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                stacked.at(r * d + c, static_cast<int>(g))
                    = generators[g].at(r, c) - (r == c ? tr_part : 0.0);
    }
    return static_cast<int>(generators.size())
           - nullspace_dimension(stacked, 1e-8);
}

inline GeneratorSet make_generator_set(int d, std::vector<ComplexMatrix> generators,
                                       std::vector<double> angles) {
    if (generators.size() != angles.size())
        throw std::invalid_argument("make_generator_set: one angle per generator required");
    for (const auto& g : generators) {
        if (g.rows != d || g.cols != d)
            throw std::invalid_argument("make_generator_set: generator is not d x d");
        if (hermiticity_defect(g) > 1e-12 * std::max(1.0, frobenius_norm(g)))
            throw std::invalid_argument("make_generator_set: generator is not Hermitian");
    }
    for (double a : angles)
        if (a == 0.0) throw std::invalid_argument("make_generator_set: angles must be nonzero");
    GeneratorSet s;
    s.d = d;
    s.generators = std::move(generators);
    s.angles = std::move(angles);
    s.maximal = traceless_span_rank(d, s.generators) == d * d - 1;
    return s;
}

// Largest minus smallest eigenvalue.
inline double spectral_diameter(const ComplexMatrix& h) {
    EigResult eig = hermitian_eig(h);
    return eig.eigenvalues.back() - eig.eigenvalues.front();
}

inline constexpr double kDefaultAngleScale = 0.7390851332;

// Aliasing-safe default angles for an n-fold collective rotation: the
// collective operator's spectral diameter is exactly n times the single-site
// one, so theta_x * diameter stays below 2*pi by a wide margin.
inline std::vector<double> default_angles(const GeneratorSet& s, int n) {
    std::vector<double> out;
    out.reserve(s.generators.size());
    for (const auto& g : s.generators)
        out.push_back(kDefaultAngleScale / (1.0 + n * spectral_diameter(g)));
    return out;
}

// The d^2 - 1 generalized Gell-Mann matrices: for each index pair the
// symmetric and antisymmetric Hermitian units, then the scaled diagonal
// traceless ladder. Angles default to the n = 1 rule.
inline GeneratorSet gell_mann_generators(int d) {
    if (d < 2) throw std::invalid_argument("gell_mann_generators: d must be at least 2");
    std::vector<ComplexMatrix> gens;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix sym(d, d);
            sym.at(j, k) = 1.0;
            sym.at(k, j) = 1.0;
            gens.push_back(sym);
            ComplexMatrix antisym(d, d);
            antisym.at(j, k) = Complex(0.0, -1.0);
            antisym.at(k, j) = Complex(0.0, 1.0);
            gens.push_back(antisym);
        }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix diag(d, d);
        double f = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) diag.at(j, j) = f;
        diag.at(l, l) = -f * l;
        gens.push_back(diag);
    }
    GeneratorSet s;
    s.d = d;
    s.generators = std::move(gens);
    s.maximal = true;
    s.angles = default_angles(s, 1);
    // The construction is maximal by design; verify rather than assume.
    if (traceless_span_rank(d, s.generators) != d * d - 1)
        throw consistency_error("gell_mann_generators: span rank check failed");
    return s;
}

// u_n(x): the sum of x acting on each tensor position.
inline ComplexMatrix collective_operator(const ComplexMatrix& x, int n) {
    if (!x.is_square()) throw std::invalid_argument("collective_operator: x must be square");
    int d = x.rows;
    long long dim = checked_state_dim(d, n, state_cap());
    ComplexMatrix u(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> digits(n, 0);
    for (long long col = 0; col < dim; ++col) {
        long long rem = col;
        for (int p = n - 1; p >= 0; --p) {
            digits[p] = static_cast<int>(rem % d);
            rem /= d;
        }
        // Changing one digit scans one x column per position.
        for (int p = 0; p < n; ++p) {
            long long stride = 1;
            for (int q = p + 1; q < n; ++q) stride *= d;
            long long base = col - digits[p] * stride;
            for (int v = 0; v < d; ++v) {
                Complex entry = x.at(v, digits[p]);
                if (entry != 0.0)
                    u.at(static_cast<int>(base + v * stride), static_cast<int>(col)) += entry;
            }
        }
    }
    return u;
}

struct UcrChannel {
    int d = 0;
    int n = 0;
    std::vector<ComplexMatrix> kraus;
    std::vector<std::string> warnings;
};

// One scaled rotation Kraus operator per generator. Each operator carries
// weight 1/|S| in the channel sum, which is exactly what makes the map trace
// preserving; unitality follows because every term is a scaled unitary.
inline UcrChannel build_channel(const GeneratorSet& s, int n) {
    if (s.generators.empty())
        throw std::invalid_argument("build_channel: generator set is empty");
    if (s.angles.size() != s.generators.size())
        throw std::invalid_argument("build_channel: one angle per generator required");
    for (double a : s.angles)
        if (a == 0.0) throw std::invalid_argument("build_channel: angles must be nonzero");

    UcrChannel ch;
    ch.d = s.d;
    ch.n = n;
    double weight = 1.0 / std::sqrt(static_cast<double>(s.generators.size()));
    for (std::size_t g = 0; g < s.generators.size(); ++g) {
        ComplexMatrix u = collective_operator(s.generators[g], n);
        EigResult eig = hermitian_eig(u);
        double theta = s.angles[g];

        // Detect phase aliasing: two distinct collective eigenvalues whose
        // angle-scaled gap lands on a multiple of 2*pi produce equal phases,
        // and the rotation then fixes strictly more than intended.
        double scale = std::max(std::abs(eig.eigenvalues.front()),
                                std::abs(eig.eigenvalues.back()));
        for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i)
            for (std::size_t j = i + 1; j < eig.eigenvalues.size(); ++j) {
                double gap = eig.eigenvalues[j] - eig.eigenvalues[i];
                if (gap <= 1e-8 * std::max(1.0, scale)) continue;
                double turns = theta * gap / (2.0 * M_PI);
                if (std::abs(turns - std::round(turns)) * 2.0 * M_PI < 1e-6) {
                    ch.warnings.push_back(
                        "aliasing: generator " + std::to_string(g) + " angle "
                        + std::to_string(theta) + " maps spectral gap "
                        + std::to_string(gap) + " onto a multiple of 2*pi");
                    goto next_generator;
                }
            }
    next_generator:;

        int dim = u.rows;
        ComplexMatrix phased(dim, dim);
        for (int c = 0; c < dim; ++c) {
            Complex phase = weight * std::exp(Complex(0.0, theta * eig.eigenvalues[c]));
            for (int r = 0; r < dim; ++r)
                phased.at(r, c) = eig.eigenvectors.at(r, c) * phase;
        }
        ch.kraus.push_back(multiply(phased, adjoint(eig.eigenvectors)));
    }
    return ch;
}

inline ComplexMatrix apply_channel(const UcrChannel& ch, const ComplexMatrix& rho) {
    if (ch.kraus.empty()) throw std::invalid_argument("apply_channel: channel has no terms");
    if (!rho.is_square() || rho.rows != ch.kraus[0].rows)
        throw std::invalid_argument("apply_channel: state dimension does not match the channel");
    ComplexMatrix out(rho.rows, rho.cols);
    for (const auto& e : ch.kraus)
        out = add(out, multiply(multiply(e, rho), adjoint(e)));
    return out;
}

// Largest deviation of E(pi(sigma)) from pi(sigma) over a generating set of
// the symmetric group (adjacent-free: all transpositions plus the n-cycle).
// Zero up to rounding for every ucr-channel, maximal or not, because the
// collective operators commute with every permutation.
inline double group_fixed_residual(const UcrChannel& ch) {
    if (ch.n > 8)
        throw std::invalid_argument("group_fixed_residual: n is capped at 8");
    std::vector<Permutation> sigmas;
    for (int i = 1; i <= ch.n; ++i)
        for (int j = i + 1; j <= ch.n; ++j)
            sigmas.push_back(Permutation::transposition(ch.n, i, j));
    if (ch.n >= 2) {
        std::vector<int> full(ch.n);
        for (int i = 0; i < ch.n; ++i) full[i] = i + 1;
        sigmas.push_back(Permutation::cycle(ch.n, full));
    }
    double worst = 0.0;
    for (const auto& sigma : sigmas) {
        ComplexMatrix pi = permutation_matrix(sigma, ch.d);
        worst = std::max(worst, frobenius_norm(subtract(apply_channel(ch, pi), pi)));
    }
    return worst;
}

inline const DecompositionBlock& find_block(const DecompositionReport& report,
                                            const Partition& lambda) {
    for (const auto& block : report.blocks)
        if (block.lambda == lambda) return block;
    throw std::invalid_argument("no block for shape " + lambda.to_string()
                                + " in the (" + std::to_string(report.d) + ","
                                + std::to_string(report.n) + ") decomposition");
}

// rho = V (ancilla (x) logical) V': the logical state rides the tableau
// factor, the ancilla rides the copy factor the noise acts on.
inline DensityMatrix encode_noiseless(const DecompositionReport& report, const Partition& lambda,
                                      const DensityMatrix& logical, const DensityMatrix& ancilla) {
    const DecompositionBlock& block = find_block(report, lambda);
    if (logical.dim() != static_cast<int>(block.dim))
        throw std::invalid_argument("encode_noiseless: logical state must have dimension "
                                    + std::to_string(block.dim));
    if (ancilla.dim() != static_cast<int>(block.mult))
        throw std::invalid_argument("encode_noiseless: ancilla state must have dimension "
                                    + std::to_string(block.mult));
    ComplexMatrix joint = kron(ancilla.mat, logical.mat);
    return DensityMatrix(multiply(multiply(block.basis, joint), adjoint(block.basis)));
}

struct DecodeResult {
    DensityMatrix logical;
    double leakage = 0.0; // state mass found outside the block
};

inline DecodeResult decode_noiseless(const DecompositionReport& report, const Partition& lambda,
                                     const DensityMatrix& rho, double leak_tol = 1e-8) {
    const DecompositionBlock& block = find_block(report, lambda);
    if (rho.dim() != static_cast<int>(report.dimension))
        throw std::invalid_argument("decode_noiseless: state dimension does not match the report");
    ComplexMatrix compressed = multiply(adjoint(block.basis), multiply(rho.mat, block.basis));
    double mass = trace(compressed).real();
    double leakage = 1.0 - mass;
    if (leakage > leak_tol)
        throw std::invalid_argument("decode_noiseless: " + std::to_string(leakage)
                                    + " of the state mass lies outside the block");
    // Renormalize away the (within-tolerance) leaked mass so the result is a
    // valid state even when the input only approximately fits the block.
    ComplexMatrix reduced = partial_trace(scale(compressed, 1.0 / mass),
                                          static_cast<int>(block.mult),
                                          static_cast<int>(block.dim), Keep::second);
    return DecodeResult{DensityMatrix(std::move(reduced)), leakage};
}

inline ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    EigResult eig = hermitian_eig(h);
    int n = h.rows;
    ComplexMatrix scaled(n, n);
    for (int c = 0; c < n; ++c) {
        double f = std::sqrt(std::max(0.0, eig.eigenvalues[c]));
        for (int r = 0; r < n; ++r) scaled.at(r, c) = eig.eigenvectors.at(r, c) * f;
    }
    return multiply(scaled, adjoint(eig.eigenvectors));
}

// Uhlmann fidelity (squared-overlap convention, 1 for identical states).
inline double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    ComplexMatrix root = psd_sqrt(a.mat);
    ComplexMatrix inner = multiply(multiply(root, b.mat), root);
    EigResult eig = hermitian_eig(inner);
    double sum = 0.0;
    for (double v : eig.eigenvalues) sum += std::sqrt(std::max(0.0, v));
    return sum * sum;
}

// Ginibre-induced random full-rank state, deterministic in the seed.
inline DensityMatrix random_density(int dim, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (auto& e : g.entries) e = Complex(dist(rng), dist(rng));
    ComplexMatrix pos = multiply(g, adjoint(g));
    return DensityMatrix(scale(pos, 1.0 / trace(pos).real()));
}

inline DensityMatrix random_pure_density(int dim, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix v(dim, 1);
    double norm_sq = 0.0;
    for (auto& e : v.entries) {
        e = Complex(dist(rng), dist(rng));
        norm_sq += std::norm(e);
    }
    ComplexMatrix outer = multiply(v, adjoint(v));
    return DensityMatrix(scale(outer, 1.0 / norm_sq));
}

} // namespace ucr
