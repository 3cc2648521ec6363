// Independent numerical checks for the block decomposition.
//
// Everything in this header recomputes a quantity along a second route that
// shares no code with the combinatorial pipeline: joint commutants come from
// the nullspace of a stacked commutator form, channel fixed points from the
// eigenvalue-one space of the dense superoperator, and the collective power
// identities from direct matrix arithmetic on random inputs.  Agreement
// between the two routes is what the verify suite reports.

#pragma once

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucr/channel.hpp"

namespace ucr {

struct OracleReport {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline OracleReport make_oracle_report(std::string name, double expected, double observed,
                                       double tolerance) {
    OracleReport r;
    r.name = std::move(name);
    r.expected = expected;
    r.observed = observed;
    r.tolerance = tolerance;
    r.pass = std::abs(expected - observed) <= tolerance;
    return r;
}

// Dimension of the joint commutant {rho : g rho = rho g for every g}.
//
// The commutator conditions are encoded as the positive semidefinite form
//   H = sum_g (g'g) (x) I + I (x) (g g')^T - g (x) conj(g) - g' (x) g^T
// acting on row-major vectorized matrices, whose nullspace consists exactly
// of the vectorized commutant elements.  For Hermitian or unitary generators
// (every caller here) the commutant of the set equals the commutant of the
// *-algebra the set generates.
inline int commutant_dimension(const std::vector<ComplexMatrix>& generators) {
    if (generators.empty())
        throw std::invalid_argument("commutant_dimension: no generators");
    const int n = generators.front().rows;
    if (n > kCommutantCap) {
        std::ostringstream msg;
        msg << "commutant_dimension: matrix dimension " << n << " exceeds the cap of "
            << kCommutantCap;
        throw resource_error(msg.str());
    }
    auto eye = ComplexMatrix::identity(n);
    ComplexMatrix h(n * n, n * n);
    for (const auto& g : generators) {
        if (g.rows != n || g.cols != n)
            throw std::invalid_argument("commutant_dimension: generators differ in size");
        auto gd = adjoint(g);
        h = add(h, kron(multiply(gd, g), eye));
        h = add(h, kron(eye, transpose(multiply(g, gd))));
        h = subtract(h, kron(g, conjugate(g)));
        h = subtract(h, kron(gd, transpose(g)));
    }
    return nullspace_dimension(h, 1e-8);
}

// Dimension of the fixed-point space {rho : channel(rho) = rho}, computed
// from the dense superoperator S = sum_k E_k (x) conj(E_k) as the nullspace
// of S - I.  Dense superoperators grow as the fourth power of the state
// dimension, hence the tight cap.
inline int fixed_space_dimension(const UcrChannel& ch) {
    const int dim = ch.kraus.front().rows;
    if (dim > kSuperopStateCap) {
        std::ostringstream msg;
        msg << "fixed_space_dimension: state dimension " << dim << " exceeds the cap of "
            << kSuperopStateCap;
        throw resource_error(msg.str());
    }
    ComplexMatrix s(dim * dim, dim * dim);
    for (const auto& e : ch.kraus) s = add(s, kron(e, conjugate(e)));
    return nullspace_dimension(subtract(s, ComplexMatrix::identity(dim * dim)), 1e-8);
}

namespace detail {

inline std::string suffix(int d, int n) {
    return " (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
}

inline ComplexMatrix random_hermitian(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (auto& v : g.entries) v = Complex(dist(rng), dist(rng));
    return scale(add(g, adjoint(g)), 0.5);
}

} // namespace detail

// The commutant of the collective generator algebra, recomputed numerically,
// against the block-sum d_1^2 + ... + d_k^2 from the decomposition.
inline std::vector<OracleReport> verify_commutant(int d, int n) {
    auto report = decomposition_report(d, n);
    auto s = gell_mann_generators(d);
    std::vector<ComplexMatrix> collective;
    collective.reserve(s.generators.size());
    for (const auto& x : s.generators) collective.push_back(collective_operator(x, n));
    int observed = commutant_dimension(collective);
    return {make_oracle_report("collective commutant dimension" + detail::suffix(d, n),
                               static_cast<double>(report.commutant_dim),
                               static_cast<double>(observed), 0.0)};
}

// The fixed-point space of the channel built from default angles.  Away from
// aliasing angles it coincides with the commutant of the generators, so its
// dimension must again be the block-sum of squared dimensions.
inline std::vector<OracleReport> verify_fixed_space(int d, int n) {
    auto report = decomposition_report(d, n);
    auto s = gell_mann_generators(d);
    s.angles = default_angles(s, n);
    auto ch = build_channel(s, n);
    int observed = fixed_space_dimension(ch);
    return {make_oracle_report("channel fixed-space dimension" + detail::suffix(d, n),
                               static_cast<double>(report.commutant_dim),
                               static_cast<double>(observed), 0.0)};
}

// Triple cross-check of the interaction algebra dimension: the block-sum of
// squared multiplicities, the closed-form binomial C(d^2 + n - 1, n), and the
// numerically computed commutant of the permutation representation must all
// agree.
inline std::vector<OracleReport> verify_schur_weyl(int d, int n) {
    auto report = decomposition_report(d, n);

    BigUint numer(1), denom(1);
    for (int i = 1; i <= n; ++i) {
        numer.mul_small(static_cast<std::uint32_t>(d * d - 1 + i));
        denom.mul_small(static_cast<std::uint32_t>(i));
    }
    auto binom = BigUint::div_exact(numer, denom).to_u64();

    std::vector<ComplexMatrix> perms;
    if (n == 1) {
        perms.push_back(permutation_matrix(Permutation::identity(1), d));
    } else {
        perms.push_back(permutation_matrix(Permutation::transposition(n, 1, 2), d));
        std::vector<int> full(n);
        for (int i = 0; i < n; ++i) full[i] = i + 1;
        perms.push_back(permutation_matrix(Permutation::cycle(n, full), d));
    }
    int observed = commutant_dimension(perms);

    std::vector<OracleReport> out;
    out.push_back(make_oracle_report("interaction dimension vs binomial" + detail::suffix(d, n),
                                     static_cast<double>(binom),
                                     static_cast<double>(report.interaction_dim), 0.0));
    out.push_back(make_oracle_report(
        "permutation commutant vs interaction dimension" + detail::suffix(d, n),
        static_cast<double>(report.interaction_dim), static_cast<double>(observed), 0.0));
    return out;
}

// Newton-style identities for collective operators of matrix powers.  All the
// ingredients commute (they are sums of local functions of one Hermitian
// matrix), so the scalar power-sum identities lift verbatim:
//   two sites:    u(x)^2 - u(x^2)              = 2 x (x) x
//   three sites:  u(x)^3 - 3 u(x^2) u(x) + 2 u(x^3) = 6 x (x) x (x) x
// The cubic coefficient is measured by a least-squares fit rather than
// assumed, and the sign-flipped variant is checked to fail loudly.
inline std::vector<OracleReport> verify_power_sums(int d, unsigned seed) {
    auto x = detail::random_hermitian(d, seed);
    auto x2 = multiply(x, x);
    auto x3 = multiply(x2, x);

    std::vector<OracleReport> out;

    {
        auto u1 = collective_operator(x, 2);
        auto lhs = subtract(multiply(u1, u1), collective_operator(x2, 2));
        auto rhs = scale(kron(x, x), 2.0);
        double scale_ref = std::max(1.0, frobenius_norm(rhs));
        out.push_back(make_oracle_report("quadratic power identity residual", 0.0,
                                         frobenius_norm(subtract(lhs, rhs)) / scale_ref, 1e-10));
    }

    auto u1 = collective_operator(x, 3);
    auto u2 = collective_operator(x2, 3);
    auto u3 = collective_operator(x3, 3);
    auto cube = multiply(multiply(u1, u1), u1);
    auto cross = scale(multiply(u2, u1), 3.0);
    auto target = scale(kron(kron(x, x), x), 6.0);

    // residual(c) = || cube - cross + c u3 - target ||; minimize over c.
    auto base = add(subtract(target, cube), cross);
    double fitted = trace(multiply(adjoint(u3), base)).real() /
                    trace(multiply(adjoint(u3), u3)).real();
    out.push_back(make_oracle_report("fitted cubic coefficient", 2.0, fitted, 1e-9));

    double scale_ref = std::max(1.0, frobenius_norm(target));
    auto with = [&](double c) {
        auto lhs = add(subtract(cube, cross), scale(u3, c));
        return frobenius_norm(subtract(lhs, target)) / scale_ref;
    };
    out.push_back(make_oracle_report("cubic power identity residual", 0.0, with(2.0), 1e-10));
    out.push_back(make_oracle_report("sign-flipped cubic variant stays far from zero", 1.0,
                                     with(-2.0) > 0.1 ? 1.0 : 0.0, 0.0));
    return out;
}

// Bundled suites for the command line.  The small suite keeps every matrix at
// dimension 16 or below; the full suite adds the larger frozen cases.
inline std::vector<OracleReport> run_verify_suite(bool full) {
    std::vector<OracleReport> out;
    auto append = [&](std::vector<OracleReport> part) {
        for (auto& r : part) out.push_back(std::move(r));
    };
    append(verify_commutant(2, 3));
    append(verify_fixed_space(2, 2));
    append(verify_schur_weyl(2, 3));
    append(verify_power_sums(2, 7));
    if (full) {
        append(verify_commutant(2, 4));
        append(verify_commutant(3, 3));
        append(verify_fixed_space(2, 4));
        append(verify_schur_weyl(2, 4));
        append(verify_schur_weyl(3, 3));
        append(verify_power_sums(3, 11));
    }
    return out;
}

} // namespace ucr
