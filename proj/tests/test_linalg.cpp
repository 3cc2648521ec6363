#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ucr/linalg.hpp"

using namespace ucr;

namespace {

ComplexMatrix random_matrix(int rows, int cols, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (auto& e : m.entries) e = Complex(dist(rng), dist(rng));
    return m;
}

ComplexMatrix random_hermitian(int n, unsigned seed) {
    ComplexMatrix g = random_matrix(n, n, seed);
    return scale(add(g, adjoint(g)), 0.5);
}

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x.at(0, 1) = 1.0;
    x.at(1, 0) = 1.0;
    return x;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return frobenius_norm(subtract(a, b));
}

} // namespace

TEST_CASE("kron") {
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);

    ComplexMatrix d12(2, 2), d34(2, 2);
    d12.at(0, 0) = 1.0; d12.at(1, 1) = 2.0;
    d34.at(0, 0) = 3.0; d34.at(1, 1) = 4.0;
    auto prod = kron(d12, d34);
    CHECK(prod.at(0, 0) == Complex(3.0));
    CHECK(prod.at(1, 1) == Complex(4.0));
    CHECK(prod.at(2, 2) == Complex(6.0));
    CHECK(prod.at(3, 3) == Complex(8.0));

    SECTION("bit-flip pair maps 00 to 11") {
        auto xx = kron(pauli_x(), pauli_x());
        CHECK(xx.at(3, 0) == Complex(1.0));
        CHECK(xx.at(0, 3) == Complex(1.0));
        CHECK(xx.at(0, 0) == Complex(0.0));
    }

    SECTION("associativity") {
        auto a = random_matrix(2, 3, 11);
        auto b = random_matrix(3, 2, 12);
        auto c = random_matrix(2, 2, 13);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
    }

    SECTION("mixed product identity") {
        auto a = random_matrix(3, 3, 21);
        auto b = random_matrix(2, 2, 22);
        auto c = random_matrix(3, 3, 23);
        auto d = random_matrix(2, 2, 24);
        CHECK(max_abs_diff(multiply(kron(a, b), kron(c, d)),
                           kron(multiply(a, c), multiply(b, d))) < 1e-10);
    }

    SECTION("entry cap") {
        ComplexMatrix big(3000, 3000);
        CHECK_THROWS_AS(kron(big, big), resource_error);
        CHECK_THROWS_AS(ComplexMatrix(9000, 9000), resource_error);
    }
}

TEST_CASE("hermitian eigendecomposition") {
    ComplexMatrix d(2, 2);
    d.at(0, 0) = 3.0; d.at(1, 1) = 1.0;
    auto eig = hermitian_eig(d);
    CHECK(eig.eigenvalues[0] == Catch::Approx(1.0));
    CHECK(eig.eigenvalues[1] == Catch::Approx(3.0));

    SECTION("bit flip") {
        auto eig_x = hermitian_eig(pauli_x());
        CHECK(eig_x.eigenvalues[0] == Catch::Approx(-1.0));
        CHECK(eig_x.eigenvalues[1] == Catch::Approx(1.0));
        double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (int c = 0; c < 2; ++c) {
            CHECK(std::abs(eig_x.eigenvectors.at(0, c)) == Catch::Approx(inv_sqrt2));
            CHECK(std::abs(eig_x.eigenvectors.at(1, c)) == Catch::Approx(inv_sqrt2));
        }
    }

    SECTION("reconstruction and ordering on random inputs") {
        for (int n : {8, 32, 128}) {
            auto h = random_hermitian(n, 100 + static_cast<unsigned>(n));
            auto e = hermitian_eig(h);
            ComplexMatrix lam(n, n);
            for (int i = 0; i < n; ++i) lam.at(i, i) = e.eigenvalues[i];
            auto rebuilt = multiply(multiply(e.eigenvectors, lam), adjoint(e.eigenvectors));
            CHECK(max_abs_diff(rebuilt, h) <= 1e-9 * frobenius_norm(h));
            for (int i = 0; i + 1 < n; ++i)
                CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
            auto gram = multiply(adjoint(e.eigenvectors), e.eigenvectors);
            CHECK(max_abs_diff(gram, ComplexMatrix::identity(n)) < 1e-9);
        }
    }

    SECTION("non-Hermitian input is rejected") {
        ComplexMatrix bad(2, 2);
        bad.at(0, 1) = 1.0;
        CHECK_THROWS_AS(hermitian_eig(bad), std::invalid_argument);
    }
}

TEST_CASE("unitary exponential") {
    auto h = random_hermitian(6, 7);
    CHECK(max_abs_diff(unitary_exp(h, 0.0), ComplexMatrix::identity(6)) < 1e-12);

    SECTION("diagonal closed form") {
        ComplexMatrix d(2, 2);
        d.at(0, 0) = 0.5; d.at(1, 1) = 2.0;
        auto u = unitary_exp(d, 0.3);
        CHECK(std::abs(u.at(0, 0) - std::exp(Complex(0.0, 0.15))) < 1e-12);
        CHECK(std::abs(u.at(1, 1) - std::exp(Complex(0.0, 0.6))) < 1e-12);
        CHECK(std::abs(u.at(0, 1)) < 1e-12);
    }

    SECTION("quarter turn of the bit flip") {
        auto u = unitary_exp(pauli_x(), M_PI / 2.0);
        auto expected = scale(pauli_x(), Complex(0.0, 1.0));
        CHECK(max_abs_diff(u, expected) < 1e-12);
    }

    SECTION("group law and unitarity") {
        for (int n : {4, 32, 128}) {
            auto g = random_hermitian(n, 200 + static_cast<unsigned>(n));
            auto u1 = unitary_exp(g, 0.7);
            auto u2 = unitary_exp(g, 1.9);
            auto u12 = unitary_exp(g, 2.6);
            CHECK(max_abs_diff(multiply(u1, u2), u12) < 1e-9);
            CHECK(max_abs_diff(multiply(u1, adjoint(u1)), ComplexMatrix::identity(n)) < 1e-9);
        }
    }
}

TEST_CASE("nullspace dimension") {
    CHECK(nullspace_dimension(ComplexMatrix(4, 4), 1e-8) == 4);
    CHECK(nullspace_dimension(ComplexMatrix::identity(5), 1e-8) == 0);

    SECTION("rank-one outer product") {
        ComplexMatrix v(3, 1);
        v.at(0, 0) = 1.0; v.at(1, 0) = Complex(0.0, 2.0); v.at(2, 0) = -1.0;
        auto outer = multiply(v, adjoint(v));
        CHECK(nullspace_dimension(outer, 1e-8) == 2);
    }

    SECTION("rectangular full rank") {
        CHECK(nullspace_dimension(random_matrix(3, 5, 31), 1e-8) == 2);
        CHECK(nullspace_dimension(random_matrix(5, 3, 32), 1e-8) == 0);
    }

    SECTION("exact zeros survive accumulated rounding") {
        // Projector complement built from an eigenbasis: half the spectrum is
        // exactly rank-deficient only up to floating noise.
        auto h = random_hermitian(64, 40);
        auto e = hermitian_eig(h);
        ComplexMatrix lam(64, 64);
        for (int i = 0; i < 32; ++i) lam.at(i, i) = 1.0 + i;
        auto a = multiply(multiply(e.eigenvectors, lam), adjoint(e.eigenvectors));
        CHECK(nullspace_dimension(a, 1e-8) == 32);
    }
}

TEST_CASE("inverse square root") {
    CHECK(max_abs_diff(inverse_sqrt_posdef(ComplexMatrix::identity(3)),
                       ComplexMatrix::identity(3)) < 1e-12);

    ComplexMatrix d(2, 2);
    d.at(0, 0) = 4.0; d.at(1, 1) = 9.0;
    auto r = inverse_sqrt_posdef(d);
    CHECK(std::abs(r.at(0, 0) - Complex(0.5)) < 1e-12);
    CHECK(std::abs(r.at(1, 1) - Complex(1.0 / 3.0)) < 1e-12);

    SECTION("defining identity on a Gram matrix") {
        ComplexMatrix g(2, 2);
        g.at(0, 0) = 1.0; g.at(0, 1) = 1.0;
        g.at(1, 0) = 1.0; g.at(1, 1) = 2.0;
        auto s = inverse_sqrt_posdef(g);
        CHECK(max_abs_diff(multiply(multiply(s, g), s), ComplexMatrix::identity(2)) < 1e-9);
    }

    SECTION("random positive definite") {
        auto m = random_matrix(16, 16, 55);
        auto g = add(multiply(adjoint(m), m),
                     scale(ComplexMatrix::identity(16), 0.1));
        auto s = inverse_sqrt_posdef(g);
        CHECK(max_abs_diff(multiply(multiply(s, g), s), ComplexMatrix::identity(16)) < 1e-9);
    }

    SECTION("near-singular input is named in the error") {
        ComplexMatrix bad(2, 2);
        bad.at(0, 0) = 1.0; bad.at(1, 1) = 1e-12;
        CHECK_THROWS_AS(inverse_sqrt_posdef(bad), degeneracy_error);
        CHECK_THROWS_WITH(inverse_sqrt_posdef(bad),
                          Catch::Matchers::ContainsSubstring("eigenvalue"));
    }
}

TEST_CASE("partial trace") {
    SECTION("product state") {
        auto sigma = random_hermitian(2, 61);
        auto tau = random_hermitian(3, 62);
        auto joint = kron(sigma, tau);
        auto kept = partial_trace(joint, 2, 3, Keep::second);
        CHECK(max_abs_diff(kept, scale(tau, trace(sigma))) < 1e-12);
        auto kept_first = partial_trace(joint, 2, 3, Keep::first);
        CHECK(max_abs_diff(kept_first, scale(sigma, trace(tau))) < 1e-12);
    }

    SECTION("maximally entangled pair") {
        ComplexMatrix bell(4, 4);
        int idx[2] = {0, 3};
        for (int i : idx)
            for (int j : idx) bell.at(i, j) = 0.5;
        auto reduced = partial_trace(bell, 2, 2, Keep::first);
        CHECK(max_abs_diff(reduced, scale(ComplexMatrix::identity(2), 0.5)) < 1e-12);
    }

    SECTION("trace preservation and positivity") {
        auto m = random_matrix(6, 6, 63);
        auto pos = multiply(adjoint(m), m);
        for (Keep keep : {Keep::first, Keep::second}) {
            auto reduced = partial_trace(pos, 2, 3, keep);
            CHECK(std::abs(trace(reduced) - trace(pos)) < 1e-12);
            auto eig = hermitian_eig(reduced);
            CHECK(eig.eigenvalues.front() > -1e-12);
        }
    }

    SECTION("dimension mismatch is rejected") {
        CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(6), 2, 2, Keep::first),
                        std::invalid_argument);
    }
}

TEST_CASE("density matrix validation") {
    CHECK_NOTHROW(DensityMatrix(scale(ComplexMatrix::identity(4), 0.25)));

    auto m = random_matrix(3, 3, 71);
    auto pos = multiply(adjoint(m), m);
    auto rho = scale(pos, 1.0 / trace(pos).real());
    CHECK_NOTHROW(DensityMatrix(rho));
    CHECK(DensityMatrix(rho).dim() == 3);

    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(2)), std::invalid_argument);

    ComplexMatrix neg(2, 2);
    neg.at(0, 0) = 1.5; neg.at(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(neg), std::invalid_argument);

    ComplexMatrix skew(2, 2);
    skew.at(0, 0) = 1.0; skew.at(0, 1) = 0.5;
    CHECK_THROWS_AS(DensityMatrix(skew), std::invalid_argument);
}
