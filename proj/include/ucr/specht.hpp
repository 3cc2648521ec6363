#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ucr/ket.hpp"
#include "ucr/partition.hpp"
#include "ucr/permutation.hpp"
#include "ucr/tableau.hpp"

namespace ucr {

// The set partition (A_0,...,A_{d-1}) of {1,...,n} induced by reading T
// through t0: position j lands in class T(t0^{-1}(j)). The classes double as
// a ket: position j carries digit l exactly when j is in A_l.
struct GammaClasses {
    std::vector<std::vector<int>> classes;
    KetIndex index;
};

inline GammaClasses gamma(const Tableau& t0, const TypedTableau& T, int d) {
    if (!(t0.shape == T.shape))
        throw std::invalid_argument("gamma: tableau shapes differ");
    GammaClasses out;
    out.classes.resize(d);
    std::vector<int> digits(t0.n());
    for (int j = 1; j <= t0.n(); ++j) {
        auto [row, col] = t0.position(j);
        int l = T.value(row, col);
        if (l >= d) throw std::invalid_argument("gamma: letter exceeds alphabet");
        out.classes[l].push_back(j);
        digits[j - 1] = l;
    }
    out.index = KetIndex(std::move(digits));
    return out;
}

// Image of the tabloid basis vector of t0 under the module homomorphism
// attached to T: the unit-coefficient sum over every ket whose digits,
// restricted to each row of t0, form the same multiset as T's row.
inline IntKetVector theta_image(const TypedTableau& T, const Tableau& t0, int d) {
    if (!(t0.shape == T.shape))
        throw std::invalid_argument("theta_image: tableau shapes differ");
    IntKetVector out(d, t0.n());

    // Unique digit arrangements per row, then their Cartesian product.
    std::vector<std::vector<std::vector<int>>> row_arrangements;
    for (std::size_t r = 0; r < T.rows.size(); ++r) {
        std::vector<int> values = T.rows[r];
        std::sort(values.begin(), values.end());
        std::vector<std::vector<int>> arrangements;
        do {
            arrangements.push_back(values);
        } while (std::next_permutation(values.begin(), values.end()));
        row_arrangements.push_back(std::move(arrangements));
    }

    std::vector<int> digits(t0.n());
    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == row_arrangements.size()) {
            out.add(KetIndex(digits), 1);
            return;
        }
        for (const auto& arrangement : row_arrangements[r]) {
            for (std::size_t c = 0; c < arrangement.size(); ++c)
                digits[t0.rows[r][c] - 1] = arrangement[c];
            self(self, r + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// h_{T,t}: the signed column-stabilizer sum applied to the theta image.
inline IntKetVector polytabloid_image(const TypedTableau& T, const Tableau& t, int d) {
    IntKetVector theta = theta_image(T, t, d);
    IntKetVector out(d, t.n());
    for (const Permutation& sigma : stabilizer(t, Axis::column)) {
        IntKetVector moved = apply_permutation(sigma, theta);
        long long sign = sigma.sign();
        for (const auto& [k, c] : moved.coeffs) out.add(k, sign * c);
    }
    return out;
}

// One copy of the irreducible block: the content composition, the
// semistandard tableau that induced it, and one basis vector per standard
// tableau of the shape.
struct IsotypicCopy {
    Composition composition;
    TypedTableau typed_tableau;
    std::vector<IntKetVector> basis;
};

struct IsotypicFamily {
    Partition lambda;
    int d = 0;
    int n = 0;
    std::vector<IsotypicCopy> copies;
};

// All copies of S^lambda inside the n-fold tensor space over d letters,
// composition-major (compositions reverse-lexicographic, tableaux in
// row-word order within a composition). Shapes taller than the alphabet
// admit no semistandard fillings and yield an empty family.
inline IsotypicFamily isotypic_family(const Partition& lambda, int d, int n) {
    if (lambda.n() != n)
        throw std::invalid_argument("isotypic_family: shape size differs from n");
    IsotypicFamily family;
    family.lambda = lambda;
    family.d = d;
    family.n = n;
    if (lambda.rows() > d) return family;

    std::vector<Tableau> standards = standard_tableaux(lambda);
    for (const Composition& k : enumerate_compositions(n, d)) {
        for (const TypedTableau& T : semistandard_with_content(lambda, k)) {
            IsotypicCopy copy;
            copy.composition = k;
            copy.typed_tableau = T;
            copy.basis.reserve(standards.size());
            for (const Tableau& t : standards)
                copy.basis.push_back(polytabloid_image(T, t, d));
            family.copies.push_back(std::move(copy));
        }
    }
    return family;
}

} // namespace ucr
