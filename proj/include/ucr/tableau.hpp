#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucr/bigint.hpp"
#include "ucr/config.hpp"
#include "ucr/partition.hpp"
#include "ucr/permutation.hpp"

namespace ucr {

// Bijective filling of the diagram of `shape` with 1..n. Not required to be
// standard: row- and column-increase is a predicate, not an invariant, since
// several constructions (column stabilizers, gamma indexings) are defined for
// arbitrary fillings.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    Tableau(Partition s, std::vector<std::vector<int>> r)
        : shape(std::move(s)), rows(std::move(r)) { validate(); }

    int n() const { return shape.n(); }
    int value(int row, int col) const { return rows[row][col]; }

    // Cell (row, col) holding value j, zero-based.
    std::pair<int, int> position(int j) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < rows[i].size(); ++c)
                if (rows[i][c] == j) return {static_cast<int>(i), static_cast<int>(c)};
        throw std::invalid_argument("Tableau: value " + std::to_string(j) + " not present");
    }

    bool is_standard() const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < rows[i].size(); ++c) {
                if (c > 0 && rows[i][c] <= rows[i][c - 1]) return false;
                if (i > 0 && c < rows[i - 1].size() && rows[i][c] <= rows[i - 1][c]) return false;
            }
        return true;
    }

    // Concatenation of the rows, top to bottom; the canonical sort key.
    std::vector<int> row_word() const {
        std::vector<int> w;
        w.reserve(n());
        for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    void validate() const {
        if (static_cast<int>(rows.size()) != shape.rows())
            throw std::invalid_argument("Tableau: row count does not match shape");
        std::vector<bool> seen(n(), false);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != shape.parts[i])
                throw std::invalid_argument("Tableau: row length does not match shape");
            for (int v : rows[i]) {
                if (v < 1 || v > n() || seen[v - 1])
                    throw std::invalid_argument("Tableau: filling must be a bijection onto 1..n");
                seen[v - 1] = true;
            }
        }
    }

    std::string to_string() const {
        std::string s;
        for (const auto& row : rows) {
            s += "[";
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) s += " ";
                s += std::to_string(row[c]);
            }
            s += "]";
        }
        return s;
    }
};

// Filling of the diagram with letters 0..d-1; repetitions allowed. The
// content records how many times each letter appears.
struct TypedTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    TypedTableau() = default;
    TypedTableau(Partition s, std::vector<std::vector<int>> r)
        : shape(std::move(s)), rows(std::move(r)) { validate(); }

    int n() const { return shape.n(); }
    int value(int row, int col) const { return rows[row][col]; }

    Composition content(int d) const {
        std::vector<int> counts(d, 0);
        for (const auto& row : rows)
            for (int v : row) {
                if (v >= d) throw std::invalid_argument("TypedTableau: letter exceeds alphabet");
                ++counts[v];
            }
        return Composition(std::move(counts));
    }

    // Rows weakly increase, columns strictly increase.
    bool is_semistandard() const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < rows[i].size(); ++c) {
                if (c > 0 && rows[i][c] < rows[i][c - 1]) return false;
                if (i > 0 && c < rows[i - 1].size() && rows[i][c] <= rows[i - 1][c]) return false;
            }
        return true;
    }

    std::vector<int> row_word() const {
        std::vector<int> w;
        w.reserve(n());
        for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    void validate() const {
        if (static_cast<int>(rows.size()) != shape.rows())
            throw std::invalid_argument("TypedTableau: row count does not match shape");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != shape.parts[i])
                throw std::invalid_argument("TypedTableau: row length does not match shape");
            for (int v : rows[i])
                if (v < 0) throw std::invalid_argument("TypedTableau: letters must be non-negative");
        }
    }

    std::string to_string() const {
        std::string s;
        for (const auto& row : rows) {
            s += "[";
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) s += " ";
                s += std::to_string(row[c]);
            }
            s += "]";
        }
        return s;
    }
};

// Hook length of each cell, row-major: arm + leg + 1.
inline std::vector<int> hook_lengths(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    std::vector<int> hooks;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j)
            hooks.push_back(lambda.parts[i] + conj.parts[j] - i - j - 1);
    return hooks;
}

// n! / (product of hook lengths), computed exactly; the quotient is returned
// as a 64-bit count and overflow of that range is reported.
inline unsigned long long specht_dim(const Partition& lambda) {
    BigUint num = BigUint::factorial(static_cast<unsigned>(lambda.n()));
    BigUint den(1);
    for (int h : hook_lengths(lambda)) den.mul_small(static_cast<std::uint32_t>(h));
    BigUint q = BigUint::div_exact(std::move(num), den);
    if (!q.fits_u64())
        throw std::overflow_error("specht_dim: dimension " + q.to_string() + " exceeds 64-bit range");
    return q.to_u64();
}

namespace detail {

inline void standard_rec(const Partition& shape, std::vector<std::vector<int>>& rows,
                         std::vector<bool>& used, int cell, int n,
                         std::vector<Tableau>& out) {
    if (cell == n) {
        out.push_back(Tableau(shape, rows));
        return;
    }
    int i = 0, j = cell;
    while (j >= shape.parts[i]) { j -= shape.parts[i]; ++i; }
    for (int v = 1; v <= n; ++v) {
        if (used[v - 1]) continue;
        if (j > 0 && v <= rows[i][j - 1]) continue;
        if (i > 0 && v <= rows[i - 1][j]) continue;
        rows[i][j] = v;
        used[v - 1] = true;
        standard_rec(shape, rows, used, cell + 1, n, out);
        used[v - 1] = false;
    }
}

inline void semistandard_rec(const Partition& shape, std::vector<std::vector<int>>& rows,
                             std::vector<int>& budget, int cell, int n,
                             std::vector<TypedTableau>& out) {
    if (cell == n) {
        out.push_back(TypedTableau(shape, rows));
        return;
    }
    int i = 0, j = cell;
    while (j >= shape.parts[i]) { j -= shape.parts[i]; ++i; }
    int lo = j > 0 ? rows[i][j - 1] : 0;
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    for (int v = lo; v < static_cast<int>(budget.size()); ++v) {
        if (budget[v] == 0) continue;
        rows[i][j] = v;
        --budget[v];
        semistandard_rec(shape, rows, budget, cell + 1, n, out);
        ++budget[v];
    }
}

} // namespace detail

// All standard tableaux of shape λ, ordered lexicographically by row word.
inline std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(lambda.rows());
    for (int i = 0; i < lambda.rows(); ++i) rows[i].assign(lambda.parts[i], 0);
    std::vector<bool> used(lambda.n(), false);
    detail::standard_rec(lambda, rows, used, 0, lambda.n(), out);
    return out;
}

// All semistandard tableaux of shape λ whose content is exactly k (letter l
// appears k_l times), ordered lexicographically by row word.
inline std::vector<TypedTableau> semistandard_with_content(const Partition& lambda,
                                                           const Composition& k) {
    if (k.n() != lambda.n())
        throw std::invalid_argument("semistandard_with_content: content must sum to the shape size");
    std::vector<TypedTableau> out;
    std::vector<std::vector<int>> rows(lambda.rows());
    for (int i = 0; i < lambda.rows(); ++i) rows[i].assign(lambda.parts[i], 0);
    std::vector<int> budget = k.entries;
    detail::semistandard_rec(lambda, rows, budget, 0, lambda.n(), out);
    return out;
}

// Semistandard λ-tableaux of type μ. The alphabet is one letter per part.
inline std::vector<TypedTableau> semistandard_tableaux(const Partition& lambda,
                                                       const Partition& mu) {
    if (mu.n() != lambda.n())
        throw std::invalid_argument("semistandard_tableaux: shapes must have equal size");
    return semistandard_with_content(lambda, Composition(mu.parts));
}

inline unsigned long long kostka(const Partition& lambda, const Partition& mu) {
    return semistandard_tableaux(lambda, mu).size();
}

// Number of distinct length-d compositions rearranging to μ: the multinomial
// of d over the multiplicities of the distinct values in the zero-padded μ.
inline unsigned long long arr(const Partition& mu, int d) {
    if (mu.rows() > d) return 0;
    std::vector<int> padded = mu.parts;
    padded.resize(d, 0);
    BigUint result = BigUint::factorial(static_cast<unsigned>(d));
    std::size_t i = 0;
    while (i < padded.size()) {
        std::size_t j = i;
        while (j < padded.size() && padded[j] == padded[i]) ++j;
        result = BigUint::div_exact(std::move(result),
                                    BigUint::factorial(static_cast<unsigned>(j - i)));
        i = j;
    }
    return result.to_u64();
}

// Multiplicity of S^λ inside the n-fold tensor space over d letters:
// Σ_μ arr(μ,d)·kostka(λ,μ) over partitions μ of n with at most d parts.
inline unsigned long long multiplicity(const Partition& lambda, int d) {
    unsigned long long total = 0;
    for (const Partition& mu : enumerate_partitions(lambda.n(), d))
        total += arr(mu, d) * kostka(lambda, mu);
    return total;
}

enum class Axis { row, column };

// The subgroup of S_n fixing each row (or column) of t setwise, fully
// materialized as the direct product of the symmetric groups on the entry
// sets. Guarded by a size cap.
inline std::vector<Permutation> stabilizer(const Tableau& t, Axis axis) {
    std::vector<std::vector<int>> sets;
    if (axis == Axis::row) {
        sets = t.rows;
    } else {
        for (int j = 0; j < (t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size())); ++j) {
            std::vector<int> col;
            for (const auto& row : t.rows)
                if (j < static_cast<int>(row.size())) col.push_back(row[j]);
            sets.push_back(std::move(col));
        }
    }

    long long total = 1;
    std::vector<std::vector<std::vector<int>>> arrangements;
    for (auto& set : sets) {
        std::sort(set.begin(), set.end());
        std::vector<std::vector<int>> perms;
        std::vector<int> work = set;
        do {
            perms.push_back(work);
        } while (std::next_permutation(work.begin(), work.end()));
        total *= static_cast<long long>(perms.size());
        if (total > kStabilizerCap)
            throw resource_error("stabilizer: group order exceeds cap of "
                                 + std::to_string(kStabilizerCap));
        arrangements.push_back(std::move(perms));
    }

    std::vector<Permutation> group;
    group.reserve(static_cast<std::size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        Permutation p = Permutation::identity(t.n());
        long long rem = idx;
        for (std::size_t g = 0; g < sets.size(); ++g) {
            long long choice = rem % static_cast<long long>(arrangements[g].size());
            rem /= static_cast<long long>(arrangements[g].size());
            for (std::size_t k = 0; k < sets[g].size(); ++k)
                p.img[sets[g][k] - 1] = arrangements[g][choice][k];
        }
        group.push_back(std::move(p));
    }
    return group;
}

} // namespace ucr
