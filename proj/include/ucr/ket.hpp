#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucr/partition.hpp"
#include "ucr/permutation.hpp"

namespace ucr {

// Computational basis label |i_1 i_2 ... i_n> with digits in 0..d-1.
struct KetIndex {
    std::vector<int> digits;

    KetIndex() = default;
    KetIndex(std::initializer_list<int> v) : digits(v) {}
    explicit KetIndex(std::vector<int> v) : digits(std::move(v)) {}

    int n() const { return static_cast<int>(digits.size()); }

    bool operator==(const KetIndex& other) const { return digits == other.digits; }
    bool operator<(const KetIndex& other) const { return digits < other.digits; }

    Composition weight(int d) const {
        std::vector<int> counts(d, 0);
        for (int v : digits) {
            if (v < 0 || v >= d)
                throw std::invalid_argument("KetIndex: digit out of range for alphabet");
            ++counts[v];
        }
        return Composition(std::move(counts));
    }

    // Row-major rank of the ket within the d^n-dimensional space.
    long long rank(int d) const {
        long long r = 0;
        for (int v : digits) r = r * d + v;
        return r;
    }

    std::string to_string() const {
        std::string s = "|";
        for (int v : digits) s += std::to_string(v);
        return s + ">";
    }
};

// Sparse integer combination of kets; zero coefficients are never stored.
struct IntKetVector {
    int d = 0;
    int n = 0;
    std::map<KetIndex, long long> coeffs;

    IntKetVector() = default;
    IntKetVector(int d_, int n_) : d(d_), n(n_) {}

    void add(const KetIndex& k, long long c) {
        if (k.n() != n)
            throw std::invalid_argument("IntKetVector: ket length mismatch");
        auto it = coeffs.find(k);
        if (it == coeffs.end()) {
            if (c != 0) coeffs.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    bool operator==(const IntKetVector& other) const {
        return d == other.d && n == other.n && coeffs == other.coeffs;
    }

    // Euclidean inner product in the orthonormal ket basis.
    long long inner(const IntKetVector& other) const {
        if (d != other.d || n != other.n)
            throw std::invalid_argument("IntKetVector: shape mismatch in inner product");
        long long total = 0;
        for (const auto& [k, c] : coeffs) {
            auto it = other.coeffs.find(k);
            if (it != other.coeffs.end()) total += c * it->second;
        }
        return total;
    }

    std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : coeffs) {
            if (!s.empty()) s += c >= 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            long long a = c >= 0 ? c : -c;
            if (a != 1) s += std::to_string(a);
            s += k.to_string();
        }
        return s;
    }
};

// All kets whose digit counts equal k, in lexicographic order.
inline std::vector<KetIndex> weight_basis(const Composition& k) {
    std::vector<int> digits;
    for (int l = 0; l < k.d(); ++l)
        digits.insert(digits.end(), k.entries[l], l);
    std::vector<KetIndex> out;
    do {
        out.push_back(KetIndex(digits));
    } while (std::next_permutation(digits.begin(), digits.end()));
    return out;
}

// Position p of the output carries the digit formerly at position sigma(p):
// the action that sends |0011> to |1010> under the 1<->4 transposition.
inline KetIndex apply_permutation(const Permutation& sigma, const KetIndex& k) {
    if (sigma.n() != k.n())
        throw std::invalid_argument("apply_permutation: permutation and ket sizes differ");
    std::vector<int> out(k.digits.size());
    for (int p = 1; p <= k.n(); ++p) out[p - 1] = k.digits[sigma(p) - 1];
    return KetIndex(std::move(out));
}

inline IntKetVector apply_permutation(const Permutation& sigma, const IntKetVector& v) {
    if (sigma.n() != v.n)
        throw std::invalid_argument("apply_permutation: permutation and vector sizes differ");
    IntKetVector out(v.d, v.n);
    for (const auto& [k, c] : v.coeffs) out.add(apply_permutation(sigma, k), c);
    return out;
}

} // namespace ucr
