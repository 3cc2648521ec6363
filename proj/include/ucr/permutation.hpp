#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ucr {

// Permutation of {1,...,n}; img[i-1] is the image of i.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) { validate(); }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        p.img[a - 1] = b;
        p.img[b - 1] = a;
        return p;
    }

    // elems[0] -> elems[1] -> ... -> elems.back() -> elems[0].
    static Permutation cycle(int n, const std::vector<int>& elems) {
        Permutation p = identity(n);
        for (std::size_t i = 0; i < elems.size(); ++i)
            p.img[elems[i] - 1] = elems[(i + 1) % elems.size()];
        return p;
    }

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    bool operator==(const Permutation& other) const { return img == other.img; }
    bool operator<(const Permutation& other) const { return img < other.img; }

    // (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const {
        std::vector<int> v(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) v[i] = img[other.img[i] - 1];
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) v[img[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(v));
    }

    // Parity from the cycle decomposition: (-1)^(n - #cycles).
    int sign() const {
        std::vector<bool> seen(img.size(), false);
        int cycles = 0;
        for (int i = 1; i <= n(); ++i) {
            if (seen[i - 1]) continue;
            ++cycles;
            for (int j = i; !seen[j - 1]; j = img[j - 1]) seen[j - 1] = true;
        }
        return (n() - cycles) % 2 == 0 ? 1 : -1;
    }

    void validate() const {
        std::vector<bool> seen(img.size(), false);
        for (int v : img) {
            if (v < 1 || v > n() || seen[v - 1])
                throw std::invalid_argument("Permutation: images must be a bijection on 1..n");
            seen[v - 1] = true;
        }
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(img[i]);
        }
        return s + "]";
    }
};

} // namespace ucr
