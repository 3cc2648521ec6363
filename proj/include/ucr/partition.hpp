#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucr {

// Weakly decreasing positive parts. The diagram [λ] is implied: row i holds
// parts[i] cells.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int rows() const { return static_cast<int>(parts.size()); }

    bool operator==(const Partition& other) const { return parts == other.parts; }

    void validate() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("Partition: parts must be non-increasing");
        }
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// Length-d list of non-negative integers summing to n; used for ket weights
// (k_0,...,k_{d-1}) and tableau contents.
struct Composition {
    std::vector<int> entries;

    Composition() = default;
    Composition(std::initializer_list<int> e) : entries(e) { validate(); }
    explicit Composition(std::vector<int> e) : entries(std::move(e)) { validate(); }

    int n() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    int d() const { return static_cast<int>(entries.size()); }

    bool operator==(const Composition& other) const { return entries == other.entries; }
    bool operator<(const Composition& other) const { return entries < other.entries; }

    void validate() const {
        for (int e : entries)
            if (e < 0) throw std::invalid_argument("Composition: entries must be non-negative");
    }

    // Parts sorted decreasingly with zeros dropped.
    Partition sorted() const {
        std::vector<int> p = entries;
        std::sort(p.begin(), p.end(), std::greater<int>());
        while (!p.empty() && p.back() == 0) p.pop_back();
        return Partition(std::move(p));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries[i]);
        }
        return s + ")";
    }
};

namespace detail {
inline void partitions_rec(int remaining, int max_part, int slots,
                           std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (slots == 0) return;
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        // All later parts are bounded by `first`, so the tail must fit.
        if (static_cast<long long>(first) * slots < remaining) break;
        cur.push_back(first);
        partitions_rec(remaining - first, first, slots - 1, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

// All partitions of n with at most max_parts parts, reverse-lexicographic:
// (4),(3,1),(2,2),(2,1,1) for n=4, max_parts=3.
inline std::vector<Partition> enumerate_partitions(int n, int max_parts) {
    if (n < 1 || max_parts < 1)
        throw std::invalid_argument("enumerate_partitions: n and max_parts must be at least 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, max_parts, cur, out);
    return out;
}

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.parts.empty()) cols.resize(lambda.parts[0], 0);
    for (int part : lambda.parts)
        for (int j = 0; j < part; ++j) ++cols[j];
    return Partition(std::move(cols));
}

// λ dominates μ: partial sums of λ weakly exceed those of μ at every prefix.
inline bool dominates(const Partition& lambda, const Partition& mu) {
    int sl = 0, sm = 0;
    std::size_t len = std::max(lambda.parts.size(), mu.parts.size());
    for (std::size_t i = 0; i < len; ++i) {
        sl += i < lambda.parts.size() ? lambda.parts[i] : 0;
        sm += i < mu.parts.size() ? mu.parts[i] : 0;
        if (sl < sm) return false;
    }
    return true;
}

// All length-d compositions of n, reverse-lexicographic: (n,0,...,0) first.
inline std::vector<Composition> enumerate_compositions(int n, int d) {
    if (d < 1) throw std::invalid_argument("enumerate_compositions: d must be at least 1");
    std::vector<Composition> out;
    std::vector<int> cur(d, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            cur[pos] = remaining;
            out.push_back(Composition(cur));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

} // namespace ucr
