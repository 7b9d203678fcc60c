#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xormagic/gf2.hpp"
#include "xormagic/graph.hpp"

namespace xormagic {

// Intermediate Smith/Bareiss entries overflow machine words already for
// moderate sizes, so all exact matrix work uses arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Square matrix of arbitrary-precision integers.
class IntMatrix {
public:
    explicit IntMatrix(int size) : size_(size), a_(static_cast<std::size_t>(size) * size, 0) {
        if (size < 1)
            throw std::invalid_argument("matrix size must be >= 1");
    }

    static IntMatrix identity(int size) {
        IntMatrix m(size);
        for (int i = 0; i < size; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int size() const { return size_; }

    BigInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * size_ + c]; }
    const BigInt& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * size_ + c]; }

    IntMatrix operator*(const IntMatrix& other) const {
        if (size_ != other.size_)
            throw std::invalid_argument("matrix size mismatch");
        IntMatrix out(size_);
        for (int i = 0; i < size_; ++i)
            for (int k = 0; k < size_; ++k) {
                const BigInt& v = at(i, k);
                if (v == 0)
                    continue;
                for (int j = 0; j < size_; ++j)
                    out.at(i, j) += v * other.at(k, j);
            }
        return out;
    }

    bool operator==(const IntMatrix&) const = default;

private:
    int size_;
    std::vector<BigInt> a_;
};

inline IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.order());
    for (const auto& [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

// circ_m(a_0, ..., a_{m-1}): each row is the previous row rotated right.
inline IntMatrix circulant_matrix(const std::vector<BigInt>& first_row) {
    const int m = static_cast<int>(first_row.size());
    if (m < 1)
        throw std::invalid_argument("circulant matrix needs a non-empty first row");
    IntMatrix out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.at(i, j) = first_row[((j - i) % m + m) % m];
    return out;
}

inline IntMatrix circulant_matrix(const std::vector<int>& first_row) {
    return circulant_matrix(std::vector<BigInt>(first_row.begin(), first_row.end()));
}

inline Gf2Matrix gf2_reduction(const IntMatrix& m) {
    Gf2Matrix out(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            out.set(i, j, static_cast<int>(m.at(i, j) & 1));
    return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt int_determinant(IntMatrix m) {
    const int n = m.size();
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0)
                return 0;
            for (int c = 0; c < n; ++c)
                std::swap(m.at(k, c), m.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev; // exact division, Bareiss invariant
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

} // namespace xormagic
