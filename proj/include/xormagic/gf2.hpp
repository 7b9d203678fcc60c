#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xormagic/graph.hpp"

namespace xormagic {

// Dense bit matrix over GF(2); rows are packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<std::size_t>(rows) * words_, 0) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("gf2 matrix needs positive dimensions");
    }

    static Gf2Matrix identity(int n) {
        Gf2Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.set(i, i, 1);
        return m;
    }

    static Gf2Matrix adjacency(const Graph& g) {
        Gf2Matrix m(g.order(), g.order());
        for (const auto& [u, v] : g.edges()) {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int get(int r, int c) const {
        return static_cast<int>((data_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u);
    }

    void set(int r, int c, int bit) {
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        auto& word = data_[static_cast<std::size_t>(r) * words_ + c / 64];
        if (bit)
            word |= mask;
        else
            word &= ~mask;
    }

    void xor_row(int dst, int src) {
        for (int w = 0; w < words_; ++w)
            data_[static_cast<std::size_t>(dst) * words_ + w] ^= data_[static_cast<std::size_t>(src) * words_ + w];
    }

    void swap_rows(int a, int b) {
        for (int w = 0; w < words_; ++w)
            std::swap(data_[static_cast<std::size_t>(a) * words_ + w],
                      data_[static_cast<std::size_t>(b) * words_ + w]);
    }

private:
    int rows_;
    int cols_;
    int words_;
    std::vector<std::uint64_t> data_;
};

inline int gf2_rank(Gf2Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (m.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        m.swap_rows(rank, pivot);
        for (int r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, col))
                m.xor_row(r, rank);
        ++rank;
    }
    return rank;
}

inline int gf2_determinant(const Gf2Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("gf2 determinant needs a square matrix");
    return gf2_rank(m) == m.rows() ? 1 : 0;
}

} // namespace xormagic
