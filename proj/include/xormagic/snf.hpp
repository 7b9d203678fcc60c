#pragma once

#include <stdexcept>
#include <vector>

#include "xormagic/gf2.hpp"
#include "xormagic/intmat.hpp"

namespace xormagic {

// Smith decomposition L * M * R = S with L, R unimodular and S diagonal
// with the divisibility chain d_i | d_{i+1}.
struct SnfDecomposition {
    IntMatrix left;
    IntMatrix diag;
    IntMatrix right;

    std::vector<BigInt> diagonal() const {
        std::vector<BigInt> d;
        d.reserve(diag.size());
        for (int i = 0; i < diag.size(); ++i)
            d.push_back(diag.at(i, i));
        return d;
    }
};

namespace detail {

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Minimal nonzero absolute value in the trailing submatrix starting at
// (k, k); ties broken by lowest row, then lowest column.
inline bool find_pivot(const IntMatrix& m, int k, int& pr, int& pc) {
    bool found = false;
    BigInt best = 0;
    for (int i = k; i < m.size(); ++i) {
        for (int j = k; j < m.size(); ++j) {
            if (m.at(i, j) == 0)
                continue;
            BigInt a = abs_big(m.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

inline void swap_rows(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.size(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.size(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] += q * row[src]
inline void add_row(IntMatrix& m, int dst, int src, const BigInt& q) {
    for (int j = 0; j < m.size(); ++j)
        m.at(dst, j) += q * m.at(src, j);
}

inline void add_col(IntMatrix& m, int dst, int src, const BigInt& q) {
    for (int i = 0; i < m.size(); ++i)
        m.at(i, dst) += q * m.at(i, src);
}

inline void scale_row(IntMatrix& m, int r, int s) {
    for (int j = 0; j < m.size(); ++j)
        m.at(r, j) *= s;
}

} // namespace detail

inline bool is_unimodular(const IntMatrix& m) {
    const BigInt d = int_determinant(m);
    return d == 1 || d == -1;
}

// Repeated pivot-to-corner reduction with explicit accumulation of the
// unimodular factors. All invariants are re-checked before returning.
inline SnfDecomposition smith_normal_form(const IntMatrix& input) {
    const int n = input.size();
    IntMatrix s = input;
    IntMatrix left = IntMatrix::identity(n);
    IntMatrix right = IntMatrix::identity(n);

    for (int k = 0; k < n; ++k) {
        for (;;) {
            int pr = 0, pc = 0;
            if (!detail::find_pivot(s, k, pr, pc))
                goto done; // trailing submatrix is zero
            if (pr != k) {
                detail::swap_rows(s, k, pr);
                detail::swap_rows(left, k, pr);
            }
            if (pc != k) {
                detail::swap_cols(s, k, pc);
                detail::swap_cols(right, k, pc);
            }
            bool reduced = false;
            for (int i = k + 1; i < n; ++i) {
                if (s.at(i, k) != 0) {
                    const BigInt q = s.at(i, k) / s.at(k, k);
                    detail::add_row(s, i, k, -q);
                    detail::add_row(left, i, k, -q);
                    if (s.at(i, k) != 0)
                        reduced = true; // nonzero remainder, pivot will shrink
                }
            }
            for (int j = k + 1; j < n; ++j) {
                if (s.at(k, j) != 0) {
                    const BigInt q = s.at(k, j) / s.at(k, k);
                    detail::add_col(s, j, k, -q);
                    detail::add_col(right, j, k, -q);
                    if (s.at(k, j) != 0)
                        reduced = true;
                }
            }
            if (reduced)
                continue;
            // Row and column k are clear; enforce that the pivot divides the
            // rest of the submatrix before moving on.
            bool fixed_entry = false;
            for (int i = k + 1; i < n && !fixed_entry; ++i) {
                for (int j = k + 1; j < n && !fixed_entry; ++j) {
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        detail::add_row(s, k, i, 1);
                        detail::add_row(left, k, i, 1);
                        fixed_entry = true;
                    }
                }
            }
            if (!fixed_entry)
                break;
        }
        if (s.at(k, k) < 0) {
            detail::scale_row(s, k, -1);
            detail::scale_row(left, k, -1);
        }
    }
done:

    SnfDecomposition out{left, s, right};
    // d_i | d_{i+1}, non-negative, diagonal
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && s.at(i, j) != 0)
                throw std::logic_error("snf: result is not diagonal");
    for (int i = 0; i + 1 < n; ++i) {
        const BigInt& a = s.at(i, i);
        const BigInt& b = s.at(i + 1, i + 1);
        if (a < 0 || b < 0 || (a == 0 && b != 0) || (a != 0 && b % a != 0))
            throw std::logic_error("snf: divisibility chain violated");
    }
    if (!is_unimodular(left) || !is_unimodular(right))
        throw std::logic_error("snf: transform is not unimodular");
    if (left * input * right != s)
        throw std::logic_error("snf: L*M*R != S");
    BigInt det_s = 1;
    for (int i = 0; i < n; ++i)
        det_s *= s.at(i, i);
    if (det_s != detail::abs_big(int_determinant(input)))
        throw std::logic_error("snf: |det| not preserved");
    return out;
}

enum class NecessaryCondition { pass, fail };

// Determinant screen: an open XOR-magic labeling forces det(A(G)) to be
// even, so an odd determinant certifies nonexistence. A pass says nothing.
inline NecessaryCondition necessary_condition_open(const Graph& g) {
    return gf2_determinant(Gf2Matrix::adjacency(g)) == 1 ? NecessaryCondition::fail
                                                         : NecessaryCondition::pass;
}

enum class SnfPrediction { not_open_magic, inconclusive };

// Same screen routed through the Smith normal form: |det| is the product
// of the diagonal, and an odd product rules out an open labeling.
inline SnfPrediction snf_predicts_non_magic(const Graph& g) {
    const auto snf = smith_normal_form(adjacency_matrix(g));
    BigInt prod = 1;
    for (const BigInt& d : snf.diagonal())
        prod *= d;
    return (prod & 1) == 1 ? SnfPrediction::not_open_magic : SnfPrediction::inconclusive;
}

} // namespace xormagic
