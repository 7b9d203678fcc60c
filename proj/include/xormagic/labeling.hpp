#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xormagic/families.hpp"
#include "xormagic/graph.hpp"

namespace xormagic {

enum class Mode { open, closed };

inline const char* to_string(Mode m) { return m == Mode::open ? "open" : "closed"; }

// An element of (Z_2)^n. Coordinates are big-endian: coordinate 0 is the
// most significant bit of value(), so vertex i's canonical label is just
// the n-bit binary representation of i.
class BitLabel {
public:
    BitLabel() = default;

    BitLabel(int n, std::uint32_t value) : n_(n), value_(value) {
        if (n < 1 || n > 24)
            throw std::invalid_argument("bit label dimension out of range");
        if (value >> n)
            throw std::invalid_argument("bit label value needs more than n bits");
    }

    static BitLabel zero(int n) { return BitLabel(n, 0); }

    static BitLabel from_string(const std::string& bits) {
        if (bits.empty())
            throw std::invalid_argument("empty bit string");
        std::uint32_t v = 0;
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("bit string must contain only 0 and 1");
            v = (v << 1) | static_cast<std::uint32_t>(c - '0');
        }
        return BitLabel(static_cast<int>(bits.size()), v);
    }

    int n() const { return n_; }
    std::uint32_t value() const { return value_; }

    int coord(int i) const {
        if (i < 0 || i >= n_)
            throw std::invalid_argument("bit label coordinate out of range");
        return static_cast<int>((value_ >> (n_ - 1 - i)) & 1u);
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i)
            s[i] = static_cast<char>('0' + coord(i));
        return s;
    }

    BitLabel operator^(const BitLabel& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("bit label dimension mismatch");
        return BitLabel(n_, value_ ^ other.value_);
    }

    bool is_zero() const { return value_ == 0; }

    bool operator==(const BitLabel&) const = default;

private:
    int n_ = 1;
    std::uint32_t value_ = 0;
};

// A bijective assignment of (Z_2)^n labels to the vertices 0..2^n-1.
class Labeling {
public:
    Labeling(int n, std::vector<BitLabel> assignment) : n_(n), assignment_(std::move(assignment)) {
        if (n < 1)
            throw std::invalid_argument("labeling dimension must be >= 1");
        if (static_cast<int>(assignment_.size()) != (1 << n))
            throw std::invalid_argument("labeling must assign exactly 2^n labels");
        for (const BitLabel& l : assignment_)
            if (l.n() != n)
                throw std::invalid_argument("labeling contains a label of wrong dimension");
    }

    int n() const { return n_; }
    int order() const { return 1 << n_; }
    const BitLabel& label(int v) const { return assignment_.at(v); }
    const std::vector<BitLabel>& labels() const { return assignment_; }

    bool is_bijection() const {
        std::vector<char> seen(order(), 0);
        for (const BitLabel& l : assignment_) {
            if (seen[l.value()])
                return false;
            seen[l.value()] = 1;
        }
        return true;
    }

    // Vertex carrying a given label value; requires bijectivity.
    int vertex_of(std::uint32_t value) const {
        for (int v = 0; v < order(); ++v)
            if (assignment_[v].value() == value)
                return v;
        throw std::invalid_argument("label value not present");
    }

    bool operator==(const Labeling&) const = default;

private:
    int n_;
    std::vector<BitLabel> assignment_;
};

// Vertex i receives the n-bit big-endian binary representation of i.
inline Labeling canonical_bijection(int n) {
    if (n < 1)
        throw std::invalid_argument("canonical bijection needs n >= 1");
    std::vector<BitLabel> assignment;
    assignment.reserve(std::size_t{1} << n);
    for (int i = 0; i < (1 << n); ++i)
        assignment.emplace_back(n, static_cast<std::uint32_t>(i));
    return Labeling(n, std::move(assignment));
}

inline void require_matching_order(const Graph& g, const Labeling& l) {
    if (g.order() != l.order())
        throw std::invalid_argument("graph order does not match labeling order");
}

inline BitLabel open_weight(const Graph& g, const Labeling& l, int v) {
    require_matching_order(g, l);
    BitLabel w = BitLabel::zero(l.n());
    for (int u : g.neighbors(v))
        w = w ^ l.label(u);
    return w;
}

inline BitLabel closed_weight(const Graph& g, const Labeling& l, int v) {
    return open_weight(g, l, v) ^ l.label(v);
}

enum class MagicVerdict { magic, wrong_order, not_bijection, not_connected, nonzero_weight };

inline const char* to_string(MagicVerdict v) {
    switch (v) {
    case MagicVerdict::magic: return "magic";
    case MagicVerdict::wrong_order: return "wrong_order";
    case MagicVerdict::not_bijection: return "not_bijection";
    case MagicVerdict::not_connected: return "not_connected";
    case MagicVerdict::nonzero_weight: return "nonzero_weight";
    }
    return "?";
}

struct VerifyResult {
    MagicVerdict verdict = MagicVerdict::magic;
    int witness = -1;                  // offending vertex for nonzero_weight
    std::optional<BitLabel> weight;    // its observed weight

    bool ok() const { return verdict == MagicVerdict::magic; }
};

// Conditions are checked in a fixed order (order, bijection, connectivity,
// weights) and the first failure is reported, so diagnostics are stable.
inline VerifyResult verify_xor_magic(const Graph& g, const Labeling& l, Mode mode) {
    if (g.order() != l.order())
        return {MagicVerdict::wrong_order, -1, std::nullopt};
    if (!l.is_bijection())
        return {MagicVerdict::not_bijection, -1, std::nullopt};
    if (!g.is_connected())
        return {MagicVerdict::not_connected, -1, std::nullopt};
    for (int v = 0; v < g.order(); ++v) {
        const BitLabel w = mode == Mode::open ? open_weight(g, l, v) : closed_weight(g, l, v);
        if (!w.is_zero())
            return {MagicVerdict::nonzero_weight, v, w};
    }
    return {MagicVerdict::magic, -1, std::nullopt};
}

inline VerifyResult verify_open_xor_magic(const Graph& g, const Labeling& l) {
    return verify_xor_magic(g, l, Mode::open);
}

inline VerifyResult verify_closed_xor_magic(const Graph& g, const Labeling& l) {
    return verify_xor_magic(g, l, Mode::closed);
}

// Complement duality: with n >= 2 the total XOR over (Z_2)^n vanishes, so g
// is open magic exactly when complement(g) is closed magic under the same
// labels (both sides taken connected).
inline std::pair<Graph, Labeling> complement_transport(const Graph& g, const Labeling& l) {
    require_matching_order(g, l);
    if (l.n() < 2)
        throw std::invalid_argument("complement transport needs n >= 2");
    if (!l.is_bijection())
        throw std::invalid_argument("complement transport needs a bijective labeling");
    return {g.complement(), l};
}

// Open/closed translation for circulants containing the antipodal distance:
// C_m(S) with m/2 in S is open magic iff C_m(S') is closed magic, where
// S' = { m/2 - s : s in S, s != m/2 }.
inline CirculantSpec circulant_open_closed_translate(const CirculantSpec& spec) {
    const int m = spec.m;
    if (m < 4 || (m & (m - 1)) != 0)
        throw std::invalid_argument("translation needs m = 2^n with n > 1");
    if (std::find(spec.distances.begin(), spec.distances.end(), m / 2) == spec.distances.end())
        throw std::invalid_argument("translation needs m/2 in the connection set");
    std::vector<int> shifted;
    for (int s : spec.distances)
        if (s != m / 2)
            shifted.push_back(m / 2 - s);
    return CirculantSpec::normalized(m, shifted);
}

// Label of (u, v) is the concatenation l_g(u) || l_h(v); with the row-major
// product vertex encoding this is a bijection onto (Z_2)^(a+b).
inline Labeling product_labeling(const Graph& g, const Labeling& lg, const Graph& h, const Labeling& lh) {
    require_matching_order(g, lg);
    require_matching_order(h, lh);
    const int n = lg.n() + lh.n();
    std::vector<BitLabel> assignment;
    assignment.reserve(static_cast<std::size_t>(g.order()) * h.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            assignment.emplace_back(n, (lg.label(u).value() << lh.n()) | lh.label(v).value());
    return Labeling(n, std::move(assignment));
}

} // namespace xormagic
