#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xormagic/intmat.hpp"
#include "xormagic/labeling.hpp"

namespace xormagic {

// Weight sequence (M^{r-1+y}, ..., M^y) used by the s-code.
struct EncodingSpec {
    BigInt base;
    int length = 0;
    int offset = 0;

    EncodingSpec(BigInt base_in, int length_in, int offset_in = 0)
        : base(std::move(base_in)), length(length_in), offset(offset_in) {
        if (base < 2 || length < 1 || offset < 0)
            throw std::invalid_argument("encoding spec needs base >= 2, length >= 1, offset >= 0");
    }

    std::vector<BigInt> sequence() const {
        std::vector<BigInt> s(length);
        BigInt p = 1;
        for (int i = 0; i < offset; ++i)
            p *= base;
        for (int i = length - 1; i >= 0; --i) {
            s[i] = p;
            p *= base;
        }
        return s;
    }
};

// enc_s(x) = sum s_i * x_i for a strictly decreasing positive weight sequence.
inline BigInt encode(const std::vector<BigInt>& s, const std::vector<int>& x) {
    if (s.size() != x.size())
        throw std::invalid_argument("encode: sequence and input lengths differ");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0 || (i + 1 < s.size() && s[i] <= s[i + 1]))
            throw std::invalid_argument("encode: weights must be strictly decreasing positives");
        if (x[i] != 0 && x[i] != 1)
            throw std::invalid_argument("encode: input must be binary");
    }
    BigInt total = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (x[i])
            total += s[i];
    return total;
}

inline BigInt encode(const EncodingSpec& spec, const std::vector<int>& x) {
    return encode(spec.sequence(), x);
}

// Splits an n-bit label into ceil(n/t) chunks; all chunks have length t
// except the last, which takes the n - (ceil(n/t)-1)*t remaining bits.
inline std::vector<std::vector<int>> split_label(const BitLabel& label, int t) {
    const int n = label.n();
    if (t < 1 || t > n)
        throw std::invalid_argument("split_label needs 1 <= t <= n");
    const int q = (n + t - 1) / t;
    std::vector<std::vector<int>> chunks(q);
    for (int c = 0; c < q; ++c) {
        const int end = std::min((c + 1) * t, n);
        for (int i = c * t; i < end; ++i)
            chunks[c].push_back(label.coord(i));
    }
    return chunks;
}

enum class LemmaVerdict { conclusion_verified, hypotheses_violated, conclusion_fails };
enum class LemmaHypothesis { none, target_form, column_bound, encoding_sum };

struct LemmaOutcome {
    LemmaVerdict verdict;
    LemmaHypothesis violated = LemmaHypothesis::none;
};

// Checks the base-M encoding lemma on an explicit instance. Targets are the
// even numbers 2k_1 .. 2k_r. The column bound is strict in general; for odd
// M equality is admitted. The relaxed boundary is genuinely reachable: a
// base-M carry can satisfy every hypothesis while the column counts differ
// from the targets, in which case the honest answer is conclusion_fails.
inline LemmaOutcome check_encoding_lemma(const BigInt& M, int y,
                                         const std::vector<std::vector<int>>& sequences,
                                         const std::vector<BigInt>& targets) {
    if (M < 1 || y < 0)
        throw std::invalid_argument("lemma check needs M >= 1 and y >= 0");
    const int r = static_cast<int>(targets.size());
    if (r < 1)
        throw std::invalid_argument("lemma check needs at least one column");
    for (const auto& a : sequences) {
        if (static_cast<int>(a.size()) != r)
            throw std::invalid_argument("lemma check: sequence length mismatch");
        for (int bit : a)
            if (bit != 0 && bit != 1)
                throw std::invalid_argument("lemma check: sequences must be binary");
    }

    for (const BigInt& t : targets)
        if (t < 0 || t >= M || (t & 1) != 0)
            return {LemmaVerdict::hypotheses_violated, LemmaHypothesis::target_form};

    std::vector<BigInt> counts(r, 0);
    for (const auto& a : sequences)
        for (int i = 0; i < r; ++i)
            counts[i] += a[i];
    BigInt max_count = 0;
    for (const BigInt& c : counts)
        if (c > max_count)
            max_count = c;
    const bool odd_m = (M & 1) == 1;
    if (odd_m ? (max_count > M) : (max_count >= M))
        return {LemmaVerdict::hypotheses_violated, LemmaHypothesis::column_bound};

    BigInt weight = 1;
    for (int i = 0; i < y; ++i)
        weight *= M;
    BigInt lhs = 0, rhs = 0;
    for (int i = r - 1; i >= 0; --i) {
        lhs += counts[i] * weight;  // sum of enc values, column by column
        rhs += targets[i] * weight;
        weight *= M;
    }
    if (lhs != rhs)
        return {LemmaVerdict::hypotheses_violated, LemmaHypothesis::encoding_sum};

    for (int i = 0; i < r; ++i)
        if (counts[i] != targets[i])
            return {LemmaVerdict::conclusion_fails};
    return {LemmaVerdict::conclusion_verified};
}

enum class MilpVariant { model1, model2 };

struct MilpVariable {
    std::string name;
    bool binary = false;
    bool bounded = false;
    BigInt lower = 0;
    BigInt upper = 0;
};

struct LinearTerm {
    BigInt coef;
    int var;
};

// Every constraint is an equality row.
struct MilpRow {
    std::string name;
    std::vector<LinearTerm> lhs;
    BigInt rhs;
};

struct MilpModel {
    int n = 0;
    int order = 0;
    int d = 0;
    int t = 0;
    Mode mode = Mode::open;
    MilpVariant variant = MilpVariant::model1;
    bool literal = false;
    std::vector<MilpVariable> variables;
    std::vector<MilpRow> rows;
    std::map<std::string, int> var_index;

    std::size_t count_rows(const std::string& prefix) const {
        std::size_t c = 0;
        for (const auto& row : rows)
            if (row.name.rfind(prefix, 0) == 0)
                ++c;
        return c;
    }

    std::size_t degree_rows() const { return count_rows("deg_"); }
    std::size_t parity_rows() const { return count_rows(variant == MilpVariant::model1 ? "par_" : "enc_"); }
    std::size_t symmetry_rows() const { return count_rows("sym_"); }

    std::size_t binary_variables() const {
        std::size_t c = 0;
        for (const auto& v : variables)
            c += v.binary;
        return c;
    }

    int edge_var(int u, int v) const {
        if (u == v)
            throw std::invalid_argument("no edge variable on the diagonal");
        if (!literal && u > v)
            std::swap(u, v);
        return var_index.at("e_" + std::to_string(u) + "_" + std::to_string(v));
    }

    int k_var(int v, int i) const {
        return var_index.at("k_" + std::to_string(v) + "_" + std::to_string(i));
    }
};

// Builds the open/closed model for a fixed bijection. In the default form
// the symmetry constraints are compiled away by using one variable e_{u,v}
// with u < v for both orientations; literal mode keeps both orientations
// and emits explicit symmetry rows instead.
inline MilpModel build_model(int n, int d, Mode mode, MilpVariant variant, int t,
                             const Labeling& labeling, bool literal = false) {
    if (n < 1)
        throw std::invalid_argument("build_model needs n >= 1");
    const int order = 1 << n;
    if (d < 0 || d > order - 1)
        throw std::invalid_argument("build_model needs 0 <= d <= 2^n - 1");
    if (labeling.n() != n)
        throw std::invalid_argument("build_model: labeling dimension mismatch");
    if (!labeling.is_bijection())
        throw std::invalid_argument("build_model needs a bijective labeling");
    if (variant == MilpVariant::model2) {
        if (t < 1 || t > n)
            throw std::invalid_argument("model2 needs 1 <= t <= n");
        if (d % 2 == 0)
            throw std::invalid_argument("model2 needs odd d (the encoding base)");
        if (d == 1 && t > 1)
            throw std::invalid_argument("model2 with d = 1 needs t = 1 (base-1 weights do not decrease)");
    } else {
        t = 0;
    }

    MilpModel m;
    m.n = n;
    m.order = order;
    m.d = d;
    m.t = t;
    m.mode = mode;
    m.variant = variant;
    m.literal = literal;

    auto add_var = [&m](MilpVariable v) {
        m.var_index[v.name] = static_cast<int>(m.variables.size());
        m.variables.push_back(std::move(v));
    };

    if (literal) {
        for (int u = 0; u < order; ++u)
            for (int v = 0; v < order; ++v)
                if (u != v)
                    add_var({"e_" + std::to_string(u) + "_" + std::to_string(v), true});
    } else {
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                add_var({"e_" + std::to_string(u) + "_" + std::to_string(v), true});
    }
    for (int v = 0; v < order; ++v) {
        for (int i = 0; i < n; ++i) {
            MilpVariable kv{"k_" + std::to_string(v) + "_" + std::to_string(i)};
            if (variant == MilpVariant::model2) {
                kv.bounded = true;
                kv.lower = 0;
                kv.upper = BigInt(d - 1) / 2;
            }
            add_var(std::move(kv));
        }
    }

    if (literal) {
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                m.rows.push_back({"sym_" + std::to_string(u) + "_" + std::to_string(v),
                                  {{1, m.edge_var(u, v)}, {-1, m.edge_var(v, u)}},
                                  0});
    }

    for (int u = 0; u < order; ++u) {
        MilpRow row{"deg_" + std::to_string(u), {}, d};
        for (int v = 0; v < order; ++v)
            if (v != u)
                row.lhs.push_back({1, m.edge_var(u, v)});
        m.rows.push_back(std::move(row));
    }

    if (variant == MilpVariant::model1) {
        for (int v = 0; v < order; ++v) {
            for (int i = 0; i < n; ++i) {
                MilpRow row{"par_" + std::to_string(v) + "_" + std::to_string(i), {}, 0};
                row.lhs.push_back({2, m.k_var(v, i)});
                for (int u = 0; u < order; ++u)
                    if (u != v && labeling.label(u).coord(i) == 1)
                        row.lhs.push_back({-1, m.edge_var(u, v)});
                if (mode == Mode::closed)
                    row.rhs = labeling.label(v).coord(i);
                m.rows.push_back(std::move(row));
            }
        }
    } else {
        const int q_count = (n + t - 1) / t;
        std::vector<std::vector<BigInt>> weights(q_count);
        for (int q = 0; q < q_count; ++q) {
            const int len = std::min((q + 1) * t, n) - q * t;
            std::vector<BigInt> w(len); // (d^len, ..., d)
            BigInt p = d;
            for (int i = len - 1; i >= 0; --i) {
                w[i] = p;
                p *= d;
            }
            weights[q] = std::move(w);
        }
        // Precompute per-vertex chunk encodings once.
        std::vector<std::vector<BigInt>> enc_of(order, std::vector<BigInt>(q_count));
        for (int u = 0; u < order; ++u) {
            const auto chunks = split_label(labeling.label(u), t);
            for (int q = 0; q < q_count; ++q) {
                BigInt e = 0;
                for (std::size_t i = 0; i < chunks[q].size(); ++i)
                    if (chunks[q][i])
                        e += weights[q][i];
                enc_of[u][q] = e;
            }
        }
        for (int v = 0; v < order; ++v) {
            for (int q = 0; q < q_count; ++q) {
                MilpRow row{"enc_" + std::to_string(v) + "_" + std::to_string(q), {}, 0};
                const int len = static_cast<int>(weights[q].size());
                for (int i = 0; i < len; ++i)
                    row.lhs.push_back({2 * weights[q][i], m.k_var(v, q * t + i)});
                for (int u = 0; u < order; ++u)
                    if (u != v && enc_of[u][q] != 0)
                        row.lhs.push_back({-enc_of[u][q], m.edge_var(u, v)});
                if (mode == Mode::closed)
                    row.rhs = enc_of[v][q];
                m.rows.push_back(std::move(row));
            }
        }
    }
    return m;
}

// CPLEX-LP style text: constant objective, named equality rows, Bounds for
// the k variables of model2, Binaries/Generals sections. Output is fully
// deterministic so identical inputs render byte-identically.
inline std::string render_lp(const MilpModel& m) {
    std::ostringstream out;
    out << "Minimize\n obj: 0\nSubject To\n";
    for (const auto& row : m.rows) {
        out << " " << row.name << ":";
        bool first = true;
        for (const auto& term : row.lhs) {
            const BigInt mag = term.coef < 0 ? BigInt(-term.coef) : term.coef;
            if (first) {
                out << " ";
                if (term.coef < 0)
                    out << "- ";
            } else {
                out << (term.coef < 0 ? " - " : " + ");
            }
            if (mag != 1)
                out << mag.str() << " ";
            out << m.variables[term.var].name;
            first = false;
        }
        if (first)
            out << " 0";
        out << " = " << row.rhs.str() << "\n";
    }
    bool any_bounds = false;
    for (const auto& v : m.variables)
        any_bounds |= v.bounded;
    if (any_bounds) {
        out << "Bounds\n";
        for (const auto& v : m.variables)
            if (v.bounded)
                out << " " << v.lower.str() << " <= " << v.name << " <= " << v.upper.str() << "\n";
    }
    out << "Binaries\n";
    for (const auto& v : m.variables)
        if (v.binary)
            out << " " << v.name << "\n";
    out << "Generals\n";
    for (const auto& v : m.variables)
        if (!v.binary)
            out << " " << v.name << "\n";
    out << "End\n";
    return out.str();
}

// Full variable assignment for a candidate graph: edge variables from the
// adjacency, k variables solved from their rows. Returns nullopt when no
// integral in-bounds k exists, which is exactly "this edge set does not
// satisfy the model".
inline std::optional<std::vector<BigInt>> solve_assignment(const MilpModel& m, const Graph& g) {
    if (g.order() != m.order)
        throw std::invalid_argument("solve_assignment: graph order mismatch");
    std::vector<BigInt> values(m.variables.size(), 0);
    for (int u = 0; u < m.order; ++u)
        for (int v = (m.literal ? 0 : u + 1); v < m.order; ++v)
            if (v != u)
                values[m.edge_var(u, v)] = g.has_edge(u, v) ? 1 : 0;

    for (const auto& row : m.rows) {
        if (row.name.rfind("par_", 0) == 0 || row.name.rfind("enc_", 0) == 0) {
            // Move the known edge part to the right: sum coef_k * k = residual.
            BigInt residual = row.rhs;
            std::vector<LinearTerm> k_terms;
            for (const auto& term : row.lhs) {
                if (m.variables[term.var].binary)
                    residual -= term.coef * values[term.var];
                else
                    k_terms.push_back(term);
            }
            // k coefficients are strictly decreasing positive (2 d^len .. 2 d,
            // or the single 2 of model1): peel greedily from the largest.
            for (const auto& term : k_terms) {
                BigInt q = residual / term.coef;
                if (q < 0)
                    q = 0;
                const auto& var = m.variables[term.var];
                if (var.bounded && q > var.upper)
                    q = var.upper;
                values[term.var] = q;
                residual -= q * term.coef;
            }
            if (residual != 0)
                return std::nullopt;
            for (const auto& term : k_terms) {
                const auto& var = m.variables[term.var];
                if (var.bounded && (values[term.var] < var.lower || values[term.var] > var.upper))
                    return std::nullopt;
            }
        }
    }
    return values;
}

// Direct substitution: checks every row, every bound, and binariness.
inline bool satisfies(const MilpModel& m, const std::vector<BigInt>& values) {
    if (values.size() != m.variables.size())
        throw std::invalid_argument("satisfies: assignment size mismatch");
    for (std::size_t i = 0; i < m.variables.size(); ++i) {
        const auto& v = m.variables[i];
        if (v.binary && values[i] != 0 && values[i] != 1)
            return false;
        if (v.bounded && (values[i] < v.lower || values[i] > v.upper))
            return false;
    }
    for (const auto& row : m.rows) {
        BigInt total = 0;
        for (const auto& term : row.lhs)
            total += term.coef * values[term.var];
        if (total != row.rhs)
            return false;
    }
    return true;
}

} // namespace xormagic
