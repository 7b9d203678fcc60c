#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "xormagic/labeling.hpp"

namespace xormagic {

enum class EdgeState : std::uint8_t { unknown, in, out };

// Existence query: is there a d-regular graph of order 2^n whose every
// vertex has zero open/closed XOR-weight under a fixed bijection?
struct SearchProblem {
    int n = 2;
    int d = 0;
    Mode mode = Mode::open;
    bool require_connected = false;
    std::optional<Labeling> labeling;  // canonical bijection when absent
    std::uint64_t node_limit = 0;      // 0 = unlimited
    double budget_secs = 0.0;          // 0 = unlimited
    std::uint64_t seed = 0;
    bool symmetry_breaking = true;
};

enum class SearchStatus { feasible, infeasible, budget_exhausted };

inline const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::feasible: return "feasible";
    case SearchStatus::infeasible: return "infeasible";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

struct SearchStats {
    std::uint64_t nodes = 0;           // decision nodes
    std::uint64_t propagated = 0;      // forced assignments
    std::uint64_t disconnected = 0;    // full solutions rejected for connectivity
    int restarts = 0;
    double seconds = 0.0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::infeasible;
    std::optional<Graph> graph;
    bool connected = false;
    SearchStats stats;
};

// Pair states of a partial assignment, indexed like the solver's pair table:
// index(u,v) enumerates u < v lexicographically.
struct PartialAssignment {
    int order = 0;
    std::vector<EdgeState> pairs;

    static PartialAssignment blank(int order) {
        return {order, std::vector<EdgeState>(static_cast<std::size_t>(order) * (order - 1) / 2,
                                              EdgeState::unknown)};
    }

    static std::size_t index(int order, int u, int v) {
        if (u > v)
            std::swap(u, v);
        return static_cast<std::size_t>(u) * order - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
    }

    EdgeState get(int u, int v) const { return pairs[index(order, u, v)]; }
    void set(int u, int v, EdgeState s) { pairs[index(order, u, v)] = s; }
};

namespace detail {

// DFS engine over edge variables with trail-based backtracking.
// Inference rules (all sound):
//   - degree bounding: in-degree <= d <= in-degree + undecided,
//   - forced completion/exclusion when a degree bound becomes tight,
//   - one remaining slot: the missing neighbor's label is determined,
//   - two remaining slots: some undecided pair must XOR to the residue,
//   - GF(2) span filter: the residue (with slot-parity bit appended) must
//     lie in the span of the undecided candidates' extended labels.
class SearchEngine {
public:
    SearchEngine(const SearchProblem& p, const Labeling& labeling, int restart = 0,
                 std::uint64_t node_cap = 0, std::uint64_t nodes_before = 0)
        : problem_(p), labeling_(labeling), order_(labeling.order()),
          words_((order_ + 63) / 64), node_cap_(node_cap) {
        stats_.nodes = nodes_before;
        label_of_.resize(order_);
        vertex_of_.assign(order_, -1);
        for (int v = 0; v < order_; ++v) {
            label_of_[v] = labeling.label(v).value();
            vertex_of_[label_of_[v]] = v;
        }
        target_.resize(order_);
        for (int v = 0; v < order_; ++v)
            target_[v] = p.mode == Mode::open ? 0 : label_of_[v];

        pair_offset_.resize(order_);
        std::size_t off = 0;
        for (int u = 0; u < order_; ++u) {
            pair_offset_[u] = off;
            off += static_cast<std::size_t>(order_ - u - 1);
        }
        npairs_ = off;
        state_.assign(npairs_, EdgeState::unknown);
        deg_in_.assign(order_, 0);
        deg_unknown_.assign(order_, order_ - 1);
        weight_.assign(order_, 0);
        unknown_mask_.assign(static_cast<std::size_t>(order_) * words_, 0);
        for (int u = 0; u < order_; ++u)
            for (int v = 0; v < order_; ++v)
                if (v != u)
                    unknown_mask_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);

        // Restart 0 follows the documented branching rule exactly; later
        // restarts reseed the tiebreaks and rotate the partner order so the
        // search explores a different prefix of the same complete tree.
        std::mt19937_64 rng(p.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(restart));
        priority_.resize(order_);
        for (int v = 0; v < order_; ++v)
            priority_[v] = rng();
        label_mask_ = restart == 0 ? 0 : static_cast<std::uint32_t>(rng()) & (order_ - 1);
    }

    void set_deadline(std::chrono::steady_clock::time_point deadline) {
        deadline_valid_ = true;
        deadline_ = deadline;
    }

    bool hit_global_budget() const { return hit_global_; }

    std::size_t pair_index(int u, int v) const {
        if (u > v)
            std::swap(u, v);
        return pair_offset_[u] + (v - u - 1);
    }

    EdgeState pair_state(int u, int v) const { return state_[pair_index(u, v)]; }

    // Applies one assignment; returns false on direct contradiction.
    bool assign(int u, int v, EdgeState s) {
        const std::size_t idx = pair_index(u, v);
        if (state_[idx] != EdgeState::unknown)
            return state_[idx] == s;
        state_[idx] = s;
        ++stats_.propagated;
        trail_.push_back(idx);
        trail_uv_.emplace_back(u, v);
        clear_unknown(u, v);
        clear_unknown(v, u);
        --deg_unknown_[u];
        --deg_unknown_[v];
        if (s == EdgeState::in) {
            ++deg_in_[u];
            ++deg_in_[v];
            weight_[u] ^= label_of_[v];
            weight_[v] ^= label_of_[u];
        }
        dirty_.push_back(u);
        dirty_.push_back(v);
        return true;
    }

    // Runs inference to fixpoint. Returns false on conflict.
    bool propagate() {
        while (!dirty_.empty()) {
            const int v = dirty_.back();
            dirty_.pop_back();
            if (!check_vertex(v)) {
                dirty_.clear();
                return false;
            }
        }
        return true;
    }

    std::size_t trail_size() const { return trail_.size(); }

    void mark_dirty(int v) { dirty_.push_back(v); }

    void undo_to(std::size_t mark) {
        dirty_.clear();
        while (trail_.size() > mark) {
            const std::size_t idx = trail_.back();
            const auto [u, v] = trail_uv_.back();
            trail_.pop_back();
            trail_uv_.pop_back();
            if (state_[idx] == EdgeState::in) {
                --deg_in_[u];
                --deg_in_[v];
                weight_[u] ^= label_of_[v];
                weight_[v] ^= label_of_[u];
            }
            state_[idx] = EdgeState::unknown;
            set_unknown(u, v);
            set_unknown(v, u);
            ++deg_unknown_[u];
            ++deg_unknown_[v];
        }
    }

    SearchOutcome run() {
        SearchOutcome out;
        bool ok = true;
        if (problem_.symmetry_breaking && order_ >= 2) {
            // GL(n,2) acts on solutions and fixes the zero-labeled vertex,
            // so when any solution exists there is one where the vertex
            // labeled 0...0 is adjacent to the vertices labeled 1 and 2.
            const int v0 = vertex_of_[0];
            if (problem_.d >= 1)
                ok = ok && assign(v0, vertex_of_[1], EdgeState::in);
            if (problem_.d >= 2 && order_ >= 4)
                ok = ok && assign(v0, vertex_of_[2], EdgeState::in);
        }
        for (int v = 0; v < order_ && ok; ++v)
            dirty_.push_back(v);
        ok = ok && propagate();
        SearchStatus status = SearchStatus::infeasible;
        if (ok)
            status = dfs(out);
        out.status = status;
        out.stats = stats_;
        return out;
    }

private:
    bool out_of_budget() {
        if (problem_.node_limit && stats_.nodes >= problem_.node_limit) {
            hit_global_ = true;
            return true;
        }
        if (deadline_valid_ && (stats_.nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline_) {
            hit_global_ = true;
            return true;
        }
        if (node_cap_ && stats_.nodes >= node_cap_)
            return true;
        return false;
    }

    SearchStatus dfs(SearchOutcome& out) {
        ++stats_.nodes;
        if (out_of_budget())
            return SearchStatus::budget_exhausted;

        int bu = -1, bv = -1;
        if (!pick_branching_pair(bu, bv)) {
            // Full assignment; propagation already enforced degrees and
            // zero weights, so only connectivity can still reject it.
            Graph g = current_graph();
            const bool connected = g.is_connected();
            if (problem_.require_connected && !connected) {
                ++stats_.disconnected;
                return SearchStatus::infeasible; // exclude and resume
            }
            out.graph = std::move(g);
            out.connected = connected;
            return SearchStatus::feasible;
        }

        const std::size_t mark = trail_size();
        for (const EdgeState value : {EdgeState::in, EdgeState::out}) {
            if (assign(bu, bv, value) && propagate()) {
                const SearchStatus r = dfs(out);
                if (r != SearchStatus::infeasible)
                    return r;
            }
            undo_to(mark);
        }
        return SearchStatus::infeasible;
    }

    // Undecided pair (u,v) minimizing the remaining degree slack of u;
    // ties by v's label as integer, then by a seeded shuffle among exact ties.
    bool pick_branching_pair(int& bu, int& bv) const {
        int best_slack = order_ + 1;
        for (int u = 0; u < order_; ++u)
            if (deg_unknown_[u] > 0)
                best_slack = std::min(best_slack, problem_.d - deg_in_[u]);
        if (best_slack > order_)
            return false;
        bool found = false;
        std::uint32_t best_label = 0;
        std::uint64_t best_prio = 0;
        for (int u = 0; u < order_; ++u) {
            if (deg_unknown_[u] == 0 || problem_.d - deg_in_[u] != best_slack)
                continue;
            std::uint32_t lbl = 0;
            int v = -1;
            for (int w = 0; w < order_; ++w) {
                if (unknown_bit(u, w) && (v < 0 || (label_of_[w] ^ label_mask_) < lbl)) {
                    v = w;
                    lbl = label_of_[w] ^ label_mask_;
                }
            }
            if (v >= 0 && (!found || lbl < best_label ||
                           (lbl == best_label && priority_[u] < best_prio))) {
                found = true;
                best_label = lbl;
                best_prio = priority_[u];
                bu = u;
                bv = v;
            }
        }
        return found;
    }

    Graph current_graph() const {
        std::vector<Edge> edges;
        for (int u = 0; u < order_; ++u)
            for (int v = u + 1; v < order_; ++v)
                if (state_[pair_offset_[u] + (v - u - 1)] == EdgeState::in)
                    edges.emplace_back(u, v);
        return Graph(order_, edges);
    }

    bool unknown_bit(int u, int w) const {
        return (unknown_mask_[static_cast<std::size_t>(u) * words_ + w / 64] >> (w % 64)) & 1u;
    }

    void clear_unknown(int u, int w) {
        unknown_mask_[static_cast<std::size_t>(u) * words_ + w / 64] &= ~(std::uint64_t{1} << (w % 64));
    }

    void set_unknown(int u, int w) {
        unknown_mask_[static_cast<std::size_t>(u) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    }

    std::vector<int> unknown_candidates(int v) const {
        std::vector<int> out;
        out.reserve(deg_unknown_[v]);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = unknown_mask_[static_cast<std::size_t>(v) * words_ + w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                out.push_back(w * 64 + b);
            }
        }
        return out;
    }

    bool check_vertex(int v) {
        const int slots = problem_.d - deg_in_[v];
        if (slots < 0 || deg_unknown_[v] < slots)
            return false;
        if (slots == 0) {
            if (weight_[v] != target_[v])
                return false;
            if (deg_unknown_[v] > 0)
                for (int w : unknown_candidates(v))
                    if (!assign(v, w, EdgeState::out))
                        return false;
            return true;
        }
        if (deg_unknown_[v] == slots) {
            for (int w : unknown_candidates(v))
                if (!assign(v, w, EdgeState::in))
                    return false;
            return true;
        }
        const std::uint32_t needed = weight_[v] ^ target_[v];
        if (slots == 1) {
            const int w = vertex_of_[needed];
            if (w == v || !unknown_bit(v, w))
                return false;
            for (int c : unknown_candidates(v))
                if (c != w && !assign(v, c, EdgeState::out))
                    return false;
            return assign(v, w, EdgeState::in);
        }
        if (slots == 2) {
            if (needed == 0)
                return false; // two distinct labels cannot cancel
            const auto cands = unknown_candidates(v);
            int pairs = 0, a = -1, b = -1;
            for (int c : cands) {
                const std::uint32_t other = needed ^ label_of_[c];
                if (other <= label_of_[c])
                    continue;
                const int p = vertex_of_[other];
                if (p != v && unknown_bit(v, p)) {
                    ++pairs;
                    a = c;
                    b = p;
                    if (pairs > 1)
                        break;
                }
            }
            if (pairs == 0)
                return false;
            if (pairs == 1) {
                if (!assign(v, a, EdgeState::in) || !assign(v, b, EdgeState::in))
                    return false;
                for (int c : unknown_candidates(v))
                    if (!assign(v, c, EdgeState::out))
                        return false;
            }
            return true;
        }
        // General residue filter over GF(2): append a parity coordinate so
        // subset size parity is forced to match the slot count.
        std::uint64_t basis[33] = {0};
        auto reduce = [&basis](std::uint64_t vec) {
            while (vec) {
                const int h = 63 - std::countl_zero(vec);
                if (basis[h] == 0)
                    return vec;
                vec ^= basis[h];
            }
            return vec;
        };
        for (int c : unknown_candidates(v)) {
            const std::uint64_t vec = reduce((std::uint64_t{1} << 32) | label_of_[c]);
            if (vec)
                basis[63 - std::countl_zero(vec)] = vec;
        }
        const std::uint64_t want = ((slots & 1) ? (std::uint64_t{1} << 32) : 0) | needed;
        return reduce(want) == 0;
    }

    const SearchProblem& problem_;
    const Labeling& labeling_;
    int order_;
    int words_;
    std::size_t npairs_ = 0;
    std::vector<std::uint32_t> label_of_;
    std::vector<int> vertex_of_;
    std::vector<std::uint32_t> target_;
    std::vector<std::size_t> pair_offset_;
    std::vector<EdgeState> state_;
    std::vector<int> deg_in_;
    std::vector<int> deg_unknown_;
    std::vector<std::uint32_t> weight_;
    std::vector<std::uint64_t> unknown_mask_;
    std::vector<std::uint64_t> priority_;
    std::uint32_t label_mask_ = 0;
    std::uint64_t node_cap_ = 0;
    bool hit_global_ = false;
    std::vector<std::size_t> trail_;
    std::vector<std::pair<int, int>> trail_uv_;
    std::vector<int> dirty_;
    SearchStats stats_;
    bool deadline_valid_ = false;
    std::chrono::steady_clock::time_point deadline_;
};

} // namespace detail

inline Labeling search_labeling(const SearchProblem& p) {
    if (p.labeling) {
        if (p.labeling->n() != p.n)
            throw std::invalid_argument("search labeling dimension mismatch");
        if (!p.labeling->is_bijection())
            throw std::invalid_argument("search labeling must be bijective");
        return *p.labeling;
    }
    return canonical_bijection(p.n);
}

inline void validate_problem(const SearchProblem& p) {
    if (p.n < 1)
        throw std::invalid_argument("search needs n >= 1");
    if (p.d < 0 || p.d > (1 << p.n) - 1)
        throw std::invalid_argument("search needs 0 <= d <= 2^n - 1");
}

// Decides existence. `infeasible` is only reported after a restart fully
// exhausts the search tree under sound pruning; running out of budget is
// its own status, never a verdict. Runs are capped geometrically and
// restarted with perturbed tiebreaks, which bounds the total work at about
// twice the final run while escaping unlucky prefixes on feasible instances.
inline SearchOutcome solve(const SearchProblem& p) {
    validate_problem(p);
    const Labeling l = search_labeling(p);
    const auto start = std::chrono::steady_clock::now();
    const bool timed = p.budget_secs > 0;
    const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(p.budget_secs));
    std::uint64_t nodes_so_far = 0;
    std::uint64_t cap = 1 << 13;
    for (int restart = 0;; ++restart, cap *= 2) {
        detail::SearchEngine engine(p, l, restart, nodes_so_far + cap, nodes_so_far);
        if (timed)
            engine.set_deadline(deadline);
        SearchOutcome out = engine.run();
        out.stats.restarts = restart;
        out.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.status != SearchStatus::budget_exhausted || engine.hit_global_budget())
            return out;
        nodes_so_far = out.stats.nodes;
    }
}

// Re-verifies a feasible outcome through the labeling module, an
// independent code path from the search engine.
inline bool certify(const SearchOutcome& outcome, const SearchProblem& p) {
    if (outcome.status != SearchStatus::feasible || !outcome.graph)
        throw std::invalid_argument("certify needs a feasible outcome");
    const Labeling l = search_labeling(p);
    const Graph& g = *outcome.graph;
    if (g.order() != (1 << p.n))
        return false;
    if (g.regularity() != std::optional<int>(p.d))
        return false;
    const VerifyResult r = verify_xor_magic(g, l, p.mode);
    if (r.ok())
        return true;
    if (r.verdict == MagicVerdict::not_connected && !p.require_connected) {
        for (int v = 0; v < g.order(); ++v) {
            const BitLabel w = p.mode == Mode::open ? open_weight(g, l, v) : closed_weight(g, l, v);
            if (!w.is_zero())
                return false;
        }
        return true;
    }
    return false;
}

// One propagation fixpoint over an explicit partial assignment; exposed for
// testing the inference rules in isolation.
struct PropagateResult {
    bool consistent = false;
    PartialAssignment state;
};

inline PropagateResult propagate(const SearchProblem& p, const PartialAssignment& input) {
    validate_problem(p);
    const Labeling l = search_labeling(p);
    const int order = 1 << p.n;
    if (input.order != order || input.pairs.size() != static_cast<std::size_t>(order) * (order - 1) / 2)
        throw std::invalid_argument("propagate: partial assignment has wrong shape");
    SearchProblem q = p;
    q.symmetry_breaking = false;
    detail::SearchEngine engine(q, l);
    bool ok = true;
    for (int u = 0; u < order && ok; ++u)
        for (int v = u + 1; v < order && ok; ++v)
            if (const EdgeState s = input.get(u, v); s != EdgeState::unknown)
                ok = engine.assign(u, v, s);
    for (int v = 0; v < order && ok; ++v)
        engine.mark_dirty(v); // tight degree bounds can force even at blank vertices
    ok = ok && engine.propagate();
    PropagateResult result;
    result.consistent = ok;
    result.state = PartialAssignment::blank(order);
    if (ok)
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                result.state.set(u, v, engine.pair_state(u, v));
    return result;
}

} // namespace xormagic
