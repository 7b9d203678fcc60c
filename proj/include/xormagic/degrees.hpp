#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace xormagic {

enum class Parity { open_odd, closed_even };

inline const char* to_string(Parity p) { return p == Parity::open_odd ? "open-odd" : "closed-even"; }

struct RuleSet {
    bool cartesian = false;
    bool strong = false;
    bool complement = false;

    bool any() const { return cartesian || strong || complement; }
};

struct FactKey {
    int power;
    Parity parity;
    int degree;

    auto operator<=>(const FactKey&) const = default;
};

// How a degree fact was obtained; product rules reference their factors so
// every claimed degree carries an auditable derivation tree.
struct Derivation {
    enum class Rule { base, cartesian, strong, complement };
    Rule rule = Rule::base;
    std::string provenance;             // base facts only
    std::optional<FactKey> left, right; // factors (complement uses left only)
};

using FactTable = std::map<FactKey, Derivation>;

// Existence facts for the powers 4..7: the known degree lists for odd-regular
// open and even-regular closed XOR-magic graphs that the closure starts from.
inline FactTable default_degree_facts() {
    FactTable facts;
    auto add = [&facts](int power, Parity parity, std::vector<int> degrees, const char* src) {
        for (int d : degrees)
            facts[{power, parity, d}] = Derivation{Derivation::Rule::base, src, {}, {}};
    };
    add(4, Parity::open_odd, {5, 7, 9, 11}, "base list, power 4");
    add(5, Parity::open_odd, {5, 7, 9, 11, 13, 15, 27}, "base list, power 5");
    add(6, Parity::open_odd, {9}, "base list, power 6");
    add(7, Parity::open_odd, {13}, "base list, power 7");
    add(4, Parity::closed_even, {4, 6, 8, 10}, "base list, power 4");
    add(5, Parity::closed_even, {4, 16, 18, 20, 22, 24, 26}, "base list, power 5");
    add(6, Parity::closed_even, {54}, "base list, power 6");
    add(7, Parity::closed_even, {114}, "base list, power 7");
    return facts;
}

struct ReachableDegrees {
    int n_target = 0;
    Parity parity = Parity::open_odd;
    std::set<int> degrees;
    FactTable table; // full closure, for expanding traces
};

// Closure of the fact base under the product rules, working upward through
// the powers; the complement rule applies at the target power only, guarded
// by the minimum-degree connectivity bound delta >= (m-1)/2.
inline ReachableDegrees reachable_degrees(int n_target, Parity parity, RuleSet rules,
                                          const FactTable& base = default_degree_facts()) {
    if (n_target < 4)
        throw std::invalid_argument("reachable_degrees needs n_target >= 4");
    if (!rules.any())
        throw std::invalid_argument("reachable_degrees needs a non-empty rule set");

    FactTable table = base;
    auto put = [&table](FactKey key, Derivation d) {
        table.emplace(key, std::move(d)); // first derivation wins
    };
    auto degrees_at = [&table](int power, Parity par) {
        std::vector<FactKey> keys;
        for (const auto& [key, der] : table)
            if (key.power == power && key.parity == par)
                keys.push_back(key);
        return keys;
    };

    for (int p = 8; p <= n_target; ++p) {
        for (int a = 4; a + 4 <= p; ++a) {
            const int b = p - a;
            if (rules.cartesian) {
                for (const FactKey& x : degrees_at(a, Parity::open_odd))
                    for (const FactKey& y : degrees_at(b, Parity::closed_even))
                        put({p, Parity::open_odd, x.degree + y.degree},
                            {Derivation::Rule::cartesian, "", x, y});
                for (const FactKey& x : degrees_at(a, Parity::closed_even))
                    for (const FactKey& y : degrees_at(b, Parity::closed_even))
                        put({p, Parity::closed_even, x.degree + y.degree},
                            {Derivation::Rule::cartesian, "", x, y});
                for (const FactKey& x : degrees_at(a, Parity::open_odd))
                    for (const FactKey& y : degrees_at(b, Parity::open_odd))
                        put({p, Parity::closed_even, x.degree + y.degree},
                            {Derivation::Rule::cartesian, "", x, y});
            }
            if (rules.strong) {
                for (const FactKey& x : degrees_at(a, Parity::closed_even))
                    for (const FactKey& y : degrees_at(b, Parity::closed_even))
                        put({p, Parity::closed_even, x.degree * y.degree + x.degree + y.degree},
                            {Derivation::Rule::strong, "", x, y});
            }
        }
    }

    if (rules.complement) {
        const long long m = 1LL << n_target;
        for (const Parity from : {Parity::open_odd, Parity::closed_even}) {
            const Parity to = from == Parity::open_odd ? Parity::closed_even : Parity::open_odd;
            for (const FactKey& x : degrees_at(n_target, from)) {
                const long long d = m - 1 - x.degree;
                if (2 * d >= m - 1) // complement is connected by the delta bound
                    put({n_target, to, static_cast<int>(d)},
                        {Derivation::Rule::complement, "", x, {}});
            }
        }
    }

    ReachableDegrees out;
    out.n_target = n_target;
    out.parity = parity;
    out.table = std::move(table);
    for (const auto& [key, der] : out.table)
        if (key.power == n_target && key.parity == parity)
            out.degrees.insert(key.degree);
    return out;
}

inline std::string format_trace(const FactTable& table, const FactKey& key) {
    const auto it = table.find(key);
    if (it == table.end())
        throw std::invalid_argument("no derivation recorded for the requested degree");
    std::ostringstream out;
    out << to_string(key.parity) << " " << key.power << ":" << key.degree;
    const Derivation& d = it->second;
    switch (d.rule) {
    case Derivation::Rule::base:
        out << " [" << d.provenance << "]";
        break;
    case Derivation::Rule::cartesian:
        out << " = cartesian(" << format_trace(table, *d.left) << ", " << format_trace(table, *d.right)
            << ")";
        break;
    case Derivation::Rule::strong:
        out << " = strong(" << format_trace(table, *d.left) << ", " << format_trace(table, *d.right)
            << ")";
        break;
    case Derivation::Rule::complement:
        out << " = complement(" << format_trace(table, *d.left) << ")";
        break;
    }
    return out.str();
}

} // namespace xormagic
