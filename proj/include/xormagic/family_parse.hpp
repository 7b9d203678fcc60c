#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xormagic/families.hpp"

namespace xormagic {

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline int parse_int(const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size())
        throw std::invalid_argument("bad integer in family spec: " + s);
    return v;
}

} // namespace detail

// Grammar used by the CLI:
//   circulant:m:s1,s2,...   hypercube:n   mobius:n   andrasfai:r
//   doob:r:t                powercycle:m:r
//   complement(<family>)    cartesian(<f>,<g>)   strong(<f>,<g>)
inline Graph parse_family(const std::string& spec_in) {
    std::string spec = spec_in;
    spec.erase(std::remove_if(spec.begin(), spec.end(), [](char c) { return c == ' '; }), spec.end());
    if (spec.empty())
        throw std::invalid_argument("empty family spec");

    const auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')')
            throw std::invalid_argument("unbalanced parentheses in family spec: " + spec_in);
        const std::string head = spec.substr(0, open);
        const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
        const auto args = detail::split_top_level(inner, ',');
        if (head == "complement") {
            if (args.size() != 1)
                throw std::invalid_argument("complement takes one family");
            return parse_family(args[0]).complement();
        }
        if (head == "cartesian" || head == "strong") {
            if (args.size() != 2)
                throw std::invalid_argument(head + " takes two families");
            const Graph g = parse_family(args[0]);
            const Graph h = parse_family(args[1]);
            return head == "cartesian" ? cartesian_product(g, h) : strong_product(g, h);
        }
        throw std::invalid_argument("unknown family function: " + head);
    }

    const auto fields = detail::split_top_level(spec, ':');
    const std::string& name = fields[0];
    auto want = [&](std::size_t n) {
        if (fields.size() != n + 1)
            throw std::invalid_argument(name + " expects " + std::to_string(n) + " parameter(s)");
    };
    if (name == "circulant") {
        want(2);
        std::vector<int> dists;
        for (const std::string& part : detail::split_top_level(fields[2], ','))
            dists.push_back(detail::parse_int(part));
        return circulant(detail::parse_int(fields[1]), dists);
    }
    if (name == "hypercube") {
        want(1);
        return hypercube(detail::parse_int(fields[1]));
    }
    if (name == "mobius") {
        want(1);
        return mobius_ladder(detail::parse_int(fields[1]));
    }
    if (name == "andrasfai") {
        want(1);
        return andrasfai(detail::parse_int(fields[1]));
    }
    if (name == "doob") {
        want(2);
        return doob(detail::parse_int(fields[1]), detail::parse_int(fields[2]));
    }
    if (name == "powercycle") {
        want(2);
        return power_of_cycle(detail::parse_int(fields[1]), detail::parse_int(fields[2]));
    }
    throw std::invalid_argument("unknown family: " + name);
}

} // namespace xormagic
