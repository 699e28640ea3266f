#pragma once
// graph.hpp - undirected conductance-weighted graphs, hypercube construction,
// and the plain edge-list text format.

#include <hyperohm/rational.hpp>

#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperohm {

struct WeightedEdge {
    unsigned u = 0;
    unsigned v = 0;  // u < v always
    Rational conductance;
};

// Vertex count plus undirected weighted edge list. Edges are stored with
// u < v, duplicates rejected, conductances strictly positive. Connectivity
// is not an invariant; the solver checks it per query.
class WeightedGraph {
public:
    explicit WeightedGraph(unsigned vertex_count) : vertex_count_(vertex_count) {
        if (vertex_count == 0)
            throw std::invalid_argument("WeightedGraph: vertex count must be >= 1");
    }

    unsigned vertex_count() const noexcept { return vertex_count_; }
    const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }

    void add_edge(unsigned u, unsigned v, Rational conductance) {
        if (u == v) throw std::invalid_argument("WeightedGraph: self-loop rejected");
        if (u >= vertex_count_ || v >= vertex_count_)
            throw std::invalid_argument("WeightedGraph: vertex index out of range");
        if (!(conductance > Rational(0)))
            throw std::invalid_argument("WeightedGraph: conductance must be positive");
        if (u > v) std::swap(u, v);
        if (!seen_.insert({u, v}).second)
            throw std::invalid_argument("WeightedGraph: duplicate edge");
        edges_.push_back({u, v, std::move(conductance)});
    }

private:
    unsigned vertex_count_;
    std::vector<WeightedEdge> edges_;
    std::set<std::pair<unsigned, unsigned>> seen_;
};

// Q_n: 2^n vertices indexed by bit patterns, an edge of conductance 1
// between every pair at Hamming distance 1; n 2^(n-1) edges in total.
// Guarded at n <= 16 (beyond that the dense solver is not a sensible tool).
inline WeightedGraph hypercube_graph(unsigned n, unsigned max_n = 16) {
    if (n < 1 || n > max_n)
        throw std::domain_error("hypercube_graph: dimension out of range [1, " +
                                std::to_string(max_n) + "]");
    WeightedGraph g(1u << n);
    for (unsigned u = 0; u < (1u << n); ++u)
        for (unsigned b = 0; b < n; ++b) {
            unsigned v = u ^ (1u << b);
            if (u < v) g.add_edge(u, v, Rational(1));
        }
    return g;
}

namespace detail {

inline Rational parse_rational_token(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(tok));
        return Rational(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + tok + "'");
    }
}

}  // namespace detail

// Plain edge-list format:
//   p <vertex_count>
//   e <u> <v> <conductance as p/q or integer>
// Empty lines and lines starting with '#' are ignored. Malformed input is
// rejected with the offending line number.
inline WeightedGraph parse_edge_list(std::istream& in) {
    std::string line;
    unsigned line_no = 0;
    bool have_header = false;
    unsigned vertex_count = 0;
    std::vector<std::tuple<unsigned, unsigned, Rational, unsigned>> pending;

    auto fail = [&](const std::string& what) {
        throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag[0] == '#') continue;
        if (tag == "p") {
            if (have_header) fail("duplicate 'p' header");
            long long count = -1;
            if (!(ls >> count) || count < 1) fail("expected 'p <vertex_count>'");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after vertex count");
            vertex_count = static_cast<unsigned>(count);
            have_header = true;
        } else if (tag == "e") {
            long long u = -1, v = -1;
            std::string cond;
            if (!(ls >> u >> v >> cond) || u < 0 || v < 0)
                fail("expected 'e <u> <v> <conductance>'");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after edge");
            Rational c;
            try {
                c = detail::parse_rational_token(cond);
            } catch (const std::exception& e) {
                fail(e.what());
            }
            pending.emplace_back(static_cast<unsigned>(u), static_cast<unsigned>(v),
                                 std::move(c), line_no);
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    if (!have_header) {
        line_no = 0;
        fail("missing 'p <vertex_count>' header");
    }

    WeightedGraph g(vertex_count);
    for (auto& [u, v, c, at_line] : pending) {
        line_no = at_line;
        try {
            g.add_edge(u, v, std::move(c));
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            const std::string prefix = "WeightedGraph: ";
            if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
            fail(what);
        }
    }
    return g;
}

}  // namespace hyperohm
