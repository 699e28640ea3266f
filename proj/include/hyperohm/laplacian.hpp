#pragma once
// laplacian.hpp - exact effective resistance by solving the reduced graph
// Laplacian with fraction-free (Bareiss) elimination.
//
// Grounding convention: vertex b is grounded (its row and column deleted),
// the system L' x = e_a is solved over the connected component containing a
// and b, and x_a is the resistance. Conductance denominators are cleared
// first so the elimination runs on integers throughout; divisions inside the
// Bareiss update are exact. Pivoting takes the first nonzero entry in the
// column; for a connected component the reduced Laplacian is positive
// definite, so the natural pivot never vanishes and results are reproducible
// bit for bit.

#include <hyperohm/graph.hpp>
#include <hyperohm/rational.hpp>
#include <hyperohm/resistance.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperohm {

class InfiniteResistanceError : public std::domain_error {
public:
    InfiniteResistanceError(unsigned a, unsigned b)
        : std::domain_error("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                            " are in different connected components (infinite resistance)") {}
};

namespace detail {

// Solve M x = rhs exactly for dense integer M via Bareiss elimination with
// rational back substitution. M is consumed.
inline std::vector<Rational> solve_fraction_free(std::vector<std::vector<Int>>& m,
                                                 std::vector<Int>& rhs) {
    const size_t dim = m.size();
    Int prev_pivot = 1;
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && m[piv][col] == 0) ++piv;
        if (piv == dim) throw std::domain_error("solve_fraction_free: singular matrix");
        if (piv != col) {
            std::swap(m[piv], m[col]);
            std::swap(rhs[piv], rhs[col]);
        }
        for (size_t row = col + 1; row < dim; ++row) {
            for (size_t j = col + 1; j < dim; ++j)
                m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / prev_pivot;
            rhs[row] = (rhs[row] * m[col][col] - m[row][col] * rhs[col]) / prev_pivot;
            m[row][col] = 0;
        }
        prev_pivot = m[col][col];
    }
    std::vector<Rational> x(dim);
    for (size_t i = dim; i-- > 0;) {
        Rational acc(rhs[i]);
        for (size_t j = i + 1; j < dim; ++j) acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

}  // namespace detail

// Exact potential difference per unit current injected at a and extracted
// at b; symmetric in (a, b). Throws InfiniteResistanceError when a and b are
// not connected.
inline Rational effective_resistance(const WeightedGraph& g, unsigned a, unsigned b) {
    if (a >= g.vertex_count() || b >= g.vertex_count())
        throw std::invalid_argument("effective_resistance: vertex index out of range");
    if (a == b)
        throw std::invalid_argument("effective_resistance: endpoints must be distinct");

    // adjacency over edge indices
    std::vector<std::vector<unsigned>> incident(g.vertex_count());
    for (unsigned i = 0; i < g.edges().size(); ++i) {
        incident[g.edges()[i].u].push_back(i);
        incident[g.edges()[i].v].push_back(i);
    }

    // component of b (BFS)
    std::vector<int> comp_pos(g.vertex_count(), -1);
    std::vector<unsigned> component{b};
    comp_pos[b] = 0;
    for (size_t head = 0; head < component.size(); ++head) {
        unsigned at = component[head];
        for (unsigned ei : incident[at]) {
            const auto& e = g.edges()[ei];
            unsigned other = (e.u == at) ? e.v : e.u;
            if (comp_pos[other] < 0) {
                comp_pos[other] = static_cast<int>(component.size());
                component.push_back(other);
            }
        }
    }
    if (comp_pos[a] < 0) throw InfiniteResistanceError(a, b);

    // clear denominators: D = lcm of conductance denominators in the component
    Int d = 1;
    for (const auto& e : g.edges())
        if (comp_pos[e.u] >= 0) d = lcm(d, e.conductance.den());

    // reduced integer Laplacian over the component, with b (slot 0) deleted;
    // vertex at component[i] maps to matrix index i-1
    const size_t dim = component.size() - 1;
    std::vector<std::vector<Int>> m(dim, std::vector<Int>(dim, Int(0)));
    std::vector<Int> rhs(dim, Int(0));
    for (const auto& e : g.edges()) {
        if (comp_pos[e.u] < 0) continue;
        Int w = e.conductance.num() * (d / e.conductance.den());
        int iu = comp_pos[e.u] - 1, iv = comp_pos[e.v] - 1;
        if (iu >= 0) m[iu][iu] += w;
        if (iv >= 0) m[iv][iv] += w;
        if (iu >= 0 && iv >= 0) {
            m[iu][iv] -= w;
            m[iv][iu] -= w;
        }
    }
    rhs[comp_pos[a] - 1] = d;  // solving (D L') x = D e_a

    std::vector<Rational> x = detail::solve_fraction_free(m, rhs);
    return x[comp_pos[a] - 1];
}

// ---------------------------------------------------------------------------
// Formula verification against the oracle
// ---------------------------------------------------------------------------

struct FormulaCell {
    unsigned n = 0;
    unsigned k = 0;
    Rational formula;  // closed form R_{n,k}
    Rational oracle;   // Laplacian effective resistance
    bool match = false;
    unsigned spot_checks = 0;  // extra random same-distance pairs, all equal
};

struct FormulaReport {
    std::vector<FormulaCell> cells;  // sorted by (n, k)
    bool all_match = true;
};

// For every 1 <= n <= n_max, 1 <= k <= n: compare the closed form with the
// exact Laplacian resistance between vertex 0 and the vertex with k low bits
// set, plus `spot_checks` random vertex pairs at Hamming distance k (the
// resistance must depend on the distance only). The default guard keeps the
// largest solve at 128 x 128; pass allow_large = true to lift it.
inline FormulaReport verify_formula(unsigned n_max, unsigned spot_checks = 3,
                                    bool allow_large = false,
                                    std::uint64_t seed = 0x9e3779b97f4a7c15ull) {
    if (n_max < 1) throw std::domain_error("verify_formula: n_max must be >= 1");
    if (n_max > 7 && !allow_large)
        throw std::domain_error(
            "verify_formula: n_max > 7 requires the explicit large-size override");

    std::mt19937_64 rng(seed);
    FormulaReport report;
    for (unsigned n = 1; n <= n_max; ++n) {
        WeightedGraph g = hypercube_graph(n);
        for (unsigned k = 1; k <= n; ++k) {
            FormulaCell cell;
            cell.n = n;
            cell.k = k;
            cell.formula = resistance_pair(n, k);
            unsigned target = (k == 32) ? ~0u : ((1u << k) - 1);
            cell.oracle = effective_resistance(g, 0, target);
            cell.match = (cell.formula == cell.oracle);

            for (unsigned t = 0; cell.match && t < spot_checks; ++t) {
                unsigned a = static_cast<unsigned>(rng() & ((1ull << n) - 1));
                // random vertex at Hamming distance exactly k from a
                std::vector<unsigned> bits(n);
                for (unsigned i = 0; i < n; ++i) bits[i] = i;
                std::shuffle(bits.begin(), bits.end(), rng);
                unsigned bvert = a;
                for (unsigned i = 0; i < k; ++i) bvert ^= 1u << bits[i];
                cell.match = (effective_resistance(g, a, bvert) == cell.formula);
                ++cell.spot_checks;
            }
            report.all_match = report.all_match && cell.match;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace hyperohm
