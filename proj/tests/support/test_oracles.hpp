#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <random>

#include "schurlc/chromatic.hpp"
#include "schurlc/graph.hpp"
#include "schurlc/poly.hpp"
#include "schurlc/schur2.hpp"

namespace schurlc::testing {

/// X_G evaluated at two variables: enumerate all maps V -> {1,2} that are
/// proper and record the color multiplicities. Independent of the stable
/// partition route.
inline TwoVarPoly two_coloring_evaluation(const Graph& g) {
    int n = g.vertex_count();
    TwoVarPoly out;
    if (n == 0) {
        out.add_mono(0, 0, 1);
        return out;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) {
                proper = false;
                break;
            }
        if (!proper) continue;
        int c1 = __builtin_popcountll(mask), c2 = n - c1;
        if (c1 >= c2) out.add_mono(c1, c2, 1);   // the c1 < c2 maps mirror these
    }
    return out;
}

inline TwoRowProfile two_row_x_by_coloring(const Graph& g) {
    return twovar_to_profile(two_coloring_evaluation(g));
}

/// Independence counts by scanning every subset; doubly naive.
inline IntPolynomial indep_poly_subsets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_bits(v);
    std::vector<Int> counts(n + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::uint64_t rest = mask; rest && ok;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (nbr[v] & mask) ok = false;
        }
        if (ok) counts[__builtin_popcountll(mask)] += 1;
    }
    return IntPolynomial::from_coeffs(std::move(counts));
}

/// F_P at two variables is P(x) P(y); expand and convert. The evaluation
/// oracle for fp_profile.
inline TwoRowProfile fp_profile_by_evaluation(const IntPolynomial& p, long dmax) {
    TwoVarPoly eval;
    for (long i = 0; i <= p.degree(); ++i)
        for (long j = 0; j <= p.degree(); ++j) {
            if (i + j > dmax || i < j) continue;
            eval.add_mono(i, j, Rat(p.coeff(i) * p.coeff(j)));
        }
    TwoRowProfile prof = twovar_to_profile(eval);
    // drop slots whose data was cut off by the cap
    TwoRowProfile out;
    for (const auto& [pt, c] : prof.entries())
        if (pt.degree() <= dmax) out.set(pt, c);
    return out;
}

inline TwoRowProfile random_profile(std::mt19937_64& rng, long max_degree) {
    TwoRowProfile out;
    int terms = static_cast<int>(rng() % 6) + 1;
    for (int t = 0; t < terms; ++t) {
        long k = static_cast<long>(rng() % (max_degree + 1));
        long l = static_cast<long>(rng() % (k + 1));
        if (k + l > max_degree) l = std::max(0L, max_degree - k);
        long num = static_cast<long>(rng() % 21) - 10;
        long den = static_cast<long>(rng() % 6) + 1;
        Rat c(num, den);
        c.canonicalize();
        out.add({k, l}, c);
    }
    return out;
}

inline IntPolynomial random_poly_with_unit_constant(std::mt19937_64& rng, long max_degree) {
    long d = static_cast<long>(rng() % (max_degree + 1));
    std::vector<Int> c(d + 1);
    c[0] = 1;
    for (long i = 1; i <= d; ++i) c[i] = static_cast<long>(rng() % 13) - 4;
    return IntPolynomial::from_coeffs(std::move(c));
}

} // namespace schurlc::testing
