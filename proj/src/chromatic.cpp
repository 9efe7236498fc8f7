#include "schurlc/chromatic.hpp"

#include <algorithm>

namespace schurlc {

long long StableTypeCounts::at(Partition2 p) const {
    auto it = counts.find(p);
    return it == counts.end() ? 0 : it->second;
}

StableTypeCounts stable_two_block_counts(const Graph& g) {
    int n = g.vertex_count();
    if (n > 25) fail(ErrorCode::TooLarge, "stable partition guard at 25 vertices");
    StableTypeCounts out;
    out.whole_count = (n >= 1 && g.edgeless()) ? 1 : 0;
    if (n < 2) return out;

    std::vector<std::uint64_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_bits(v);
    auto independent = [&](std::uint64_t s) {
        for (std::uint64_t rest = s; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (nbr[v] & s) return false;
        }
        return true;
    };

    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    // subsets containing vertex 0 visit each unordered pair {S, V\S} once
    for (std::uint64_t s = 1; s < full; s += 2) {
        if (!independent(s) || !independent(full & ~s)) continue;
        int size = __builtin_popcountll(s);
        int k = std::max(size, n - size), l = std::min(size, n - size);
        out.counts[{k, l}] += (k == l) ? 2 : 1;
    }
    return out;
}

TwoRowProfile two_row_X(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return TwoRowProfile::unit();
    StableTypeCounts counts = stable_two_block_counts(g);
    TwoRowProfile out;
    if (counts.whole_count != 0) out.set({n, 0}, Rat(Int(static_cast<long>(counts.whole_count))));
    for (long l = 1; 2 * l <= n; ++l) {
        long k = n - l;
        long long above = (l == 1) ? counts.whole_count : counts.at({k + 1, l - 1});
        long long e = counts.at({k, l}) - above;
        if (e != 0) out.set({k, l}, Rat(Int(static_cast<long>(e))));
    }
    return out;
}

namespace {

TwoRowProfile connected_two_row_x(const Graph& comp) {
    TwoRowProfile out;
    int n = comp.vertex_count();
    if (n == 0) return TwoRowProfile::unit();
    if (n == 1) {
        out.set({1, 0}, 1);
        return out;
    }
    BipartitionResult bp = find_bipartition(comp);
    if (!bp.bipartition) return out;   // odd cycle: no stable 2-partition at all
    auto [k, l] = bp.bipartition->type();
    if (k == l) {
        out.set({k, l}, 2);
    } else if (k == l + 1) {
        out.set({k, l}, 1);
    } else {
        out.set({k, l}, 1);
        out.set({k - 1, l + 1}, -1);
    }
    return out;
}

} // namespace

TwoRowProfile two_row_x_fast(const Graph& g) {
    TwoRowProfile out = TwoRowProfile::unit();
    for (const auto& comp : connected_components(g)) {
        TwoRowProfile part = connected_two_row_x(comp.graph);
        if (part.is_zero()) return TwoRowProfile{};
        out = profile_product(out, part);
    }
    return out;
}

namespace {

Rat weight_factorial_inverse(const WeightMap& alpha) {
    Int denom = 1;
    for (int w : alpha) denom *= int_factorial(w);
    Rat inv(Int(1), denom);
    inv.canonicalize();
    return inv;
}

} // namespace

TwoRowProfile two_row_X_alpha(const Graph& g, const WeightMap& alpha) {
    if (weight_total(alpha) > 25) fail(ErrorCode::TooLarge, "clan guard at |alpha| = 25");
    ClanGraph clan = clan_graph(g, alpha);
    return profile_scale(weight_factorial_inverse(alpha), two_row_X(clan.graph));
}

TwoRowProfile two_row_x_alpha_fast(const Graph& g, const WeightMap& alpha) {
    ClanGraph clan = clan_graph(g, alpha);
    return profile_scale(weight_factorial_inverse(alpha), two_row_x_fast(clan.graph));
}

TwoRowProfile two_row_Y_fast(const Graph& g) {
    IntPolynomial ip = indep_poly(g);
    return fp_profile(ip, 2 * std::max(ip.degree(), 0L) + 2);
}

namespace {

void enumerate_compositions(int slots, long total, WeightMap& acc, int at,
                            const std::function<void(const WeightMap&)>& visit) {
    if (at == slots - 1) {
        acc[at] = static_cast<int>(total);
        visit(acc);
        return;
    }
    for (long w = total; w >= 0; --w) {
        acc[at] = static_cast<int>(w);
        enumerate_compositions(slots, total - w, acc, at + 1, visit);
    }
}

void check_oracle_guards(int n, long d) {
    if (d > 12) fail(ErrorCode::TooLarge, "weight-map degree guard at 12");
    if (n > 10) fail(ErrorCode::TooLarge, "weight-map vertex guard at 10");
    if (d < 0) fail(ErrorCode::OutOfRange, "negative degree");
}

} // namespace

void enumerate_weight_maps(const Graph& g, long total,
                           const std::function<void(const WeightMap&)>& visit) {
    int n = g.vertex_count();
    check_oracle_guards(n, total);
    if (n == 0) {
        if (total == 0) visit(WeightMap{});
        return;
    }
    WeightMap acc(n, 0);
    enumerate_compositions(n, total, acc, 0, visit);
}

long long count_weight_maps(int n_vertices, long total) {
    // compositions of total into n_vertices nonnegative parts
    if (n_vertices == 0) return total == 0 ? 1 : 0;
    long long c = 1;
    for (long i = 1; i < n_vertices; ++i)
        c = c * (total + i) / i;
    return c;
}

TwoRowProfile two_row_Y_oracle(const Graph& g, long d) {
    check_oracle_guards(g.vertex_count(), d);
    TwoRowProfile sum;
    enumerate_weight_maps(g, d, [&](const WeightMap& alpha) {
        sum = profile_add(sum, two_row_X_alpha(g, alpha));
    });
    return sum.slice(d);
}

} // namespace schurlc
