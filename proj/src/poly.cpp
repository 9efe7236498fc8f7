#include "schurlc/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace schurlc {

namespace {
const Int kZero = 0;
}

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<Int> coeffs) {
    IntPolynomial p;
    p.coeffs_ = std::move(coeffs);
    while (!p.coeffs_.empty() && p.coeffs_.back() == 0) p.coeffs_.pop_back();
    return p;
}

const Int& IntPolynomial::coeff(long j) const {
    if (j < 0 || j >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[j];
}

std::string IntPolynomial::to_display() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (long j = 0; j <= degree(); ++j) {
        const Int& c = coeffs_[j];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (j == 0 || !unit) out += a.get_str();
        if (j >= 1) out += "t";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out;
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<Int> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p.coeffs()[i];
    for (size_t i = 0; i < q.coeffs().size(); ++i) c[i] += q.coeffs()[i];
    return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial poly_product(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Int> c(p.coeffs().size() + q.coeffs().size() - 1, 0);
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        for (size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial poly_shift(const IntPolynomial& p, long k) {
    if (p.is_zero()) return {};
    std::vector<Int> c(p.coeffs().size() + k, 0);
    for (size_t i = 0; i < p.coeffs().size(); ++i) c[i + k] = p.coeffs()[i];
    return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial binomial_poly(long n) {
    std::vector<Int> c(n + 1);
    for (long k = 0; k <= n; ++k) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        c[k] = b;
    }
    return IntPolynomial::from_coeffs(std::move(c));
}

namespace {

// Subproblems are vertex subsets of the top-level graph, encoded as bitmask
// blocks so memo keys stay stable under the recursion.
using Mask = std::vector<std::uint64_t>;

struct MaskHash {
    size_t operator()(const Mask& m) const {
        size_t h = m.size();
        for (auto b : m) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct IndepEngine {
    int n;
    std::vector<Mask> adj;
    std::unordered_map<Mask, IntPolynomial, MaskHash> memo;

    explicit IndepEngine(const Graph& g) : n(g.vertex_count()) {
        size_t blocks = (n + 63) / 64;
        adj.assign(n, Mask(blocks, 0));
        for (auto [u, v] : g.edges()) {
            adj[u][v / 64] |= std::uint64_t{1} << (v % 64);
            adj[v][u / 64] |= std::uint64_t{1} << (u % 64);
        }
    }

    static bool test(const Mask& m, int v) { return (m[v / 64] >> (v % 64)) & 1; }
    static void clear(Mask& m, int v) { m[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    int degree_in(const Mask& m, int v) const {
        int d = 0;
        for (size_t b = 0; b < m.size(); ++b) d += __builtin_popcountll(adj[v][b] & m[b]);
        return d;
    }

    IntPolynomial solve(const Mask& mask) {
        int count = 0;
        for (auto b : mask) count += __builtin_popcountll(b);
        if (count == 0) return IntPolynomial::constant(1);

        int pivot = -1, pivot_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (!test(mask, v)) continue;
            int d = degree_in(mask, v);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        if (pivot_deg == 0) return binomial_poly(count);

        if (auto it = memo.find(mask); it != memo.end()) return it->second;

        // split across connected components of the induced subgraph
        Mask seen(mask.size(), 0);
        std::vector<Mask> comps;
        for (int s = 0; s < n; ++s) {
            if (!test(mask, s) || test(seen, s)) continue;
            Mask comp(mask.size(), 0);
            std::vector<int> stack{s};
            comp[s / 64] |= std::uint64_t{1} << (s % 64);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (size_t b = 0; b < mask.size(); ++b) {
                    std::uint64_t cand = adj[v][b] & mask[b] & ~comp[b];
                    while (cand) {
                        int w = static_cast<int>(b * 64 + __builtin_ctzll(cand));
                        cand &= cand - 1;
                        comp[w / 64] |= std::uint64_t{1} << (w % 64);
                        stack.push_back(w);
                    }
                }
            }
            for (size_t b = 0; b < mask.size(); ++b) seen[b] |= comp[b];
            comps.push_back(std::move(comp));
        }

        IntPolynomial result;
        if (comps.size() > 1) {
            result = IntPolynomial::constant(1);
            for (const auto& comp : comps) result = poly_product(result, solve(comp));
        } else {
            Mask without_v = mask;
            clear(without_v, pivot);
            Mask without_nv = without_v;
            for (size_t b = 0; b < mask.size(); ++b) without_nv[b] &= ~adj[pivot][b];
            result = poly_add(solve(without_v), poly_shift(solve(without_nv), 1));
        }
        memo.emplace(mask, result);
        return result;
    }
};

} // namespace

IntPolynomial indep_poly(const Graph& g) {
    IndepEngine engine(g);
    Mask all((g.vertex_count() + 63) / 64, 0);
    for (int v = 0; v < g.vertex_count(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    return engine.solve(all);
}

IntPolynomial indep_poly_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    if (n > 25) fail(ErrorCode::TooLarge, "brute-force guard at 25 vertices, got " + std::to_string(n));
    std::vector<std::uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_bits(v);

    std::vector<Int> counts(n + 1, 0);
    counts[0] = 1;   // empty set
    // enumerate independent sets directly: extend by vertices above the last
    // chosen one whose neighborhoods avoid the current set
    struct Frame { std::uint64_t allowed; int size; };
    std::vector<Frame> stack{{(n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1), 0}};
    while (!stack.empty()) {
        auto [allowed, size] = stack.back();
        stack.pop_back();
        std::uint64_t rest = allowed;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            counts[size + 1] += 1;
            stack.push_back({rest & ~nbr[v], size + 1});
        }
    }
    return IntPolynomial::from_coeffs(std::move(counts));
}

Certificate is_log_concave(const IntPolynomial& p) {
    Certificate cert{CertKind::LogConcave, true, {}, {}, {}, {}};
    for (long j = 1; j + 1 <= p.degree(); ++j) {
        if (p.coeff(j) * p.coeff(j) < p.coeff(j - 1) * p.coeff(j + 1)) {
            cert.holds = false;
            cert.index = j;
            return cert;
        }
    }
    return cert;
}

Certificate is_strongly_log_concave(const IntPolynomial& p) {
    Certificate cert{CertKind::StronglyLogConcave, true, {}, {}, {}, {}};
    // 1x1 minors: the coefficients themselves
    for (long j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j) < 0) {
            cert.holds = false;
            cert.index = j;
            return cert;
        }
    }
    long top = p.degree() + 1;   // all larger minors involve only zeros
    for (long q = 1; q <= top; ++q)
        for (long pp = 0; pp + 2 <= q; ++pp)
            for (long m = pp + 1; 2 * m <= pp + q; ++m) {
                long nn = pp + q - m;
                if (p.coeff(m) * p.coeff(nn) < p.coeff(pp) * p.coeff(q)) {
                    cert.holds = false;
                    cert.quadruple = {pp, m, nn, q};
                    return cert;
                }
            }
    return cert;
}

Certificate is_unimodal(const IntPolynomial& p) {
    Certificate cert{CertKind::Unimodal, true, {}, {}, {}, {}};
    long descent = -1;
    long mode = 0;
    for (long j = 0; j + 1 <= p.degree(); ++j) {
        if (p.coeff(j + 1) < p.coeff(j)) {
            if (descent < 0) descent = j;
        } else if (p.coeff(j + 1) > p.coeff(j)) {
            if (descent >= 0) {
                cert.holds = false;
                cert.dip = {descent, j + 1};
                return cert;
            }
            mode = j + 1;
        }
    }
    cert.mode = mode;
    return cert;
}

} // namespace schurlc
