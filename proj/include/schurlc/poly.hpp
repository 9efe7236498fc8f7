#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schurlc/graph.hpp"
#include "schurlc/numbers.hpp"

namespace schurlc {

/// Dense exact-integer polynomial; index = degree, trailing coefficient
/// nonzero (the zero polynomial has no coefficients).
class IntPolynomial {
public:
    IntPolynomial() = default;
    static IntPolynomial constant(Int c);
    static IntPolynomial from_coeffs(std::vector<Int> coeffs);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }   // -1 for zero
    const Int& coeff(long j) const;   // 0 outside support
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    bool operator==(const IntPolynomial&) const = default;

    std::string to_display() const;   // "1 + 4t + 3t^2 + t^3"

private:
    std::vector<Int> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_product(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_shift(const IntPolynomial& p, long k);   // multiply by t^k
IntPolynomial binomial_poly(long n);                        // (1+t)^n

/// Independence polynomial via the deletion recurrence on a max-degree
/// vertex, splitting multiplicatively over connected components and
/// short-circuiting edgeless graphs to (1+t)^n. Memoized per call; pure.
IntPolynomial indep_poly(const Graph& g);

/// Counts independent sets directly, without the deletion recurrence.
/// This is the oracle for indep_poly. TooLarge beyond 25 vertices.
IntPolynomial indep_poly_bruteforce(const Graph& g);

enum class CertKind { LogConcave, StronglyLogConcave, Unimodal };

/// Verdict plus a witness that recomputes to a strict violation when the
/// property fails.
struct Certificate {
    CertKind kind = CertKind::LogConcave;
    bool holds = false;
    std::optional<long> index;                      // failing j (or a negative coefficient)
    std::optional<std::array<long, 4>> quadruple;   // strong LC: (p, m, n, q)
    std::optional<std::pair<long, long>> dip;       // unimodal: (descent, later ascent)
    std::optional<long> mode;                       // unimodal: mode index
};

/// a_j^2 >= a_{j-1} a_{j+1} for all internal j (literal inequality, no
/// positivity assumption).
Certificate is_log_concave(const IntPolynomial& p);

/// All Toeplitz minors of order <= 2 nonnegative: a_m a_n >= a_p a_q for all
/// p < m <= n < q with m+n = p+q. Indices are clamped to degree+1; larger
/// minors involve only zeros, so the certificate is finite and reproducible.
Certificate is_strongly_log_concave(const IntPolynomial& p);

Certificate is_unimodal(const IntPolynomial& p);

} // namespace schurlc
