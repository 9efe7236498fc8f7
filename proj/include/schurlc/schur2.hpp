#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurlc/numbers.hpp"
#include "schurlc/poly.hpp"

namespace schurlc {

/// Partition with at most two rows; l == 0 encodes the one-row partition (k)
/// and (0,0) the empty partition.
struct Partition2 {
    long k = 0;
    long l = 0;

    long degree() const { return k + l; }
    bool operator==(const Partition2&) const = default;
};

/// Canonical order used everywhere profiles are serialized: by (k+l, k).
struct Partition2Less {
    bool operator()(const Partition2& a, const Partition2& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.k < b.k;
    }
};

std::string partition2_display(const Partition2& p);   // "s(3,1)", "s(2)", "1"

/// Finitely supported map from two-row partitions to exact rationals: the
/// length-<=2 Schur content of a symmetric function. Zero entries are absent.
class TwoRowProfile {
public:
    using Map = std::map<Partition2, Rat, Partition2Less>;

    TwoRowProfile() = default;
    static TwoRowProfile unit();   // the constant 1

    void set(Partition2 p, Rat c);
    void add(Partition2 p, const Rat& c);
    Rat coeff(Partition2 p) const;
    const Map& entries() const { return map_; }
    bool is_zero() const { return map_.empty(); }
    long max_degree() const;
    TwoRowProfile slice(long d) const;   // entries with k+l == d

    bool operator==(const TwoRowProfile&) const = default;

private:
    Map map_;
};

TwoRowProfile profile_add(const TwoRowProfile& p, const TwoRowProfile& q);
TwoRowProfile profile_scale(const Rat& c, const TwoRowProfile& p);

/// The length-<=2 part of the product, computed by multiplying two-variable
/// evaluations. Exact: the quotient is closed under products because
/// Littlewood-Richardson coefficients vanish when the result is shorter than
/// a factor.
TwoRowProfile profile_product(const TwoRowProfile& p, const TwoRowProfile& q);

/// Symmetric polynomial in two formal variables with exact rational
/// coefficients, stored on monomial-symmetric pairs (i >= j). Setting all
/// but two variables of a symmetric function to zero kills exactly the
/// Schur terms of length >= 3 and is injective on the rest; this is the
/// evaluation model for the whole module.
class TwoVarPoly {
public:
    using Map = std::map<std::pair<long, long>, Rat>;

    TwoVarPoly() = default;
    /// Build from a full monomial map (x-exponent, y-exponent) -> coeff.
    /// NotSymmetric unless c(i,j) == c(j,i) throughout.
    static TwoVarPoly from_monomials(const Map& full);

    void add_mono(long i, long j, const Rat& c);   // requires i >= j
    Rat coeff(long i, long j) const;               // symmetric accessor
    const Map& entries() const { return map_; }

    bool operator==(const TwoVarPoly&) const = default;

private:
    Map map_;
};

TwoVarPoly twovar_product(const TwoVarPoly& p, const TwoVarPoly& q);

/// s_(k,l)(x,y) = (xy)^l (x^{k-l} + x^{k-l-1} y + ... + y^{k-l}); linear and
/// injective on profiles.
TwoVarPoly profile_to_twovar(const TwoRowProfile& p);

/// Exact inverse of profile_to_twovar: entry (a,b) = c(a,b) - c(a+1,b-1)
/// on monomial-symmetric coefficients.
TwoRowProfile twovar_to_profile(const TwoVarPoly& q);

struct PositivityCheck {
    bool positive = true;
    std::optional<Partition2> witness;   // first negative slot in canonical order
    Rat value;                           // its value
};
PositivityCheck is_2s_positive(const TwoRowProfile& p);

/// Two-row Schur content of F_P = prod_i P(x_i) for P with P(0) = 1:
/// entry (k,l) = a_k a_l - a_{k+1} a_{l-1} for k+l <= dmax (a_j = 0 beyond
/// the degree, a_{-1} = 0). ConstantTermNotOne when P(0) != 1.
TwoRowProfile fp_profile(const IntPolynomial& p, long dmax);

} // namespace schurlc
