#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurlc/chromatic.hpp"
#include "schurlc/graph.hpp"
#include "schurlc/poly.hpp"
#include "schurlc/schur2.hpp"

namespace schurlc {

/// Weight-map cases for clan spiders, keyed on the torso weight a0 and the
/// weights of the torso-adjacent leg vertices:
///   C1   a0 >= 3                          (triangle inside the torso clique)
///   C2   a0 == 2, some adjacent >= 1      (triangle across the torso edge)
///   C3   a0 == 2, all adjacent == 0
///   C4   a0 == 1, all adjacent == 0
///   C51  a0 == 1, some adjacent >= 2      (triangle across the leg edge)
///   C521 a0 == 1, adjacents <= 1, torso component is 2-s-positive
///   C522 a0 == 1, adjacents <= 1, torso component is not 2-s-positive
///   C6   a0 == 0
/// The classification is total and mutually exclusive.
enum class CaseTag { C1, C2, C3, C4, C51, C521, C522, C6 };
const char* case_tag_name(CaseTag tag);

/// Leg data of the torso component C0 = S(beta) of a clan spider. beta keeps
/// the original leg order of lambda; zero-length runs are legal and simply
/// absent from C0.
struct LegProfile {
    std::vector<int> beta;
    std::vector<int> odd_legs;    // leg indices with beta odd
    std::vector<int> even_legs;   // leg indices with beta even and >= 2
    long beta_odd_plus = 0;       // sum (beta_i + 1)/2 over odd legs
    long beta_odd_minus = 0;      // sum (beta_i - 1)/2 over odd legs
    long beta_even = 0;           // sum beta_j / 2 over even legs

    int odd_count() const { return static_cast<int>(odd_legs.size()); }    // a
    int even_count() const { return static_cast<int>(even_legs.size()); }  // b
    /// (beta+ + beta_even, 1 + beta- + beta_even); the first exceeds the
    /// second by odd_count() - 1.
    std::pair<long, long> block_sizes() const;
    Partition2 bipartition_type() const;   // block sizes sorted
    Partition2 critical_slot() const;      // (beta+ + beta_even - 1, beta- + beta_even + 2)
};

CaseTag classify_alpha(const SpiderShape& shape, const WeightMap& alpha);

struct C0Extraction {
    LegProfile legs;
    std::vector<int> c0_vertices;   // ascending vertex ids within S(lambda)
    Graph c0;                       // induced subgraph; the spider S(beta)
};
/// Requires a0 == 1, torso-adjacent weights <= 1, and on each leg a run of
/// weight-1 vertices followed by weight 0 or the leg end (otherwise the torso
/// component is not a spider). WrongCase when violated.
C0Extraction extract_C0(const SpiderShape& shape, const WeightMap& alpha);

/// The injection from C522 weight maps to C6 weight maps: drops the torso
/// weight and rewrites the first smallest-odd-run leg (plus, for runs >= 3,
/// the first other odd leg) into alternating weight-2/0 patterns preserving
/// the total weight. WrongCase unless classify_alpha says C522.
WeightMap phi(const SpiderShape& shape, const WeightMap& alpha);

/// Reconstructs the unique C522 preimage from the one or two legs whose
/// start carries weight 2, then re-applies phi to confirm. NotInImage when
/// nothing verifies.
WeightMap phi_inverse(const SpiderShape& shape, const WeightMap& image);

struct EliminationReport {
    WeightMap alpha;
    WeightMap phi_alpha;
    LegProfile legs;
    int pivot_leg = -1;        // the rewritten smallest-odd leg
    int partner_leg = -1;      // second rewritten leg (runs >= 3 only)
    bool case_two = false;     // pivot run >= 3

    TwoRowProfile x_alpha_c0;  // X^{alpha|C0}: s_(A,B) - s_(A-1,B+1)
    TwoRowProfile x_phi_c0;    // X^{phi(alpha)|C0}
    TwoRowProfile sum;         // their sum
    bool c0_profile_matches = false;
    bool sum_positive = false;

    Partition2 critical_slot;
    Rat critical_coeff;            // [critical slot] X^{phi(alpha)|C0}
    Rat critical_expected;         // (a-2) * 2^b
    long long count_main = 0;      // semi-ordered count at the bipartition type
    long long count_critical = 0;  // ... at the critical type
    long long count_main_expected = 0;
    long long count_critical_expected = 0;

    bool ok = false;
    std::string failure;
};
/// Step-3 check for one C522 weight map. WrongCase if not C522.
EliminationReport verify_elimination(const SpiderShape& shape, const WeightMap& alpha);

struct AuditOptions {
    bool audit_phi = true;
    int weight_cap = 2;   // cap on weights outside C0 during the phi audit
    /// Every k-th candidate additionally recomputes the whole-graph sum
    /// X^alpha + X^{phi(alpha)} as a literal profile product (the per-factor
    /// verdicts cover every candidate either way). 1 = always.
    long product_sample = 37;
    /// Full case histogram and per-case positivity claims are checked when
    /// the spider has at most this many vertices.
    int histogram_vertex_limit = 11;
};

struct PhiAuditReport {
    long long candidates = 0;        // C522 maps enumerated (cap applied outside C0)
    long long eliminations = 0;      // distinct C0 shapes checked
    long long literal_products = 0;  // whole-graph sums recomputed literally
    bool injective = true;
    bool weight_preserved = true;
    bool images_in_c6 = true;
    bool inverse_ok = true;
    bool eliminations_ok = true;
    bool full_sums_positive = true;
    std::vector<std::string> violations;
    bool ok() const;
};

struct SpiderReport {
    std::vector<int> lambda;
    IntPolynomial indep;
    Certificate slc;
    TwoRowProfile y;
    PositivityCheck y_positive;
    bool equivalence_ok = false;   // SLC verdict agrees with Y positivity
    std::map<CaseTag, long long> case_counts;   // capped histogram, small spiders
    bool case_claims_ok = true;    // zero for C1/C2/C51, positive otherwise
    std::optional<PhiAuditReport> audit;
    bool ok = false;
    std::vector<std::string> violations;
};
SpiderReport verify_spider(const std::vector<int>& lambda, const AuditOptions& opts = {});

struct SliceIdentity {
    long degree = 0;
    TwoRowProfile lhs;
    TwoRowProfile rhs;
    bool holds = false;
};
struct RecurrenceReport {
    std::vector<SliceIdentity> slices;
    bool ok = false;
};
/// Degree-by-degree check of
///   Y_G = Y_{G-v} + (Y_v - 1) Y_{G-N[v]} + sum of X_G^alpha over alpha with
///   alpha(v) >= 1 and alpha(u) >= 1 for some neighbor u,
/// all four terms computed independently, for every degree d <= dmax.
RecurrenceReport verify_deletion_recurrence(const Graph& g, int v, long dmax);

/// Clan analogue for a leaf v with neighbor u and v blown up to K_n:
///   Y_{G_v^n} = Y_{G-v} + (Y_{K_n} - 1) Y_{G-{u,v}} + error terms.
/// Weight maps live on V(G_v^n), clique copies weighted individually.
RecurrenceReport verify_clique_recurrence(const Graph& g, int leaf, int clique_n, long dmax);

/// Cases of the pineapple error terms (alpha(u) >= 1 and some clique copy
/// weighted): P1 two clique copies weighted; P21 a weight >= 2 on u or the
/// copy; P22 the dangerous alpha(u) = alpha(copy) = 1.
enum class PineCase { P1, P21, P22 };

struct PineappleReport {
    int clique_size = 0;
    std::vector<int> lambda;
    IntPolynomial indep;
    Certificate lc;
    TwoRowProfile y;
    PositivityCheck y_positive;
    bool equivalence_ok = false;
    std::map<std::string, long long> case_counts;
    long long zero_claims_checked = 0;   // P1/P21 maps confirmed two-row zero
    long long eliminations = 0;          // P22 maps eliminated against phi images
    bool ok = false;
    std::vector<std::string> violations;
};
PineappleReport verify_pineapple(int n, const std::vector<int>& lambda,
                                 const AuditOptions& opts = {});

} // namespace schurlc
