#include "schurlc/schur2.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace schurlc {

std::string partition2_display(const Partition2& p) {
    if (p.k == 0) return "1";
    if (p.l == 0) return "s(" + std::to_string(p.k) + ")";
    return "s(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
}

TwoRowProfile TwoRowProfile::unit() {
    TwoRowProfile p;
    p.set({0, 0}, 1);
    return p;
}

void TwoRowProfile::set(Partition2 p, Rat c) {
    if (p.l < 0 || p.k < p.l) fail(ErrorCode::OutOfRange, "not a two-row partition");
    if (c == 0)
        map_.erase(p);
    else
        map_[p] = std::move(c);
}

void TwoRowProfile::add(Partition2 p, const Rat& c) {
    if (c == 0) return;
    if (p.l < 0 || p.k < p.l) fail(ErrorCode::OutOfRange, "not a two-row partition");
    auto [it, fresh] = map_.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) map_.erase(it);
    }
}

Rat TwoRowProfile::coeff(Partition2 p) const {
    auto it = map_.find(p);
    return it == map_.end() ? Rat(0) : it->second;
}

long TwoRowProfile::max_degree() const {
    return map_.empty() ? -1 : map_.rbegin()->first.degree();
}

TwoRowProfile TwoRowProfile::slice(long d) const {
    TwoRowProfile out;
    for (const auto& [p, c] : map_)
        if (p.degree() == d) out.set(p, c);
    return out;
}

TwoRowProfile profile_add(const TwoRowProfile& p, const TwoRowProfile& q) {
    TwoRowProfile out = p;
    for (const auto& [pt, c] : q.entries()) out.add(pt, c);
    return out;
}

TwoRowProfile profile_scale(const Rat& c, const TwoRowProfile& p) {
    TwoRowProfile out;
    if (c == 0) return out;
    for (const auto& [pt, v] : p.entries()) out.set(pt, c * v);
    return out;
}

TwoVarPoly TwoVarPoly::from_monomials(const Map& full) {
    TwoVarPoly out;
    for (const auto& [key, c] : full) {
        auto [i, j] = key;
        if (i < j) continue;
        if (i != j) {
            auto it = full.find({j, i});
            if (it == full.end() || it->second != c)
                fail(ErrorCode::NotSymmetric, "monomial (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        out.add_mono(i, j, c);
    }
    // mirrored keys missing their partner
    for (const auto& [key, c] : full) {
        auto [i, j] = key;
        if (i >= j || c == 0) continue;
        auto it = full.find({j, i});
        if (it == full.end())
            fail(ErrorCode::NotSymmetric, "monomial (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    return out;
}

void TwoVarPoly::add_mono(long i, long j, const Rat& c) {
    if (i < j || j < 0) fail(ErrorCode::OutOfRange, "monomial key");
    if (c == 0) return;
    auto [it, fresh] = map_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) map_.erase(it);
    }
}

Rat TwoVarPoly::coeff(long i, long j) const {
    if (i < j) std::swap(i, j);
    auto it = map_.find({i, j});
    return it == map_.end() ? Rat(0) : it->second;
}

TwoVarPoly twovar_product(const TwoVarPoly& p, const TwoVarPoly& q) {
    // expand the left factor to full monomials, keep the right symmetric;
    // every full monomial pair is visited exactly once
    std::vector<std::tuple<long, long, Rat>> left;
    for (const auto& [kp, cp] : p.entries()) {
        auto [i, j] = kp;
        left.emplace_back(i, j, cp);
        if (i != j) left.emplace_back(j, i, cp);
    }
    TwoVarPoly out;
    for (const auto& [i1, j1, cp] : left) {
        for (const auto& [kq, cq] : q.entries()) {
            auto [i2, j2] = kq;
            Rat c = cp * cq;
            if (i1 + i2 >= j1 + j2) out.add_mono(i1 + i2, j1 + j2, c);
            if (i2 != j2 && i1 + j2 >= j1 + i2) out.add_mono(i1 + j2, j1 + i2, c);
        }
    }
    return out;
}

TwoVarPoly profile_to_twovar(const TwoRowProfile& p) {
    TwoVarPoly out;
    for (const auto& [pt, c] : p.entries()) {
        long d = pt.degree();
        for (long a = (d + 1) / 2; a <= pt.k; ++a) out.add_mono(a, d - a, c);
    }
    return out;
}

TwoRowProfile twovar_to_profile(const TwoVarPoly& q) {
    // slot (a,b) reads c(a,b) - c(a+1,b-1): collect every key and its shadow
    std::set<std::pair<long, long>> slots;
    for (const auto& [key, c] : q.entries()) {
        (void)c;
        auto [i, j] = key;
        slots.insert({i, j});
        if (i - 1 >= j + 1) slots.insert({i - 1, j + 1});
    }
    TwoRowProfile out;
    for (auto [a, b] : slots) {
        Rat val = q.coeff(a, b);
        if (b >= 1) val -= q.coeff(a + 1, b - 1);
        if (val != 0) out.set({a, b}, std::move(val));
    }
    return out;
}

PositivityCheck is_2s_positive(const TwoRowProfile& p) {
    for (const auto& [pt, c] : p.entries())
        if (c < 0) return PositivityCheck{false, pt, c};
    return PositivityCheck{};
}

TwoRowProfile fp_profile(const IntPolynomial& p, long dmax) {
    if (p.coeff(0) != 1) fail(ErrorCode::ConstantTermNotOne, "F_P needs P(0) = 1");
    if (dmax < 0) fail(ErrorCode::OutOfRange, "negative degree cap");
    TwoRowProfile out;
    for (long k = 0; k <= dmax; ++k) {
        for (long l = 0; l <= k && k + l <= dmax; ++l) {
            Int e = p.coeff(k) * p.coeff(l);
            if (l >= 1) e -= p.coeff(k + 1) * p.coeff(l - 1);
            if (e != 0) out.set({k, l}, Rat(e));
        }
    }
    return out;
}

TwoRowProfile profile_product(const TwoRowProfile& p, const TwoRowProfile& q) {
    return twovar_to_profile(twovar_product(profile_to_twovar(p), profile_to_twovar(q)));
}

} // namespace schurlc
