#pragma once

// Class-group rank bounds for genus-12 Fano threefolds, replayed as exact
// inequality ledgers. Facts settled by the smooth classification come from
// the reference table.

#include "sarkisov/enumerate.hpp"
#include "sarkisov/error.hpp"
#include "sarkisov/icalc.hpp"
#include "sarkisov/ledger.hpp"
#include "sarkisov/rational.hpp"
#include "sarkisov/reference_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace sarkisov::bounds {

using sarkisov::to_string;

/// An exceptional divisor E with K^2.E = ksq_e has at most ksq_e/2
/// components when no component is a plane (each has degree >= 2).
[[nodiscard]] inline Integer max_components(const Rational& ksq_e)
{
    if (ksq_e <= 0) {
        throw Error(ErrorCode::InvalidArgument, "K^2.E must be positive");
    }
    return floor_of(ksq_e / 2);
}

/// Complete intersection of divisors in a product of projective spaces.
struct ProductAmbient
{
    std::vector<int> dims;
    std::vector<std::vector<int>> divisors;

    [[nodiscard]] int dimension() const
    {
        return std::accumulate(dims.begin(), dims.end(), 0) - static_cast<int>(divisors.size());
    }
};

[[nodiscard]] inline ProductAmbient product_ambient_of(const ReferenceEntry& e)
{
    auto ints = [&](const std::string& csv) {
        std::vector<int> out;
        for (const auto& f : detail::split(csv, ',')) {
            out.push_back(num(parse_rational(f)).convert_to<int>());
        }
        return out;
    };
    auto amb = e.tag_value("ambient");
    if (!amb) {
        throw Error(ErrorCode::MissingEntry, e.name + " has no ambient multidegree data");
    }
    ProductAmbient p{ints(*amb), {}};
    if (auto divs = e.tag_value("divisors")) {
        for (const auto& d : detail::split(*divs, '|')) {
            p.divisors.push_back(ints(d));
            if (p.divisors.back().size() != p.dims.size()) {
                throw Error(ErrorCode::MalformedRow, e.name + ": divisor multidegree does not match ambient");
            }
        }
    }
    return p;
}

/// (-K)^3 of the complete intersection, by expanding (-K)^3 . prod D_j in the
/// Chow ring Z[h_1..h_k]/(h_i^(n_i+1)) and reading off prod h_i^(n_i).
[[nodiscard]] inline Integer anticanonical_cube(const ProductAmbient& p)
{
    if (p.dimension() != 3) {
        throw Error(ErrorCode::InvalidAmbient, "complete intersection is not a threefold");
    }
    const std::size_t k = p.dims.size();
    using Monomial = std::vector<int>;
    using Poly = std::map<Monomial, Integer>;
    auto times_linear = [&](const Poly& f, const std::vector<int>& lin) {
        Poly g;
        for (const auto& [mono, coeff] : f) {
            for (std::size_t i = 0; i < k; ++i) {
                if (lin[i] == 0 || mono[i] == p.dims[i]) {
                    continue;
                }
                Monomial m = mono;
                ++m[i];
                g[m] += coeff * lin[i];
            }
        }
        return g;
    };
    std::vector<int> minus_k(k);
    for (std::size_t i = 0; i < k; ++i) {
        minus_k[i] = p.dims[i] + 1;
        for (const auto& d : p.divisors) {
            minus_k[i] -= d[i];
        }
    }
    Poly f{{Monomial(k, 0), Integer(1)}};
    for (const auto& d : p.divisors) {
        f = times_linear(f, d);
    }
    for (int r = 0; r < 3; ++r) {
        f = times_linear(f, minus_k);
    }
    auto it = f.find(p.dims);
    return it == f.end() ? Integer(0) : it->second;
}

/// -K.C on a product of projective spaces for a curve of multidegree c.
[[nodiscard]] inline Integer anticanonical_degree(const ProductAmbient& p, const std::vector<int>& curve)
{
    if (!p.divisors.empty() || curve.size() != p.dims.size()) {
        throw Error(ErrorCode::InvalidAmbient, "curve degree needs a plain product ambient");
    }
    Integer total = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        total += (p.dims[i] + 1) * curve[i];
    }
    return total;
}

// -- degree 24 ---------------------------------------------------------

struct Prop24Row
{
    std::string name;
    Rational ambient_kcube;
    int pa = 0;
    Rational ksq_e;
    int rank_cap = 0;
    Integer components;
    Integer contribution;
};

struct Prop24Result
{
    Ledger ledger;
    std::vector<Prop24Row> rows;
    Integer non_blowup_bound;
    Integer product_rank;
    Integer bound;
};

/// A smoothing of a degree-24 midpoint is a product, the double cover of
/// P^1 x P^2, or a curve blowup of a smooth Fano Y; in the last case
/// r(X) <= r(Y) + K^2.E / 2.
[[nodiscard]] inline Prop24Result prop24_certify(const ReferenceTable& table)
{
    constexpr int kcube_x = 24;
    Prop24Result res;
    auto rows = table.select([](const ReferenceEntry& e) { return e.tag_value("prop24-row").has_value(); });
    std::sort(rows.begin(), rows.end(),
              [](const auto* a, const auto* b) { return a->int_tag("prop24-row") < b->int_tag("prop24-row"); });
    if (rows.empty()) {
        throw Error(ErrorCode::MissingEntry, "reference table has no degree-24 blowup rows");
    }
    Integer bound = 0;
    for (const auto* e : rows) {
        Prop24Row row;
        row.name = e->name;
        row.ambient_kcube = Rational(anticanonical_cube(product_ambient_of(*e)));
        res.ledger.add(e->name + ": (-K)^3 from multidegrees agrees with the table", row.ambient_kcube, Relation::Eq,
                       e->kcube);
        row.pa = e->int_tag("prop24-pa");
        row.rank_cap = e->int_tag("prop24-rcap");
        // (-K_X)^3 = (-K_Y)^3 - 2 K^2.E - 2 p_a + 2
        row.ksq_e = (row.ambient_kcube - kcube_x - 2 * row.pa + 2) / 2;
        auto ids = icalc::blowup_identities(row.ambient_kcube, -row.ksq_e - 2 * row.pa + 2, row.pa);
        res.ledger.add(e->name + ": blowup returns to (-K)^3 = 24", ids.kcube_v, Relation::Eq, Rational(kcube_x));
        res.ledger.add(e->name + ": K^2.E > 0", row.ksq_e, Relation::Gt, Rational(0));
        row.components = max_components(row.ksq_e);
        row.contribution = row.rank_cap + row.components;
        res.ledger.add(e->name + ": r(X) <= r(Y) + K^2.E/2", Rational(row.contribution), Relation::Eq,
                       Rational(row.rank_cap) + Rational(row.components));
        bound = std::max(bound, row.contribution);
        res.rows.push_back(std::move(row));
    }
    // Double cover of P^1 x P^2: conic bundle over P^2 with quartic discriminant.
    const auto& cover = table.at("MM2-18");
    res.ledger.add("MM2-18 has (-K)^3 = 24", cover.kcube, Relation::Eq, Rational(kcube_x));
    const int disc = cover.int_tag("discriminant-degree");
    res.non_blowup_bound = 1 + 1 + disc;
    res.ledger.add("double cover: r(X) <= r(P^2) + 1 + deg D", Rational(res.non_blowup_bound), Relation::Le,
                   Rational(bound));
    const auto& product = table.at("MM5-products");
    res.ledger.add("MM5-products has (-K)^3 = 24", product.kcube, Relation::Eq, Rational(kcube_x));
    res.product_rank = product.int_tag("class-rank");
    res.ledger.add("product: r(X) = 7", Rational(res.product_rank), Relation::Le, Rational(bound));
    res.bound = std::max({bound, res.non_blowup_bound, res.product_rank});
    return res;
}

// -- r <= 10 -------------------------------------------------------------

/// Lower bound on (-K)^3 after N divisorial steps each contracting a surface
/// of degree >= d onto a curve of p_a >= 0: 22 + (2d - 2) N.
[[nodiscard]] inline Integer degree_chain(int d, int n) { return 22 + (2 * d - 2) * n; }

struct Le10Result
{
    Ledger ledger;
    std::vector<std::string> narrative;
    Integer bound;
};

/// Replays the argument for r(X) <= 10 on plane-free X. Assume r >= 11 and
/// let d be the least degree of a contracted surface in a K-MMP run.
[[nodiscard]] inline Le10Result le10_certify(const ReferenceTable& table)
{
    Le10Result res;
    auto& L = res.ledger;
    const int r = 11;
    auto endpoints = [&](auto pred) {
        return table.select([&](const ReferenceEntry& e) { return e.has_tag("endpoint") && pred(e); });
    };

    res.narrative.push_back("assume r(X) >= 11 and least contracted degree d >= 3");
    const int n_min = r - 3;  // rho of the last model is <= 3
    L.add("N >= r - 3", Rational(n_min), Relation::Ge, Rational(8));
    L.add("(-K_N)^3 >= 22 + (2d-2)N at d = 3, N = 8", Rational(degree_chain(3, n_min)), Relation::Ge, Rational(54));

    // Equality case: endpoints of degree 54 have rho <= 2, so N >= r - 2.
    auto e54 = endpoints([](const ReferenceEntry& e) { return e.kcube == 54; });
    int rho54 = 0;
    for (const auto* e : e54) {
        rho54 = std::max(rho54, e->rho);
    }
    L.add("endpoints of degree 54 have rho <= 2", Rational(rho54), Relation::Le, Rational(2));
    L.add("(-K_N)^3 = 54 forces N >= 9 and 22 + 4N > 54", Rational(degree_chain(3, r - rho54)), Relation::Gt,
          Rational(54));
    res.narrative.push_back("(-K_N)^3 = 54 is impossible: the chain gives " + degree_chain(3, r - rho54).str());

    // Strict case: only P^3 exceeds 54 among endpoints.
    auto big = endpoints([](const ReferenceEntry& e) { return e.kcube > 54; });
    if (big.size() != 1 || big.front()->name != "P3") {
        throw Error(ErrorCode::MissingEntry, "expected P3 as the only endpoint above degree 54");
    }
    const Rational p3 = big.front()->kcube;
    L.add("endpoints above degree 54: only P^3", Rational(static_cast<int>(big.size())), Relation::Eq, Rational(1));
    const int n = r - big.front()->rho;
    L.add("P^3: N = r - 1 steps fit", Rational(degree_chain(3, n)), Relation::Le, p3);
    L.add("P^3: N = 11 steps do not fit", Rational(degree_chain(3, n + 1)), Relation::Gt, p3);
    L.add("P^3: d = 4 does not fit", Rational(degree_chain(4, n)), Relation::Gt, p3);
    res.narrative.push_back("so the last model is P^3 with N = 10 and d = 3");

    // The model one step before P^3 has rho 2 and degree >= 22 + 4(N - 1).
    const Integer penultimate = degree_chain(3, n - 1);
    L.add("(-K_{N-1})^3 >= 58", Rational(penultimate), Relation::Eq, Rational(58));
    auto heavy = table.select([&](const ReferenceEntry& e) { return e.rho == 2 && e.kcube >= Rational(penultimate); });
    for (const auto* e : heavy) {
        L.add(e->name + " contains a plane", Rational(e->has_tag("contains-plane") ? 1 : 0), Relation::Eq, Rational(1));
        res.narrative.push_back("rho = 2 smoothing of degree >= 58 is " + e->name + ", which contains a plane");
    }
    L.add("rho = 2 candidates of degree >= 58 exist", Rational(static_cast<int>(heavy.size())), Relation::Ge,
          Rational(1));

    // Hence d = 2: a quadric surface over a smooth rational curve or a point.
    res.narrative.push_back("hence d = 2");
    auto curve = icalc::blowup_identities(Rational(24), Rational(0), 0);  // K.B = 0 gives K^2.E = 2
    L.add("d = 2 over a rational curve: blowup of the degree-24 model has (-K)^3",
          curve.kcube_v, Relation::Eq, Rational(22));
    L.add("d = 2 over a rational curve: K^2.E = 2", curve.ksq_e, Relation::Eq, Rational(2));
    auto point = icalc::point_blowup_case(icalc::PointBlowupKind::E3_4, Rational(24));
    L.add("d = 2 over a point: blowup of the degree-24 model has (-K)^3",
          point.kcube_v, Relation::Eq, Rational(22));

    auto p24 = prop24_certify(table);
    L.append(p24.ledger);
    L.add("r(X_1) <= 9 at degree 24", Rational(p24.bound), Relation::Le, Rational(9));
    res.bound = p24.bound + 1;
    L.add("r(X) = r(X_1) + 1 <= 10", Rational(res.bound), Relation::Le, Rational(10));
    return res;
}

/// Arithmetic core of the existence of a surface of degree not divisible by
/// 11 when r > 2: the branch ending at P^3 after two steps.
[[nodiscard]] inline Ledger surface_degree_subledger()
{
    Ledger L;
    // Every surface has degree >= 11, so each step adds >= 2*11 - 2 = 20.
    L.add("64 >= 22 + 20N holds for N = 2", Rational(64), Relation::Ge, Rational(22 + 20 * 2));
    L.add("64 >= 22 + 20N fails for N = 3", Rational(64), Relation::Lt, Rational(22 + 20 * 3));
    // K^2.E_1 = 4 deg B_2 + 2 - 2 p_a is even and >= 11, hence >= 12.
    const int ksq = 12;
    L.add("K^2.E_1 is even, so >= 11 means >= 12", Rational(ksq % 2), Relation::Eq, Rational(0));
    for (int pa = 0; pa <= 2; ++pa) {
        L.add("42 >= 20 + 2K^2.E + 2p_a - 2 at p_a = " + std::to_string(pa), Rational(42),
              pa == 0 ? Relation::Eq : Relation::Lt, Rational(20 + 2 * ksq + 2 * pa - 2));
    }
    const int kb = ksq - 2;  // -K_P3.B_2 = K^2.E - 2 + 2 p_a at p_a = 0
    L.add("-K_P3.B_2 = 10 is not divisible by 4", Rational(kb % 4), Relation::Ne, Rational(0));
    return L;
}

// -- group action --------------------------------------------------------

struct OrbitVerdict
{
    int surface_degree = 0;
    bool conclusive = false;
    int min_orbit = 0;  // least n with n d = 22 a
    std::vector<std::string> log;
    int rank_lower_bound = 0;
};

/// A G-orbit of n surfaces of degree d sums to -aK, so nd = 22a. When
/// gcd(d, 11) = 1 both the orbit and its image in Cl(X) have size divisible
/// by 11, so an element of order 11 acts nontrivially on Cl(X) while fixing
/// K; its nontrivial part needs rank >= phi(11) = 10.
[[nodiscard]] inline OrbitVerdict orbit_divisibility(int surface_degree)
{
    if (surface_degree < 1) {
        throw Error(ErrorCode::InvalidArgument, "surface degree must be positive");
    }
    OrbitVerdict v;
    v.surface_degree = surface_degree;
    v.min_orbit = 22 / std::gcd(surface_degree, 22);
    v.conclusive = std::gcd(surface_degree, 11) == 1;
    if (!v.conclusive) {
        v.log.push_back("11 divides d: nd = 22a gives no constraint mod 11");
        return v;
    }
    v.log.push_back("nd = 22a with gcd(d, 11) = 1: n = 0 mod 11");
    v.log.push_back("22 D' ~ -m d K and iota(X) = 1: m = 0 mod 11");
    v.log.push_back("the 11-Sylow subgroup acts nontrivially on Cl(X): r(X) >= 1 + 10");
    v.rank_lower_bound = 11;
    return v;
}

struct TheoremVerdict
{
    bool conclusive = false;
    std::optional<int> rank_lower;  // for r > 2
    std::optional<Integer> rank_upper;
    bool contradiction = false;
    std::vector<int> surviving_ranks;
    std::optional<enumerate::RealizedRow> rank_two_row;
    Ledger ledger;
    std::vector<std::string> log;
};

[[nodiscard]] inline int dimension_of_base(const std::string& base)
{
    if (base == "P1") {
        return 1;
    }
    if (base == "P2") {
        return 2;
    }
    return 3;
}

/// G-Fano genus-12 threefolds with rk Cl(X)^G = 1: r > 2 is impossible, and
/// at r = 2 the two rays must be swapped, so dim Z = dim Z+.
[[nodiscard]] inline TheoremVerdict main_theorem_verdict(const ReferenceTable& table, int genus = 12,
                                                         bool planes_allowed = false)
{
    if (genus != 12) {
        throw Error(ErrorCode::UnsupportedGenus, "the rank argument is specific to genus 12");
    }
    TheoremVerdict v;
    if (planes_allowed) {
        v.log.push_back("planes allowed: the r <= 10 bound does not apply");
        return v;
    }
    v.conclusive = true;
    // The surface of degree not divisible by 11 exists when r > 2.
    v.ledger = surface_degree_subledger();
    for (int d = 1; d <= 10; ++d) {
        auto o = orbit_divisibility(d);
        v.ledger.add("d = " + std::to_string(d) + ": orbit size divisible by 11", Rational(o.min_orbit % 11),
                     Relation::Eq, Rational(0));
        v.rank_lower = o.rank_lower_bound;
    }
    auto le10 = le10_certify(table);
    v.ledger.append(le10.ledger);
    v.rank_upper = le10.bound;
    v.contradiction = Integer(*v.rank_lower) > *v.rank_upper;
    v.ledger.add("r > 2 forces 11 <= r <= 10", Rational(*v.rank_lower), Relation::Gt, Rational(*v.rank_upper));
    v.log.push_back("r > 2: " + std::to_string(*v.rank_lower) + " <= r <= " + v.rank_upper->str() + ", contradiction");
    v.surviving_ranks = {1, 2};
    for (const auto& row : enumerate::realized_rows(enumerate::enumerate_links(genus, 2, table))) {
        if (dimension_of_base(row.z) == dimension_of_base(row.z_plus)) {
            if (v.rank_two_row) {
                throw Error(ErrorCode::InvalidArgument, "more than one symmetric link");
            }
            v.rank_two_row = row;
        }
    }
    if (v.rank_two_row) {
        v.log.push_back("r = 2: the only link with dim Z = dim Z+ is row " + std::to_string(v.rank_two_row->number));
    }
    return v;
}

}  // namespace sarkisov::bounds
