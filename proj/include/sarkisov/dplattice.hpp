#pragma once

// Picard lattices of del Pezzo surfaces of degree 3..5 (P^2 blown up in
// 9 - d points), the lattice-level check of the inverse construction of the
// three blowup links, and the numerics of the P^1-bundle link.

#include "sarkisov/enumerate.hpp"
#include "sarkisov/error.hpp"
#include "sarkisov/icalc.hpp"
#include "sarkisov/ledger.hpp"
#include "sarkisov/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sarkisov::dplattice {

using sarkisov::to_string;

/// Coefficients of h, e_1, ..., e_n.
struct LatticeClass
{
    std::vector<int> coords;

    friend LatticeClass operator+(LatticeClass x, const LatticeClass& y)
    {
        for (std::size_t i = 0; i < x.coords.size(); ++i) {
            x.coords[i] += y.coords.at(i);
        }
        return x;
    }
    friend LatticeClass operator-(LatticeClass x, const LatticeClass& y)
    {
        for (std::size_t i = 0; i < x.coords.size(); ++i) {
            x.coords[i] -= y.coords.at(i);
        }
        return x;
    }
    friend LatticeClass operator*(int s, LatticeClass x)
    {
        for (int& c : x.coords) {
            c *= s;
        }
        return x;
    }
    friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;
};

/// "2h-e1-e2" style text.
[[nodiscard]] inline std::string to_string(const LatticeClass& c)
{
    std::string out;
    auto term = [&](int coeff, const std::string& name) {
        if (coeff == 0) {
            return;
        }
        if (coeff < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (std::abs(coeff) != 1) {
            out += std::to_string(std::abs(coeff));
        }
        out += name;
    };
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        term(c.coords[i], i == 0 ? "h" : "e" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

class DPLattice
{
public:
    explicit DPLattice(int degree)
        : degree_(degree)
    {
        if (degree < 3 || degree > 5) {
            throw Error(ErrorCode::InvalidArgument, "del Pezzo degree must be 3, 4 or 5");
        }
    }

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] int points() const { return 9 - degree_; }
    [[nodiscard]] std::size_t rank() const { return static_cast<std::size_t>(10 - degree_); }

    [[nodiscard]] LatticeClass zero() const { return {std::vector<int>(rank(), 0)}; }
    [[nodiscard]] LatticeClass h() const
    {
        auto c = zero();
        c.coords[0] = 1;
        return c;
    }
    [[nodiscard]] LatticeClass e(int i) const
    {
        if (i < 1 || i > points()) {
            throw Error(ErrorCode::InvalidArgument, "no exceptional class e" + std::to_string(i));
        }
        auto c = zero();
        c.coords[static_cast<std::size_t>(i)] = 1;
        return c;
    }
    /// K = -3h + sum e_i.
    [[nodiscard]] LatticeClass canonical() const
    {
        auto c = zero();
        c.coords[0] = -3;
        for (std::size_t i = 1; i < rank(); ++i) {
            c.coords[i] = 1;
        }
        return c;
    }

    [[nodiscard]] int pair(const LatticeClass& x, const LatticeClass& y) const
    {
        check(x);
        check(y);
        int total = x.coords[0] * y.coords[0];
        for (std::size_t i = 1; i < rank(); ++i) {
            total -= x.coords[i] * y.coords[i];
        }
        return total;
    }

    [[nodiscard]] int k_degree(const LatticeClass& x) const { return pair(canonical(), x); }

    [[nodiscard]] int arithmetic_genus(const LatticeClass& x) const
    {
        const int twice = pair(x, x) + k_degree(x);
        return twice / 2 + 1;
    }

    /// Every class C with C^2 = self_int and K.C = k_deg. Writing
    /// C = a h - sum b_i e_i, sum b_i = 3a + k_deg and sum b_i^2 = a^2 - self_int,
    /// so Cauchy-Schwarz gives (3a + k)^2 <= n (a^2 - s): a lies in a bounded
    /// interval since 9 - n = degree > 0, and |b_i| <= sqrt(a^2 - s).
    [[nodiscard]] std::vector<LatticeClass> classes_with(int self_int, int k_deg) const
    {
        const int n = points();
        auto feasible = [&](long a) {
            return (3 * a + k_deg) * (3 * a + k_deg) <= static_cast<long>(n) * (a * a - self_int);
        };
        // The parabola degree*a^2 + 6ka + k^2 + ns opens upward; find the box.
        long lim = 1;
        while (feasible(lim) || feasible(-lim)) {
            ++lim;
        }
        std::vector<LatticeClass> out;
        for (long a = -lim; a <= lim; ++a) {
            if (!feasible(a)) {
                continue;
            }
            const long norm = a * a - self_int;
            const int bmax = static_cast<int>(isqrt(Integer(norm)).convert_to<long>());
            std::vector<int> b(static_cast<std::size_t>(n), -bmax);
            while (true) {
                long sum = 0, sq = 0;
                for (int v : b) {
                    sum += v;
                    sq += static_cast<long>(v) * v;
                }
                if (sum == 3 * a + k_deg && sq == norm) {
                    LatticeClass c{{static_cast<int>(a)}};
                    for (int v : b) {
                        c.coords.push_back(-v);
                    }
                    out.push_back(std::move(c));
                }
                std::size_t i = 0;
                while (i < b.size() && b[i] == bmax) {
                    b[i] = -bmax;
                    ++i;
                }
                if (i == b.size()) {
                    break;
                }
                ++b[i];
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Reflection in a root r (r^2 = -2): c -> c + (c.r) r.
    [[nodiscard]] LatticeClass reflect(const LatticeClass& c, const LatticeClass& root) const
    {
        return c + pair(c, root) * root;
    }

    [[nodiscard]] LatticeClass parse(std::string_view text) const
    {
        auto c = zero();
        std::size_t i = 0;
        auto fail = [&] { return Error(ErrorCode::InvalidArgument, "cannot parse class '" + std::string(text) + "'"); };
        if (text.empty()) {
            throw fail();
        }
        while (i < text.size()) {
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
            }
            int coeff = 0;
            bool digits = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = coeff * 10 + (text[i] - '0');
                digits = true;
                ++i;
            }
            if (!digits) {
                coeff = 1;
            }
            if (i >= text.size()) {
                throw fail();
            }
            if (text[i] == 'h') {
                c.coords[0] += sign * coeff;
                ++i;
            } else if (text[i] == 'e') {
                ++i;
                int idx = 0;
                bool any = false;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    idx = idx * 10 + (text[i] - '0');
                    any = true;
                    ++i;
                }
                if (!any || idx < 1 || idx > points()) {
                    throw fail();
                }
                c.coords[static_cast<std::size_t>(idx)] += sign * coeff;
            } else {
                throw fail();
            }
        }
        return c;
    }

private:
    void check(const LatticeClass& x) const
    {
        if (x.coords.size() != rank()) {
            throw Error(ErrorCode::InvalidArgument, "class has wrong rank for degree " + std::to_string(degree_));
        }
    }

    int degree_;
};

/// Lines: C^2 = -1, K.C = -1.
[[nodiscard]] inline std::vector<LatticeClass> exceptional_classes(int degree)
{
    return DPLattice(degree).classes_with(-1, -1);
}

/// Conic classes: C^2 = 0, K.C = -2.
[[nodiscard]] inline std::vector<LatticeClass> conic_classes(int degree)
{
    return DPLattice(degree).classes_with(0, -2);
}

/// Roots: r^2 = -2, K.r = 0.
[[nodiscard]] inline std::vector<LatticeClass> roots(int degree) { return DPLattice(degree).classes_with(-2, 0); }

struct NefReport
{
    LatticeClass divisor;
    int self_intersection = 0;
    std::vector<std::pair<LatticeClass, int>> negative;  // curves with D.C < 0
    std::vector<LatticeClass> trivial_lines;             // lines with D.C = 0
    bool nef = false;
    bool big = false;
};

/// Nefness against lines and conics; on a del Pezzo surface of degree <= 7
/// these generate the Mori cone.
[[nodiscard]] inline NefReport nef_check(const DPLattice& lat, const LatticeClass& d)
{
    NefReport rep;
    rep.divisor = d;
    rep.self_intersection = lat.pair(d, d);
    for (const auto& c : exceptional_classes(lat.degree())) {
        const int v = lat.pair(d, c);
        if (v < 0) {
            rep.negative.emplace_back(c, v);
        } else if (v == 0) {
            rep.trivial_lines.push_back(c);
        }
    }
    for (const auto& c : conic_classes(lat.degree())) {
        const int v = lat.pair(d, c);
        if (v < 0) {
            rep.negative.emplace_back(c, v);
        }
    }
    rep.nef = rep.negative.empty();
    rep.big = rep.nef && rep.self_intersection > 0;
    return rep;
}

// -- inverse construction -----------------------------------------------

struct ConstructionReport
{
    std::string target;
    int degree = 0;  // K_S^2
    int iota = 0;
    LatticeClass curve;
    int pa = 0;
    int minus_k_dot_b = 0;
    LatticeClass restriction;  // -K_Y restricted to S: -iota K_S - B
    NefReport nef;
    std::optional<LatticeClass> trivial_line;
    int secancy = 0;  // B.Lambda
    Rational lifted_kcube;
    Ledger ledger;
};

[[nodiscard]] inline enumerate::E1Target target_of(std::string_view name)
{
    if (name == "P3") {
        return enumerate::E1Target::P3;
    }
    if (name == "Q") {
        return enumerate::E1Target::Q;
    }
    if (name == "V5" || name == "dP5-ambient") {
        return enumerate::E1Target::DP5;
    }
    throw Error(ErrorCode::InvalidArgument, "construction target must be P3, Q or V5");
}

/// The curve class prescribed for each target: 2h - e1 on the cubic and
/// quartic surfaces, 2h - e1 - e2 on the quintic.
[[nodiscard]] inline LatticeClass construction_curve(const DPLattice& lat)
{
    auto b = 2 * lat.h() - lat.e(1);
    return lat.degree() == 5 ? b - lat.e(2) : b;
}

/// S is a smooth member of |(iota - 1) H| on Z, a del Pezzo surface of degree
/// (iota - 1) H^3 with -K_S = H|_S, and -K_Y|_S = -iota K_S - B.
[[nodiscard]] inline ConstructionReport construction_check(std::string_view target,
                                                           std::optional<LatticeClass> curve = std::nullopt)
{
    const auto t = target_of(target);
    const auto z = enumerate::ambient_of(t);
    const Rational sdeg = (z.iota - 1) * z.hcube;
    if (!is_integer(sdeg)) {
        throw Error(ErrorCode::InvalidArgument, "surface degree not integral");
    }
    DPLattice lat(num(sdeg).convert_to<int>());
    ConstructionReport rep;
    rep.target = z.name;
    rep.degree = lat.degree();
    rep.iota = z.iota;
    rep.curve = curve ? *curve : construction_curve(lat);
    rep.pa = lat.arithmetic_genus(rep.curve);
    rep.minus_k_dot_b = -lat.k_degree(rep.curve);
    rep.restriction = -z.iota * lat.canonical() - rep.curve;
    rep.nef = nef_check(lat, rep.restriction);
    if (rep.nef.trivial_lines.size() == 1) {
        rep.trivial_line = rep.nef.trivial_lines.front();
        rep.secancy = lat.pair(rep.curve, *rep.trivial_line);
    }
    // H.B = -K_S.B; lift to the blowup of Z.
    auto ring = icalc::curve_blowup_ring(z, {rep.minus_k_dot_b, rep.pa});
    rep.lifted_kcube = ring.anticanonical_cube();

    // The surviving e1 candidate on this target fixes the expected curve.
    std::optional<enumerate::E1Candidate> expected;
    for (const auto& c : enumerate::e1_candidates(12)) {
        if (c.target == t && c.k == 0) {
            expected = c;
        }
    }
    auto& L = rep.ledger;
    L.add("p_a(B)", Rational(rep.pa), Relation::Eq, Rational(expected->pa));
    L.add("-K_S.B", Rational(rep.minus_k_dot_b), Relation::Eq, Rational(expected->h_degree));
    L.add("D^2 > 0", Rational(rep.nef.self_intersection), Relation::Gt, Rational(0));
    L.add("D meets every line and conic nonnegatively", Rational(static_cast<int>(rep.nef.negative.size())),
          Relation::Eq, Rational(0));
    L.add("exactly one line with D.L = 0", Rational(static_cast<int>(rep.nef.trivial_lines.size())), Relation::Eq,
          Rational(1));
    if (rep.trivial_line) {
        L.add("B.Lambda = iota", Rational(rep.secancy), Relation::Eq, Rational(z.iota));
    }
    L.add("(-K_Y)^3", rep.lifted_kcube, Relation::Eq, Rational(22));

    if (!L.all_hold()) {
        std::string failed;
        for (const auto& c : L.checks) {
            if (!c.holds()) {
                failed += (failed.empty() ? "" : "; ") + c.text();
            }
        }
        throw Error(ErrorCode::ConstructionViolated, std::string(z.name) + " with B = " + to_string(rep.curve)
                                                         + ": " + failed);
    }
    return rep;
}

struct ChainReport
{
    LatticeClass total;
    int components = 0;
    int pa = 0;
    int minus_k_degree = 0;
    int rank = 0;
};

/// A reduced curve given as a sum of lattice classes; blowing it up adds one
/// to the class-group rank per component.
[[nodiscard]] inline ChainReport chain_check(const DPLattice& lat, const std::vector<LatticeClass>& components,
                                             int base_rank)
{
    if (components.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty curve");
    }
    ChainReport rep;
    rep.total = lat.zero();
    for (const auto& c : components) {
        rep.total = rep.total + c;
    }
    rep.components = static_cast<int>(components.size());
    rep.pa = lat.arithmetic_genus(rep.total);
    rep.minus_k_degree = -lat.k_degree(rep.total);
    rep.rank = base_rank + rep.components;
    return rep;
}

// -- P^1-bundle link -----------------------------------------------------

struct BundleReport
{
    icalc::ChernData chern;
    std::array<Rational, 4> monomials;  // M^3, M^2 F, M F^2, F^3
    Rational kcube;
    Rational h0_bound_1;  // h^0(E(1)) >= chi(E(1))
    Rational h0_bound_2;
    Ledger ledger;
};

/// P(E) over P^2 with -K^3 = 22: Chern data, ring and dimension bounds.
[[nodiscard]] inline BundleReport pe_numerics()
{
    BundleReport rep;
    auto& L = rep.ledger;
    // 4 c2 - c1^2 = 16 from -K^3 = 54 + 2c1^2 - 8c2 = 22; normalise c1 in {0, -1}.
    L.add("c1 = -1: 4 c2 = 17 has no integer solution", Rational(17 % 4), Relation::Ne, Rational(0));
    rep.chern = enumerate::bundle_for(Rational(22));
    L.add("c1 = 0 forces c2 = 4", Rational(rep.chern.c2), Relation::Eq, Rational(4));
    auto ring = icalc::projbundle_ring(rep.chern);
    for (int p = 0; p < 4; ++p) {
        rep.monomials[static_cast<std::size_t>(p)] = ring.monomial(p);
    }
    rep.kcube = ring.anticanonical_cube();
    L.add("M^3", rep.monomials[0], Relation::Eq, Rational(-4));
    L.add("M^2.F", rep.monomials[1], Relation::Eq, Rational(0));
    L.add("M.F^2", rep.monomials[2], Relation::Eq, Rational(1));
    L.add("F^3", rep.monomials[3], Relation::Eq, Rational(0));
    L.add("(-K)^3", rep.kcube, Relation::Eq, Rational(22));
    L.add("(-K)^3 = 6 K_Z^2 + 2 c1^2 - 8 c2", rep.kcube, Relation::Eq, icalc::projbundle_kcube(rep.chern));

    const icalc::DivisorClass m(1, 0), f(0, 1);
    const auto k = ring.canonical_class();
    const auto minus_k = ring.anticanonical_class();
    L.add("(M+F)^2.K", ring.eval(m + f, m + f, k), Relation::Eq, Rational(0));
    L.add("(M+F)^2.F", ring.eval(m + f, m + f, f), Relation::Eq, Rational(2));
    L.add("(M+2F).(M+F)^2", ring.eval(m + 2 * f, m + f, m + f), Relation::Eq, Rational(1));
    const Rational kkm = ring.eval(minus_k, minus_k, m);
    const Rational kkf = ring.eval(minus_k, minus_k, f);
    // -K = 2M + 3F, so 22 = 2 (-K)^2.M + 3 (-K)^2.F.
    L.add("(-K)^2.F", kkf, Relation::Eq, Rational(12));
    L.add("2 (-K)^2.M = 22 - 36", 2 * kkm, Relation::Eq, Rational(22 - 36));
    L.add("(-K)^2.M < 0", kkm, Relation::Lt, Rational(0));

    rep.h0_bound_1 = icalc::rank2_euler_characteristic(0, rep.chern.c2, 1);
    rep.h0_bound_2 = icalc::rank2_euler_characteristic(0, rep.chern.c2, 2);
    L.add("chi(E(1)) = n^2 + 3n - 2 at n = 1", rep.h0_bound_1, Relation::Eq, Rational(2));
    L.add("chi(E(2)) = n^2 + 3n - 2 at n = 2", rep.h0_bound_2, Relation::Eq, Rational(8));
    L.add("dim|M+F| >= 1", rep.h0_bound_1 - 1, Relation::Ge, Rational(1));
    L.add("dim|M+2F| >= 7", rep.h0_bound_2 - 1, Relation::Ge, Rational(7));
    return rep;
}

struct QuarticSectionReport
{
    Rational gamma_degree;  // (M+2F).(M+F)^2
    Rational k_on_gamma;    // (M+F)^2.(-K)
    Rational surface_degree;
    Ledger ledger;
};

/// S in |M+F| and Gamma = (M+F)^2; K_S^2 = S.(K + S)^2 by adjunction.
[[nodiscard]] inline QuarticSectionReport quartic_section_check()
{
    auto ring = icalc::projbundle_ring({0, 4, 9});
    const icalc::DivisorClass m(1, 0), f(0, 1);
    const auto s = m + f;
    const auto minus_k = ring.anticanonical_class();
    QuarticSectionReport rep;
    rep.gamma_degree = ring.eval(s, s, m + 2 * f);
    rep.k_on_gamma = ring.eval(s, s, minus_k);
    const auto adj = minus_k - s;
    rep.surface_degree = ring.eval(s, adj, adj);
    rep.ledger.add("(M+F)^2.(M+2F)", rep.gamma_degree, Relation::Eq, Rational(1));
    rep.ledger.add("(M+F)^2.(-K)", rep.k_on_gamma, Relation::Eq, Rational(0));
    rep.ledger.add("K_S^2", rep.surface_degree, Relation::Eq, Rational(4));
    return rep;
}

}  // namespace sarkisov::dplattice
