#pragma once

// Two-ray link enumeration through a genus-12 midpoint. The output is a
// ledger: every pair of extremal contraction types appears, either realized
// or excluded by a named rule with its supporting arithmetic.

#include "sarkisov/error.hpp"
#include "sarkisov/icalc.hpp"
#include "sarkisov/linkeq.hpp"
#include "sarkisov/rational.hpp"
#include "sarkisov/reference_table.hpp"

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sarkisov::enumerate {

using sarkisov::to_string;

/// Castelnuovo's bound on p_a of a nondegenerate degree-d curve in P^n.
[[nodiscard]] inline int castelnuovo_bound(int d, int n)
{
    if (n < 2) {
        throw Error(ErrorCode::InvalidAmbient, "Castelnuovo bound needs n >= 2, got " + std::to_string(n));
    }
    if (d < 1) {
        throw Error(ErrorCode::InvalidArgument, "curve degree must be positive");
    }
    const int m = (d - 1) / (n - 1);
    const int eps = d - 1 - m * (n - 1);
    return m * (m - 1) / 2 * (n - 1) + m * eps;
}

struct Rule
{
    std::string_view name;
    std::string_view statement;
};

inline constexpr std::array<Rule, 8> rules{{
    {"R-CAST", "p_a(B) exceeds the Castelnuovo bound in the ambient projective space"},
    {"R-CUBIC-CAP",
     "B on Q with k >= 1 is degenerate, cut out by cubics inside a quadric surface, so deg B <= 6; "
     "equality makes B a (2,3) complete intersection of p_a 4"},
    {"R-TABLE", "the blowup is a smooth Fano threefold from the reference table with -K ample, so no flop exists"},
    {"R-SECANT-SPAN",
     "B is cut out by quadrics, so its span has dimension >= 4, and >= 5 unless B is a degree-5 linear section "
     "of V5 of p_a 1; Castelnuovo then bounds p_a"},
    {"R-INDEX-DIVISIBILITY", "(-K_Z)^3 must be divisible by iota(Z)^3 for a rank-one target"},
    {"R-RIGHT-SIDE", "the second ray of Y is determined by the first"},
    {"R-LINKEQ", "the numerical link relation has no admissible solution"},
    {"R-FIBER-DEGREE", "the relation forces a different fibre degree"},
}};

using RuleSet = std::set<std::string, std::less<>>;

[[nodiscard]] inline RuleSet all_rules()
{
    RuleSet out;
    for (const auto& r : rules) {
        out.emplace(r.name);
    }
    return out;
}

struct Exclusion
{
    std::string rule;
    std::string reason;
    std::vector<std::string> log;
};

// -- e1 candidates -------------------------------------------------------

enum class E1Target { P3, Q, DP4, DP5 };

[[nodiscard]] inline std::string to_string(E1Target t)
{
    switch (t) {
    case E1Target::P3: return "P3";
    case E1Target::Q: return "Q";
    case E1Target::DP4: return "dP4";
    case E1Target::DP5: return "dP5";
    }
    return "?";
}

[[nodiscard]] inline icalc::AmbientFano ambient_of(E1Target t)
{
    switch (t) {
    case E1Target::P3: return icalc::ambient::projective_space();
    case E1Target::Q: return icalc::ambient::quadric();
    case E1Target::DP4: return icalc::ambient::del_pezzo(4);
    case E1Target::DP5: return icalc::ambient::del_pezzo(5);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown target");
}

struct E1Candidate
{
    E1Target target = E1Target::P3;
    int k = 0;
    int pa = 0;
    int h_degree = 0;
    Rational ksq_e;
    std::optional<Exclusion> exclusion;

    [[nodiscard]] bool survived() const { return !exclusion; }
    [[nodiscard]] icalc::CurveData curve() const { return {h_degree, pa}; }
    [[nodiscard]] std::string label() const
    {
        return "e1[" + to_string(target) + ",k=" + std::to_string(k) + "]";
    }
    friend bool operator==(const E1Candidate& a, const E1Candidate& b)
    {
        return a.target == b.target && a.k == b.k;
    }
};

/// Both relations for the blowup of B on Z producing (-K_Y)^3 = kcube:
///   kcube = (-K_Z)^3 - 2 iota deg B + 2 p_a - 2,  K_Y^2.E = iota deg B - 2 p_a + 2.
[[nodiscard]] inline bool satisfies_e1_relations(const E1Candidate& c, const Rational& kcube = 22)
{
    auto z = ambient_of(c.target);
    auto ids = icalc::blowup_identities(z.kcube(), Rational(-z.iota * c.h_degree), c.pa);
    return ids.kcube_v == kcube && ids.ksq_e == c.ksq_e;
}

/// For each target the relations leave one free parameter k >= 0:
/// p_a = iota k and deg B = deg_0 + k, where deg_0 solves p_a = 0.
/// The family stops once K_Y^2.E <= 0.
[[nodiscard]] inline std::vector<E1Candidate> e1_candidates(int genus = 12)
{
    if (genus != 12) {
        throw Error(ErrorCode::UnsupportedGenus, "e1 families are instantiated only for genus 12");
    }
    const Rational kcube(2 * genus - 2);
    std::vector<E1Candidate> out;
    for (E1Target t : {E1Target::P3, E1Target::Q, E1Target::DP4, E1Target::DP5}) {
        auto z = ambient_of(t);
        Rational deg0 = (z.kcube() - kcube - 2) / (2 * z.iota);
        if (!is_integer(deg0)) {
            continue;
        }
        for (int k = 0;; ++k) {
            E1Candidate c;
            c.target = t;
            c.k = k;
            c.pa = z.iota * k;
            c.h_degree = num(deg0).convert_to<int>() + k;
            c.ksq_e = icalc::blowup_identities(z.kcube(), Rational(-z.iota * c.h_degree), c.pa).ksq_e;
            if (c.ksq_e <= 0) {
                break;
            }
            if (!satisfies_e1_relations(c, kcube)) {
                throw Error(ErrorCode::InvalidArgument, "family relation broken at " + c.label());
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace detail {

inline std::optional<Exclusion> rule_cast(const E1Candidate& c)
{
    if (c.target != E1Target::P3) {
        return std::nullopt;
    }
    // B is cut out by quartics (|-K_Y| is free), hence not planar: nondegenerate in P^3.
    const int bound = castelnuovo_bound(c.h_degree, 3);
    if (c.pa <= bound) {
        return std::nullopt;
    }
    return Exclusion{"R-CAST",
                     "pi(" + std::to_string(c.h_degree) + ",3)=" + std::to_string(bound) + " < " + std::to_string(c.pa),
                     {"B is an intersection of quartics, so not contained in a plane",
                      "p_a(B) = " + std::to_string(c.pa) + " > pi(" + std::to_string(c.h_degree)
                          + ",3) = " + std::to_string(bound)}};
}

inline std::optional<Exclusion> rule_cubic_cap(const E1Candidate& c)
{
    if (c.target != E1Target::Q || c.k < 1) {
        return std::nullopt;
    }
    Exclusion ex{"R-CUBIC-CAP", "", {}};
    const int bound = castelnuovo_bound(c.h_degree, 4);
    if (c.pa <= bound) {
        return std::nullopt;
    }
    ex.log.push_back("pi(" + std::to_string(c.h_degree) + ",4) = " + std::to_string(bound) + " < p_a = "
                     + std::to_string(c.pa) + ": B lies in a hyperplane");
    ex.log.push_back("B is cut out by cubics on the quadric surface Q cap P^3: deg B <= 6");
    if (c.h_degree > 6) {
        ex.reason = "deg B = " + std::to_string(c.h_degree) + " > 6";
        ex.log.push_back(ex.reason);
        return ex;
    }
    // (a,b) complete intersection in P^3: p_a = ab(a+b-4)/2 + 1.
    const int ci_pa = 2 * 3 * (2 + 3 - 4) / 2 + 1;
    ex.log.push_back("deg B = 6: B is the (2,3) complete intersection with p_a = " + std::to_string(ci_pa));
    if (ci_pa == c.pa) {
        return std::nullopt;
    }
    ex.reason = "(2,3) complete intersection has p_a " + std::to_string(ci_pa) + " != " + std::to_string(c.pa);
    return ex;
}

inline std::optional<Exclusion> rule_table(const E1Candidate& c, const ReferenceTable& table)
{
    auto z = ambient_of(c.target);
    for (const auto& e : table.entries()) {
        if (!e.has_tag("anticanonical-ample") || e.rho != 2) {
            continue;
        }
        auto base = e.tag_value("base");
        if (!base || *base != z.name) {
            continue;
        }
        if (e.int_tag("curve-degree") != c.h_degree || e.int_tag("pa") != c.pa) {
            continue;
        }
        if (e.kcube != 22) {
            throw Error(ErrorCode::MalformedRow, e.name + " should have (-K)^3 = 22");
        }
        return Exclusion{"R-TABLE", e.name + ": -K_Y ample, no small contraction",
                         {"Y matches " + e.name + " (" + e.notes + ")", "(-K)^3 = " + to_string(e.kcube)}};
    }
    return std::nullopt;
}

inline std::optional<Exclusion> rule_secant_span(const E1Candidate& c)
{
    if ((c.target != E1Target::DP4 && c.target != E1Target::DP5) || c.k < 1) {
        return std::nullopt;
    }
    const int d = c.target == E1Target::DP4 ? 4 : 5;
    Exclusion ex{"R-SECANT-SPAN", "", {}};
    ex.log.push_back("B is cut out by quadrics: dim span >= 4");
    // A 4-dimensional span cuts V_d in a curve of degree d and p_a 1.
    if (c.h_degree == 5 && d == 5) {
        ex.log.push_back("span 4 would force B = V5 cap P^4 with p_a 1 != " + std::to_string(c.pa));
    } else {
        ex.log.push_back("span 4 needs deg B = 5 and d = 5");
    }
    for (int n = 5; n <= d + 1; ++n) {
        const int bound = castelnuovo_bound(c.h_degree, n);
        if (c.pa <= bound) {
            return std::nullopt;
        }
        ex.log.push_back("span " + std::to_string(n) + ": pi(" + std::to_string(c.h_degree) + "," + std::to_string(n)
                         + ") = " + std::to_string(bound) + " < " + std::to_string(c.pa));
    }
    ex.reason = "no span 4.." + std::to_string(d + 1) + " accommodates p_a " + std::to_string(c.pa);
    return ex;
}

}  // namespace detail

/// Applies the enabled rules in a fixed order; the first that fires wins.
[[nodiscard]] inline std::vector<E1Candidate> filter_e1(std::vector<E1Candidate> cands, const RuleSet& enabled,
                                                        const ReferenceTable& table)
{
    for (auto& c : cands) {
        c.exclusion.reset();
        if (enabled.contains("R-CAST")) {
            c.exclusion = detail::rule_cast(c);
        }
        if (!c.exclusion && enabled.contains("R-CUBIC-CAP")) {
            c.exclusion = detail::rule_cubic_cap(c);
        }
        if (!c.exclusion && enabled.contains("R-TABLE")) {
            c.exclusion = detail::rule_table(c, table);
        }
        if (!c.exclusion && enabled.contains("R-SECANT-SPAN")) {
            c.exclusion = detail::rule_secant_span(c);
        }
    }
    return cands;
}

// -- contraction kinds ---------------------------------------------------

enum class ContractionTag { E1, E2, E3_4, E5, Conic, DelPezzo };

struct ContractionKind
{
    ContractionTag tag = ContractionTag::E1;
    int param = 0;  // deg of the discriminant for conic bundles, K_F^2 for del Pezzo fibrations

    /// Length of the extremal ray.
    [[nodiscard]] int mu() const
    {
        switch (tag) {
        case ContractionTag::E2: return 2;
        case ContractionTag::Conic: return param == 0 ? 2 : 1;
        case ContractionTag::DelPezzo: return param == 8 ? 2 : param == 9 ? 3 : 1;
        default: return 1;
        }
    }

    [[nodiscard]] std::string label() const
    {
        switch (tag) {
        case ContractionTag::E1: return "e1";
        case ContractionTag::E2: return "e2";
        case ContractionTag::E3_4: return "e3-4";
        case ContractionTag::E5: return "e5";
        case ContractionTag::Conic: return "c(" + std::to_string(param) + ")";
        case ContractionTag::DelPezzo: return "d(" + std::to_string(param) + ")";
        }
        return "?";
    }

    friend auto operator<=>(const ContractionKind&, const ContractionKind&) = default;
};

/// Every contraction type of a two-ray game from a terminal Gorenstein
/// midpoint, in ledger order.
[[nodiscard]] inline std::vector<ContractionKind> contraction_kinds()
{
    std::vector<ContractionKind> out{{ContractionTag::E1, 0},
                                     {ContractionTag::E2, 0},
                                     {ContractionTag::E3_4, 0},
                                     {ContractionTag::E5, 0}};
    for (int delta = 0; delta <= 11; ++delta) {
        out.push_back({ContractionTag::Conic, delta});
    }
    for (int k = 1; k <= 9; ++k) {
        if (k != 7) {
            out.push_back({ContractionTag::DelPezzo, k});
        }
    }
    return out;
}

/// One side of a link: a contraction kind, refined by the e1 candidate when
/// the kind is e1.
struct Side
{
    ContractionKind kind;
    std::optional<E1Candidate> e1;

    [[nodiscard]] std::string label() const { return e1 ? e1->label() : kind.label(); }
    friend bool operator==(const Side& a, const Side& b)
    {
        return a.kind == b.kind && a.e1.has_value() == b.e1.has_value() && (!a.e1 || *a.e1 == *b.e1);
    }
};

struct RightSide
{
    Side side;
    std::string base;        // Z+
    std::string description; // f+
    std::vector<std::string> log;
};

[[nodiscard]] inline std::string curve_name(int degree)
{
    static constexpr std::array<std::string_view, 10> names{
        "", "line", "conic", "cubic", "quartic", "quintic", "sextic", "septic", "octic", "nonic"};
    return degree >= 1 && degree <= 9 ? std::string(names[static_cast<std::size_t>(degree)])
                                      : "degree-" + std::to_string(degree);
}

[[nodiscard]] inline std::string e1_description(const E1Candidate& c)
{
    return std::string("blowup of a ") + (c.pa == 0 ? "rational " : "") + curve_name(c.h_degree) + " curve (p_a "
           + std::to_string(c.pa) + ")";
}

/// Reads off f+ for a surviving e1 side. The second ray is spanned by
/// S = -K_Y - H* (the class of |(iota - 1)H - B|); since flops preserve
/// (-K).S^2 and (-K)^2.S, those two numbers classify f+:
///   (-K).S^2 = 0  -> del Pezzo fibration over P^1 of degree (-K)^2.S
///   (-K).S^2 = 2  -> conic bundle over P^2 with deg Delta = 12 - (-K)^2.S
///   otherwise     -> e1 onto a rank-one Fano with iota H^3 = (-K).S^2.
[[nodiscard]] inline RightSide right_side_invariants(const E1Candidate& left, const ReferenceTable& table)
{
    if (!left.survived()) {
        throw Error(ErrorCode::InvalidArgument, left.label() + " is excluded");
    }
    auto z = ambient_of(left.target);
    auto ring = icalc::curve_blowup_ring(z, left.curve());
    const icalc::DivisorClass minus_k = ring.anticanonical_class();
    const icalc::DivisorClass s = minus_k - icalc::DivisorClass(1, 0);
    const Rational q2 = ring.eval(minus_k, s, s);
    const Rational q1 = ring.eval(minus_k, minus_k, s);
    const Rational kcube = ring.anticanonical_cube();
    RightSide out;
    out.log.push_back("S = -K_Y - H*: (-K).S^2 = " + to_string(q2) + ", (-K)^2.S = " + to_string(q1));
    if (q2 == 0) {
        if (!linkeq::is_del_pezzo_degree(q1)) {
            throw Error(ErrorCode::InvalidArgument, "fibre degree " + to_string(q1) + " is not a del Pezzo degree");
        }
        const int k = num(q1).convert_to<int>();
        out.side = {{ContractionTag::DelPezzo, k}, std::nullopt};
        out.base = "P1";
        out.description = "del Pezzo fibration of degree " + std::to_string(k);
        return out;
    }
    if (q2 == 2) {
        const Rational delta = 12 - q1;
        if (!is_integer(delta) || delta < 0) {
            throw Error(ErrorCode::InvalidArgument, "discriminant degree " + to_string(delta));
        }
        const int d = num(delta).convert_to<int>();
        out.side = {{ContractionTag::Conic, d}, std::nullopt};
        out.base = "P2";
        out.description = "conic bundle with discriminant of degree " + std::to_string(d);
        out.log.push_back("deg Delta = 12 - " + to_string(q1) + " = " + std::to_string(d));
        return out;
    }
    // Birational: (-K).H+^2 = iota+ H+^3 and (-K)^2.H+ = iota+^2 H+^3 - deg B+.
    for (const auto* e : table.select([](const ReferenceEntry& r) { return r.rho == 1 && r.tag_value("iota"); })) {
        const int iota = e->int_tag("iota");
        const Rational hcube = parse_rational(*e->tag_value("hcube"));
        if (iota * hcube != q2) {
            continue;
        }
        const Rational deg = iota * iota * hcube - q1;
        if (deg < 1 || !is_integer(deg)) {
            out.log.push_back(e->name + ": curve degree " + to_string(deg) + " rejected");
            continue;
        }
        // kcube = (-K_Z+)^3 - 2 iota deg + 2 p_a - 2
        const Rational pa = (kcube - e->kcube + 2 * iota * deg + 2) / 2;
        for (auto& cand : e1_candidates(num(kcube / 2 + 1).convert_to<int>())) {
            if (ambient_of(cand.target).name == e->name && cand.h_degree == deg && cand.pa == pa) {
                out.side = {{ContractionTag::E1, 0}, cand};
                out.base = e->name;
                out.description = e1_description(cand);
                out.log.push_back(e->name + ": deg B+ = " + to_string(deg) + ", p_a(B+) = " + to_string(pa));
                return out;
            }
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no rank-one target fits the second ray of " + left.label());
}

/// (-K_Y)^2.(a H* - b E) in the ring of the blowup described by `left`.
[[nodiscard]] inline Rational irreducibility_degree_test(int a, int b, const E1Candidate& left)
{
    auto z = ambient_of(left.target);
    auto ring = icalc::curve_blowup_ring(z, left.curve());
    auto minus_k = ring.anticanonical_class();
    return ring.eval(minus_k, minus_k, icalc::DivisorClass(a, -b));
}

/// P(E) over P^2 with -K^3 = kcube, E normalised to c1 in {0, -1}.
[[nodiscard]] inline icalc::ChernData bundle_for(const Rational& kcube)
{
    for (int c1 : {0, -1}) {
        // kcube = 54 + 2 c1^2 - 8 c2
        Rational c2 = (54 + 2 * c1 * c1 - kcube) / 8;
        if (is_integer(c2)) {
            icalc::ChernData data{c1 * c1, num(c2).convert_to<int>(), 9};
            if (icalc::projbundle_kcube(data) != kcube) {
                throw Error(ErrorCode::InvalidArgument, "bundle normalisation failed");
            }
            return data;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no normalised rank-2 bundle with -K^3 = " + to_string(kcube));
}

// -- the ledger ----------------------------------------------------------

enum class LinkStatus { Realized, Excluded };

[[nodiscard]] inline std::string to_string(LinkStatus s)
{
    return s == LinkStatus::Realized ? "realized" : "excluded";
}

struct RealizedRow
{
    int number = 0;
    std::string z;
    std::string f;
    std::string z_plus;
    std::string f_plus;
};

struct LinkCandidate
{
    Side left;
    Side right;
    LinkStatus status = LinkStatus::Excluded;
    std::string rule;
    std::string reason;
    std::vector<std::string> log;
    std::optional<linkeq::SolutionReport> solution;
    std::optional<RealizedRow> row;
};

struct EnumerateOptions
{
    linkeq::SolveOptions solve;
};

namespace detail {

inline void exclude(LinkCandidate& lc, std::string rule, std::string reason)
{
    lc.status = LinkStatus::Excluded;
    lc.rule = std::move(rule);
    lc.reason = std::move(reason);
}

inline void from_report(LinkCandidate& lc, linkeq::SolutionReport rep, const std::string& what)
{
    if (rep.status == linkeq::Status::NoSolutions) {
        exclude(lc, "R-LINKEQ", what + ": " + linkeq::to_string(rep.certificate_kind));
    } else if (rep.geometric_exclusion) {
        exclude(lc, "R-LINKEQ", what + ": " + *rep.geometric_exclusion);
    } else {
        exclude(lc, "R-LINKEQ", what + ": unresolved");
    }
    lc.solution = std::move(rep);
}

inline void resolve_e5(LinkCandidate& lc, const Rational& kcube, const linkeq::SolveOptions& opts)
{
    int delta = 0;
    switch (lc.right.kind.tag) {
    case ContractionTag::Conic: delta = 1; break;
    case ContractionTag::DelPezzo: delta = 0; break;
    case ContractionTag::E5: delta = -1; break;
    default: throw Error(ErrorCode::InvalidArgument, "e5 partner out of order");
    }
    auto rep = linkeq::solve_e5_pair(kcube, delta, std::nullopt, opts);
    lc.log.push_back("11a^2 - ab - b^2 = " + std::to_string(delta) + ": " + linkeq::to_string(rep.status));
    if (rep.status == linkeq::Status::Solutions && delta == -1) {
        // Pic(Y) is then generated by K_Y and the other exceptional divisor.
        lc.log.push_back("both sides e5: Pic generated by K and D, so b = 1");
        rep = linkeq::solve_e5_pair(kcube, delta, 1, opts);
    }
    from_report(lc, std::move(rep), "e5 relation");
}

}  // namespace detail

/// The side list in ledger order: e1 expanded into its candidates.
[[nodiscard]] inline std::vector<Side> ledger_sides(const std::vector<E1Candidate>& e1)
{
    std::vector<Side> sides;
    for (const auto& kind : contraction_kinds()) {
        if (kind.tag == ContractionTag::E1) {
            for (const auto& c : e1) {
                sides.push_back({kind, c});
            }
        } else {
            sides.push_back({kind, std::nullopt});
        }
    }
    return sides;
}

[[nodiscard]] inline std::vector<LinkCandidate> enumerate_links(int genus, int cl_rank, const ReferenceTable& table,
                                                                const EnumerateOptions& opts = {})
{
    if (genus != 12) {
        throw Error(ErrorCode::UnsupportedGenus, "link enumeration is implemented for genus 12 only");
    }
    if (cl_rank != 2) {
        throw Error(ErrorCode::UnsupportedRank, "link enumeration needs class-group rank 2");
    }
    const Rational kcube(2 * genus - 2);
    const auto e1 = filter_e1(e1_candidates(genus), all_rules(), table);
    const auto sides = ledger_sides(e1);

    // e2 / e3-4: (-K_Z)^3 = 22 + delta must be divisible by iota^3 with iota >= 2.
    auto index_fit = [&](icalc::PointBlowupKind kind) {
        const Rational zc = kcube + (kind == icalc::PointBlowupKind::E2 ? 8 : 2);
        if (icalc::point_blowup_case(kind, zc).kcube_v != kcube) {
            throw Error(ErrorCode::InvalidArgument, "point blowup table mismatch");
        }
        std::vector<std::string> log{"(-K_Z)^3 = " + to_string(zc) + " (genus "
                                     + icalc::genus_of(zc).str() + " > 12, so iota(Z) >= 2)"};
        std::optional<int> fit;
        for (int iota = 2; iota <= 4; ++iota) {
            const Rational h = zc / (iota * iota * iota);
            log.push_back("iota = " + std::to_string(iota) + ": H^3 = " + to_string(h));
            if (is_integer(h) && !fit) {
                fit = iota;
            }
        }
        return std::pair{fit, log};
    };

    std::vector<LinkCandidate> out;
    int row_number = 0;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        for (std::size_t j = i; j < sides.size(); ++j) {
            LinkCandidate lc{sides[i], sides[j], LinkStatus::Excluded, {}, {}, {}, std::nullopt, std::nullopt};
            const Side& l = lc.left;
            const Side& r = lc.right;
            if (l.e1 && !l.e1->survived()) {
                detail::exclude(lc, l.e1->exclusion->rule, l.e1->label() + ": " + l.e1->exclusion->reason);
                lc.log = l.e1->exclusion->log;
            } else if (r.e1 && !r.e1->survived()) {
                detail::exclude(lc, r.e1->exclusion->rule, r.e1->label() + ": " + r.e1->exclusion->reason);
                lc.log = r.e1->exclusion->log;
            } else if (l.e1) {
                RightSide rs = right_side_invariants(*l.e1, table);
                lc.log = rs.log;
                if (rs.side == r) {
                    lc.status = LinkStatus::Realized;
                    lc.rule = "realized";
                    lc.row = RealizedRow{++row_number, ambient_of(l.e1->target).name, e1_description(*l.e1), rs.base,
                                         rs.description};
                } else {
                    detail::exclude(lc, "R-RIGHT-SIDE", "f+ of " + l.e1->label() + " is " + rs.side.label());
                }
            } else if (l.kind.tag == ContractionTag::E2 || l.kind.tag == ContractionTag::E3_4) {
                const auto kind =
                    l.kind.tag == ContractionTag::E2 ? icalc::PointBlowupKind::E2 : icalc::PointBlowupKind::E3_4;
                auto [fit, log] = index_fit(kind);
                lc.log = log;
                if (!fit) {
                    detail::exclude(lc, "R-INDEX-DIVISIBILITY", "no iota in 2..4 divides (-K_Z)^3 as iota^3");
                } else {
                    const auto& e = table.at("MM2-15");
                    if (!e.has_tag("cubic-projection")) {
                        throw Error(ErrorCode::MissingEntry, "MM2-15 lacks the cubic-projection fact");
                    }
                    lc.log.push_back("Z is the cubic threefold; Z -> Z+ is projection from the point, Y is " + e.name);
                    detail::exclude(lc, "R-TABLE", e.name + ": -K_Y ample, no small contraction");
                }
            } else if (l.kind.tag == ContractionTag::E5) {
                detail::resolve_e5(lc, kcube, opts.solve);
            } else if (l.kind.tag == ContractionTag::Conic && r.kind.tag == ContractionTag::Conic) {
                const int delta = l.kind.param;
                auto rep = delta == 0 ? linkeq::solve_cc(kcube, 0, std::nullopt, opts.solve)
                                      : linkeq::solve_cc(kcube, delta, 1, opts.solve);
                if (delta != 0) {
                    lc.log.push_back("both discriminants nonempty: Pic generated by K and F, so b = 1");
                }
                detail::from_report(lc, std::move(rep), "conic-conic relation");
            } else if (l.kind.tag == ContractionTag::Conic && r.kind.tag == ContractionTag::DelPezzo) {
                auto rep = linkeq::solve_cd(kcube, l.kind.param, opts.solve);
                if (rep.status == linkeq::Status::Solutions && rep.fiber_degree) {
                    if (*rep.fiber_degree == r.kind.param) {
                        auto bundle = bundle_for(kcube);
                        lc.status = LinkStatus::Realized;
                        lc.rule = "realized";
                        lc.log.push_back("P^1-bundle over P^2: -K^3 = 54 + 2c1^2 - 8c2 gives c1 = 0, c2 = "
                                         + std::to_string(bundle.c2));
                        lc.row = RealizedRow{++row_number, "P2",
                                             "P(E) -> P2, E stable of rank 2 with c1 = 0, c2 = "
                                                 + std::to_string(bundle.c2),
                                             "P1", "del Pezzo fibration of degree " + std::to_string(*rep.fiber_degree)};
                        lc.solution = std::move(rep);
                    } else {
                        detail::exclude(lc, "R-FIBER-DEGREE",
                                        "fibre degree is forced to " + std::to_string(*rep.fiber_degree));
                        lc.solution = std::move(rep);
                    }
                } else {
                    detail::from_report(lc, std::move(rep), "conic-del Pezzo relation");
                }
            } else if (l.kind.tag == ContractionTag::DelPezzo && r.kind.tag == ContractionTag::DelPezzo) {
                detail::from_report(lc, linkeq::solve_dd(kcube, l.kind.param, opts.solve), "del Pezzo pair");
            } else {
                throw Error(ErrorCode::InvalidArgument, "unhandled pair " + l.label() + " / " + r.label());
            }
            out.push_back(std::move(lc));
        }
    }
    return out;
}

[[nodiscard]] inline std::vector<RealizedRow> realized_rows(const std::vector<LinkCandidate>& ledger)
{
    std::vector<RealizedRow> out;
    for (const auto& lc : ledger) {
        if (lc.status == LinkStatus::Realized) {
            out.push_back(*lc.row);
        }
    }
    return out;
}

}  // namespace sarkisov::enumerate
