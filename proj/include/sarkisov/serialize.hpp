#pragma once

// JSON and text renderings of every report. nlohmann::json keeps object keys
// in a std::map, so dumps are canonical and byte-deterministic. Rationals are
// written as "p/q" strings to stay exact.

#include "sarkisov/bounds.hpp"
#include "sarkisov/dplattice.hpp"
#include "sarkisov/enumerate.hpp"
#include "sarkisov/ledger.hpp"
#include "sarkisov/linkeq.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace sarkisov::serialize {

using json = nlohmann::json;
using sarkisov::to_string;

// -- primitives ----------------------------------------------------------

[[nodiscard]] inline json rational(const Rational& r) { return to_string(r); }

[[nodiscard]] inline Rational rational_from(const json& j)
{
    if (!j.is_string()) {
        throw Error(ErrorCode::MalformedJson, "expected a rational string, got " + j.dump());
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedJson, e.what());
    }
}

template <class T>
[[nodiscard]] T field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::MalformedJson, std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedJson, std::string("field '") + key + "': " + e.what());
    }
}

[[nodiscard]] inline json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::MalformedJson, e.what());
    }
}

// -- ledgers -------------------------------------------------------------

[[nodiscard]] inline json to_json(const Check& c)
{
    return {{"claim", c.claim},
            {"lhs", rational(c.lhs)},
            {"relation", std::string(to_string(c.relation))},
            {"rhs", rational(c.rhs)},
            {"holds", c.holds()}};
}

[[nodiscard]] inline json to_json(const Ledger& l)
{
    json checks = json::array();
    for (const auto& c : l.checks) {
        checks.push_back(to_json(c));
    }
    return {{"checks", checks}, {"all_hold", l.all_hold()}};
}

/// Rebuilds a ledger and re-evaluates every check; a recorded verdict that
/// disagrees with the recomputed one is rejected.
[[nodiscard]] inline Ledger ledger_from_json(const json& j)
{
    Ledger l;
    const auto checks = field<json>(j, "checks");
    if (!checks.is_array()) {
        throw Error(ErrorCode::MalformedJson, "'checks' must be an array");
    }
    for (const auto& c : checks) {
        Check check{field<std::string>(c, "claim"), rational_from(field<json>(c, "lhs")),
                    parse_relation(field<std::string>(c, "relation")), rational_from(field<json>(c, "rhs"))};
        if (c.contains("holds") && field<bool>(c, "holds") != check.holds()) {
            throw Error(ErrorCode::MalformedJson, "recorded verdict disagrees for '" + check.claim + "'");
        }
        l.checks.push_back(std::move(check));
    }
    if (j.contains("all_hold") && field<bool>(j, "all_hold") != l.all_hold()) {
        throw Error(ErrorCode::MalformedJson, "recorded ledger verdict disagrees");
    }
    return l;
}

[[nodiscard]] inline std::string to_text(const Ledger& l)
{
    std::ostringstream os;
    for (const auto& c : l.checks) {
        os << (c.holds() ? "[ok]   " : "[FAIL] ") << c.text() << '\n';
    }
    os << (l.all_hold() ? "all checks hold" : "some checks fail") << '\n';
    return os.str();
}

// -- link equations ------------------------------------------------------

[[nodiscard]] inline linkeq::Sign sign_from(const std::string& s)
{
    for (auto v : {linkeq::Sign::Any, linkeq::Sign::Positive, linkeq::Sign::NonNegative}) {
        if (linkeq::to_string(v) == s) {
            return v;
        }
    }
    throw Error(ErrorCode::MalformedJson, "unknown sign '" + s + "'");
}

[[nodiscard]] inline linkeq::Status status_from(const std::string& s)
{
    for (auto v : {linkeq::Status::Solutions, linkeq::Status::NoSolutions, linkeq::Status::Unresolved}) {
        if (linkeq::to_string(v) == s) {
            return v;
        }
    }
    throw Error(ErrorCode::MalformedJson, "unknown status '" + s + "'");
}

[[nodiscard]] inline linkeq::CertificateKind certificate_from(const std::string& s)
{
    using K = linkeq::CertificateKind;
    for (auto v : {K::None, K::ModularObstruction, K::FiniteFactorization, K::NegativeDiscriminant,
                   K::NonSquareDiscriminant, K::FiniteRootSet, K::Divisibility}) {
        if (linkeq::to_string(v) == s) {
            return v;
        }
    }
    throw Error(ErrorCode::MalformedJson, "unknown certificate kind '" + s + "'");
}

[[nodiscard]] inline json to_json(const linkeq::QuadraticForm& f)
{
    json j{{"a", rational(f.a)},
           {"b", rational(f.b)},
           {"c", rational(f.c)},
           {"d", rational(f.d)},
           {"alpha_denominators", f.alpha_denominators},
           {"beta_denominators", f.beta_denominators},
           {"alpha_sign", linkeq::to_string(f.alpha_sign)},
           {"beta_sign", linkeq::to_string(f.beta_sign)},
           {"text", f.text()}};
    if (f.beta_fixed) {
        j["beta_fixed"] = rational(*f.beta_fixed);
    }
    return j;
}

[[nodiscard]] inline linkeq::QuadraticForm form_from_json(const json& j)
{
    linkeq::QuadraticForm f;
    f.a = rational_from(field<json>(j, "a"));
    f.b = rational_from(field<json>(j, "b"));
    f.c = rational_from(field<json>(j, "c"));
    f.d = rational_from(field<json>(j, "d"));
    f.alpha_denominators = field<std::vector<int>>(j, "alpha_denominators");
    f.beta_denominators = field<std::vector<int>>(j, "beta_denominators");
    f.alpha_sign = sign_from(field<std::string>(j, "alpha_sign"));
    f.beta_sign = sign_from(field<std::string>(j, "beta_sign"));
    if (j.contains("beta_fixed")) {
        f.beta_fixed = rational_from(j.at("beta_fixed"));
    }
    f.validate();
    return f;
}

[[nodiscard]] inline json certificate_json(const linkeq::SolutionReport& r)
{
    json c{{"kind", linkeq::to_string(r.certificate_kind)}};
    if (r.modular) {
        c["modulus"] = r.modular->modulus;
        c["target_residue"] = r.modular->target_residue;
        c["attained_residues"] = r.modular->attained_residues;
        c["residues_checked"] = r.modular->residues_checked;
    }
    if (r.discriminant) {
        c["discriminant"] = r.discriminant->str();
    }
    return c;
}

[[nodiscard]] inline json to_json(const linkeq::SolutionReport& r)
{
    json sols = json::array();
    for (const auto& [x, y] : r.solutions) {
        sols.push_back({rational(x), rational(y)});
    }
    json j{{"form", to_json(r.form)},
           {"status", linkeq::to_string(r.status)},
           {"solutions", sols},
           {"complete", r.complete},
           {"search_bound", r.search_bound},
           {"certificate", certificate_json(r)},
           {"evidence", r.evidence},
           {"verified", linkeq::verify_certificate(r)}};
    if (r.side_condition) {
        j["side_condition"] = *r.side_condition;
    }
    if (r.geometric_exclusion) {
        j["geometric_exclusion"] = *r.geometric_exclusion;
    }
    if (r.fiber_degree) {
        j["fiber_degree"] = *r.fiber_degree;
    }
    return j;
}

[[nodiscard]] inline linkeq::SolutionReport solution_from_json(const json& j)
{
    linkeq::SolutionReport r;
    r.form = form_from_json(field<json>(j, "form"));
    r.status = status_from(field<std::string>(j, "status"));
    for (const auto& p : field<json>(j, "solutions")) {
        if (!p.is_array() || p.size() != 2) {
            throw Error(ErrorCode::MalformedJson, "a solution must be a pair");
        }
        r.solutions.emplace_back(rational_from(p[0]), rational_from(p[1]));
    }
    r.complete = field<bool>(j, "complete");
    r.search_bound = field<int>(j, "search_bound");
    const auto c = field<json>(j, "certificate");
    r.certificate_kind = certificate_from(field<std::string>(c, "kind"));
    if (c.contains("modulus")) {
        linkeq::ModularCertificate m;
        m.modulus = field<std::int64_t>(c, "modulus");
        m.target_residue = field<std::int64_t>(c, "target_residue");
        m.attained_residues = field<std::vector<std::int64_t>>(c, "attained_residues");
        m.residues_checked = field<std::int64_t>(c, "residues_checked");
        r.modular = m;
    }
    if (c.contains("discriminant")) {
        r.discriminant = Integer(field<std::string>(c, "discriminant"));
    }
    r.evidence = field<std::vector<std::string>>(j, "evidence");
    if (j.contains("side_condition")) {
        r.side_condition = field<std::string>(j, "side_condition");
    }
    if (j.contains("geometric_exclusion")) {
        r.geometric_exclusion = field<std::string>(j, "geometric_exclusion");
    }
    if (j.contains("fiber_degree")) {
        r.fiber_degree = field<int>(j, "fiber_degree");
    }
    if (j.contains("verified") && field<bool>(j, "verified") != linkeq::verify_certificate(r)) {
        throw Error(ErrorCode::MalformedJson, "recorded certificate verdict disagrees with replay");
    }
    return r;
}

[[nodiscard]] inline std::string to_text(const linkeq::SolutionReport& r)
{
    std::ostringstream os;
    os << "equation: " << r.form.text() << '\n';
    os << "alpha " << linkeq::to_string(r.form.alpha_sign) << ", beta " << linkeq::to_string(r.form.beta_sign)
       << '\n';
    os << "status: " << linkeq::to_string(r.status) << '\n';
    if (r.certificate_kind != linkeq::CertificateKind::None) {
        os << "certificate: " << linkeq::to_string(r.certificate_kind);
        if (r.modular) {
            os << " mod " << r.modular->modulus << " (target " << r.modular->target_residue << " not attained)";
        }
        if (r.discriminant) {
            os << ", discriminant " << r.discriminant->str();
        }
        os << '\n';
    }
    for (const auto& [x, y] : r.solutions) {
        os << "solution: (" << to_string(x) << ", " << to_string(y) << ")\n";
    }
    for (const auto& e : r.evidence) {
        os << "  " << e << '\n';
    }
    if (r.side_condition) {
        os << "side condition: " << *r.side_condition << '\n';
    }
    if (r.fiber_degree) {
        os << "fibre degree: " << *r.fiber_degree << '\n';
    }
    if (r.geometric_exclusion) {
        os << "excluded: " << *r.geometric_exclusion << '\n';
    }
    os << "certificate replay: " << (linkeq::verify_certificate(r) ? "ok" : "FAILED") << '\n';
    return os.str();
}

// -- links ---------------------------------------------------------------

[[nodiscard]] inline json side_params(const enumerate::Side& s)
{
    json p{{"kind", s.kind.label()}, {"mu", s.kind.mu()}};
    if (s.e1) {
        p["target"] = enumerate::to_string(s.e1->target);
        p["k"] = s.e1->k;
        p["pa"] = s.e1->pa;
        p["degree"] = s.e1->h_degree;
        p["ksq_e"] = rational(s.e1->ksq_e);
    }
    return p;
}

[[nodiscard]] inline json to_json(const enumerate::RealizedRow& r)
{
    return {{"number", r.number}, {"z", r.z}, {"f", r.f}, {"z_plus", r.z_plus}, {"f_plus", r.f_plus}};
}

[[nodiscard]] inline json to_json(const enumerate::LinkCandidate& lc)
{
    json params{{"left", side_params(lc.left)}, {"right", side_params(lc.right)}, {"reason", lc.reason},
                {"log", lc.log}};
    if (lc.row) {
        params["row"] = to_json(*lc.row);
    }
    json j{{"left", lc.left.label()},
           {"right", lc.right.label()},
           {"params", params},
           {"status", enumerate::to_string(lc.status)},
           {"rule", lc.rule}};
    if (lc.solution) {
        j["certificate"] = to_json(*lc.solution);
    }
    return j;
}

/// A ledger passes when every certificate it carries replays.
[[nodiscard]] inline bool links_verified(const std::vector<enumerate::LinkCandidate>& ledger)
{
    return std::all_of(ledger.begin(), ledger.end(), [](const auto& lc) {
        return !lc.solution || linkeq::verify_certificate(*lc.solution);
    });
}

[[nodiscard]] inline json links_json(const std::vector<enumerate::LinkCandidate>& ledger, bool full)
{
    json rows = json::array();
    for (const auto& r : enumerate::realized_rows(ledger)) {
        rows.push_back(to_json(r));
    }
    json j{{"realized", rows},
           {"pairs", ledger.size()},
           {"excluded", std::count_if(ledger.begin(), ledger.end(),
                                      [](const auto& lc) { return lc.status == enumerate::LinkStatus::Excluded; })},
           {"verified", links_verified(ledger)}};
    if (full) {
        json all = json::array();
        for (const auto& lc : ledger) {
            all.push_back(to_json(lc));
        }
        j["ledger"] = all;
    }
    return j;
}

inline constexpr const char* link_columns[] = {"No", "Z", "f", "Z+", "f+"};

[[nodiscard]] inline std::string links_tsv(const std::vector<enumerate::LinkCandidate>& ledger, bool full)
{
    std::ostringstream os;
    if (full) {
        os << "left\tright\tstatus\trule\treason\n";
        for (const auto& lc : ledger) {
            os << lc.left.label() << '\t' << lc.right.label() << '\t' << enumerate::to_string(lc.status) << '\t'
               << lc.rule << '\t' << lc.reason << '\n';
        }
        return os.str();
    }
    os << "No\tZ\tf\tZ+\tf+\n";
    for (const auto& r : enumerate::realized_rows(ledger)) {
        os << r.number << '\t' << r.z << '\t' << r.f << '\t' << r.z_plus << '\t' << r.f_plus << '\n';
    }
    return os.str();
}

[[nodiscard]] inline std::string links_text(const std::vector<enumerate::LinkCandidate>& ledger, bool full)
{
    const auto rows = enumerate::realized_rows(ledger);
    std::size_t wz = 2, wf = 1, wzp = 2;
    for (const auto& r : rows) {
        wz = std::max(wz, r.z.size());
        wf = std::max(wf, r.f.size());
        wzp = std::max(wzp, r.z_plus.size());
    }
    std::ostringstream os;
    auto line = [&](const std::string& n, const std::string& z, const std::string& f, const std::string& zp,
                    const std::string& fp) {
        os << std::left << std::setw(4) << n << std::setw(static_cast<int>(wz) + 2) << z
           << std::setw(static_cast<int>(wf) + 2) << f << std::setw(static_cast<int>(wzp) + 2) << zp << fp << '\n';
    };
    line("No", "Z", "f", "Z+", "f+");
    for (const auto& r : rows) {
        line(std::to_string(r.number), r.z, r.f, r.z_plus, r.f_plus);
    }
    if (full) {
        os << '\n';
        for (const auto& lc : ledger) {
            os << lc.left.label() << " | " << lc.right.label() << ": " << enumerate::to_string(lc.status);
            if (!lc.rule.empty()) {
                os << " [" << lc.rule << "] " << lc.reason;
            }
            os << '\n';
        }
    }
    return os.str();
}

// -- bounds --------------------------------------------------------------

[[nodiscard]] inline json to_json(const bounds::Prop24Result& r)
{
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"name", row.name},
                        {"ambient_kcube", rational(row.ambient_kcube)},
                        {"pa", row.pa},
                        {"ksq_e", rational(row.ksq_e)},
                        {"rank_cap", row.rank_cap},
                        {"components", row.components.str()},
                        {"contribution", row.contribution.str()}});
    }
    return {{"ledger", to_json(r.ledger)},
            {"rows", rows},
            {"non_blowup_bound", r.non_blowup_bound.str()},
            {"product_rank", r.product_rank.str()},
            {"bound", r.bound.str()}};
}

[[nodiscard]] inline json to_json(const bounds::Le10Result& r)
{
    return {{"ledger", to_json(r.ledger)}, {"narrative", r.narrative}, {"bound", r.bound.str()}};
}

[[nodiscard]] inline json to_json(const bounds::OrbitVerdict& v)
{
    return {{"surface_degree", v.surface_degree},
            {"conclusive", v.conclusive},
            {"min_orbit", v.min_orbit},
            {"rank_lower_bound", v.rank_lower_bound},
            {"log", v.log}};
}

[[nodiscard]] inline json to_json(const bounds::TheoremVerdict& v)
{
    json j{{"conclusive", v.conclusive},
           {"contradiction", v.contradiction},
           {"surviving_ranks", v.surviving_ranks},
           {"ledger", to_json(v.ledger)},
           {"log", v.log}};
    if (v.rank_lower) {
        j["rank_lower"] = *v.rank_lower;
    }
    if (v.rank_upper) {
        j["rank_upper"] = v.rank_upper->str();
    }
    if (v.rank_two_row) {
        j["rank_two_row"] = to_json(*v.rank_two_row);
    }
    return j;
}

// -- del Pezzo lattices --------------------------------------------------

[[nodiscard]] inline json class_json(const dplattice::LatticeClass& c) { return dplattice::to_string(c); }

[[nodiscard]] inline json classes_json(const std::vector<dplattice::LatticeClass>& cs)
{
    json a = json::array();
    for (const auto& c : cs) {
        a.push_back(class_json(c));
    }
    return a;
}

[[nodiscard]] inline json to_json(const dplattice::NefReport& r)
{
    json neg = json::array();
    for (const auto& [c, v] : r.negative) {
        neg.push_back({{"class", class_json(c)}, {"pairing", v}});
    }
    return {{"divisor", class_json(r.divisor)},
            {"self_intersection", r.self_intersection},
            {"negative", neg},
            {"trivial_lines", classes_json(r.trivial_lines)},
            {"nef", r.nef},
            {"big", r.big}};
}

[[nodiscard]] inline json to_json(const dplattice::ConstructionReport& r)
{
    json j{{"target", r.target},
           {"degree", r.degree},
           {"iota", r.iota},
           {"curve", class_json(r.curve)},
           {"pa", r.pa},
           {"minus_k_dot_b", r.minus_k_dot_b},
           {"restriction", class_json(r.restriction)},
           {"nef", to_json(r.nef)},
           {"secancy", r.secancy},
           {"lifted_kcube", rational(r.lifted_kcube)},
           {"ledger", to_json(r.ledger)}};
    if (r.trivial_line) {
        j["trivial_line"] = class_json(*r.trivial_line);
    }
    return j;
}

[[nodiscard]] inline json to_json(const dplattice::BundleReport& r)
{
    return {{"c1sq", r.chern.c1sq},
            {"c2", r.chern.c2},
            {"monomials",
             {rational(r.monomials[0]), rational(r.monomials[1]), rational(r.monomials[2]), rational(r.monomials[3])}},
            {"kcube", rational(r.kcube)},
            {"chi_1", rational(r.h0_bound_1)},
            {"chi_2", rational(r.h0_bound_2)},
            {"ledger", to_json(r.ledger)}};
}

[[nodiscard]] inline json to_json(const dplattice::QuarticSectionReport& r)
{
    return {{"gamma_degree", rational(r.gamma_degree)},
            {"k_on_gamma", rational(r.k_on_gamma)},
            {"surface_degree", rational(r.surface_degree)},
            {"ledger", to_json(r.ledger)}};
}

[[nodiscard]] inline json error_json(const Error& e)
{
    return {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
}

}  // namespace sarkisov::serialize
