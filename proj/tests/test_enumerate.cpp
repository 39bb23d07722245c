#include "oracles.hpp"
#include "sarkisov/enumerate.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace sarkisov;
using namespace sarkisov::enumerate;

namespace {

const ReferenceTable& table()
{
    static const ReferenceTable t = load_reference_table(SARKISOV_REF_TABLE);
    return t;
}

const std::vector<LinkCandidate>& ledger()
{
    static const std::vector<LinkCandidate> l = enumerate_links(12, 2, table());
    return l;
}

const E1Candidate& find(const std::vector<E1Candidate>& cs, E1Target t, int k)
{
    for (const auto& c : cs) {
        if (c.target == t && c.k == k) {
            return c;
        }
    }
    throw std::runtime_error("candidate not found");
}

}  // namespace

TEST(Castelnuovo, Examples)
{
    EXPECT_EQ(castelnuovo_bound(5, 3), 2);
    EXPECT_EQ(castelnuovo_bound(6, 3), 4);
    EXPECT_EQ(castelnuovo_bound(3, 2), 1);
    EXPECT_EQ(castelnuovo_bound(7, 3), 6);
    try {
        (void)castelnuovo_bound(5, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidAmbient);
    }
}

TEST(Castelnuovo, BruteForceAgreementAndMonotonicity)
{
    for (int d = 1; d <= 40; ++d) {
        for (int n = 2; n <= 8; ++n) {
            ASSERT_EQ(castelnuovo_bound(d, n), oracle::castelnuovo(d, n)) << d << " " << n;
            if (d >= n + 1) {
                if (d + 1 <= 40) {
                    EXPECT_LE(castelnuovo_bound(d, n), castelnuovo_bound(d + 1, n));
                }
                if (n + 1 <= 8) {
                    EXPECT_GE(castelnuovo_bound(d, n), castelnuovo_bound(d, n + 1));
                }
            }
        }
    }
}

TEST(ContractionKinds, LengthsAndDenominators)
{
    std::map<std::string, int> mu;
    for (const auto& k : contraction_kinds()) {
        mu[k.label()] = k.mu();
        EXPECT_GE(k.mu(), 1);
        EXPECT_LE(k.mu(), 3);
    }
    EXPECT_EQ(mu.at("e2"), 2);
    EXPECT_EQ(mu.at("c(0)"), 2);
    EXPECT_EQ(mu.at("c(1)"), 1);
    EXPECT_EQ(mu.at("d(8)"), 2);
    EXPECT_EQ(mu.at("d(9)"), 3);
    EXPECT_EQ(mu.at("e1"), 1);
    EXPECT_FALSE(mu.contains("d(7)"));
    EXPECT_EQ(contraction_kinds().size(), 4u + 12u + 8u);
}

TEST(E1Candidates, FamiliesAtZero)
{
    const auto cs = e1_candidates(12);
    const auto& p3 = find(cs, E1Target::P3, 0);
    EXPECT_EQ(p3.pa, 0);
    EXPECT_EQ(p3.h_degree, 5);
    EXPECT_EQ(p3.ksq_e, 22);
    const auto& q = find(cs, E1Target::Q, 0);
    EXPECT_EQ(q.pa, 0);
    EXPECT_EQ(q.h_degree, 5);
    EXPECT_EQ(q.ksq_e, 17);
    const auto& d5 = find(cs, E1Target::DP5, 0);
    EXPECT_EQ(d5.pa, 0);
    EXPECT_EQ(d5.h_degree, 4);
    EXPECT_EQ(d5.ksq_e, 10);
}

TEST(E1Candidates, ArithmeticClosure)
{
    for (const auto& c : e1_candidates(12)) {
        EXPECT_TRUE(satisfies_e1_relations(c)) << c.label();
        EXPECT_GT(c.ksq_e, 0);
        const auto z = ambient_of(c.target);
        auto o = oracle::curve_blowup(z.iota, z.hcube, c.h_degree, c.pa);
        EXPECT_EQ(o.kcube, 22) << c.label();
        EXPECT_EQ(o.ksq_e, c.ksq_e) << c.label();
    }
}

TEST(E1Candidates, SubcaseFormulas)
{
    for (const auto& c : e1_candidates(12)) {
        switch (c.target) {
        case E1Target::P3:
            EXPECT_EQ(c.pa, 4 * c.k);
            EXPECT_EQ(c.h_degree, 5 + c.k);
            EXPECT_EQ(c.ksq_e, 22 - 4 * c.k);
            break;
        case E1Target::Q:
            EXPECT_EQ(c.pa, 3 * c.k);
            EXPECT_EQ(c.h_degree, 5 + c.k);
            EXPECT_EQ(c.ksq_e, 17 - 3 * c.k);
            EXPECT_LE(c.k, 5);
            break;
        case E1Target::DP4:
        case E1Target::DP5: {
            const int d = c.target == E1Target::DP4 ? 4 : 5;
            EXPECT_EQ(c.pa, 2 * c.k);
            EXPECT_EQ(c.h_degree, 2 * d - 6 + c.k);
            EXPECT_EQ(c.ksq_e, 4 * d - 10 - 2 * c.k);
            break;
        }
        }
    }
}

TEST(E1Candidates, GenusGuard)
{
    try {
        (void)e1_candidates(10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedGenus);
    }
}

TEST(FilterE1, SurvivorsAndRules)
{
    const auto cs = filter_e1(e1_candidates(12), all_rules(), table());
    std::vector<std::pair<E1Target, int>> survivors;
    for (const auto& c : cs) {
        if (c.survived()) {
            survivors.emplace_back(c.target, c.k);
        } else {
            EXPECT_FALSE(c.exclusion->rule.empty());
        }
    }
    EXPECT_EQ(survivors, (std::vector<std::pair<E1Target, int>>{{E1Target::P3, 0}, {E1Target::Q, 0}, {E1Target::DP5, 0}}));

    const auto& p3k2 = find(cs, E1Target::P3, 2);
    EXPECT_EQ(p3k2.pa, 8);
    EXPECT_EQ(p3k2.h_degree, 7);
    EXPECT_EQ(p3k2.exclusion->rule, "R-CAST");
    EXPECT_EQ(castelnuovo_bound(7, 3), 6);

    const auto& p3k1 = find(cs, E1Target::P3, 1);
    EXPECT_EQ(p3k1.exclusion->rule, "R-TABLE");
    EXPECT_NE(p3k1.exclusion->reason.find("MM2-15"), std::string::npos);

    const auto& d4 = find(cs, E1Target::DP4, 0);
    EXPECT_EQ(d4.exclusion->rule, "R-TABLE");
    EXPECT_NE(d4.exclusion->reason.find("MM2-16"), std::string::npos);

    for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(find(cs, E1Target::Q, k).exclusion->rule, "R-CUBIC-CAP");
    }
}

TEST(FilterE1, DisablingATableRuleLetsTheCandidateThrough)
{
    auto rules = all_rules();
    rules.erase("R-TABLE");
    const auto cs = filter_e1(e1_candidates(12), rules, table());
    EXPECT_TRUE(find(cs, E1Target::DP4, 0).survived());
}

TEST(RightSide, Rows)
{
    const auto cs = e1_candidates(12);
    auto p3 = right_side_invariants(find(cs, E1Target::P3, 0), table());
    EXPECT_EQ(p3.base, "P3");
    EXPECT_EQ(p3.description, "blowup of a rational quintic curve (p_a 0)");
    auto q = right_side_invariants(find(cs, E1Target::Q, 0), table());
    EXPECT_EQ(q.base, "P2");
    EXPECT_EQ(q.description, "conic bundle with discriminant of degree 3");
    auto v5 = right_side_invariants(find(cs, E1Target::DP5, 0), table());
    EXPECT_EQ(v5.base, "P1");
    EXPECT_EQ(v5.description, "del Pezzo fibration of degree 6");
}

TEST(Irreducibility, RowOneDegrees)
{
    const auto& p3 = find(e1_candidates(12), E1Target::P3, 0);
    // (4H-E)^2 (aH - bE) = a(16 H^3 - 8 H^2E + HE^2) - b(16 H^2E - 8 HE^2 + E^3)
    //                    = a(16 - 5) - b(40 - 18) = 11a - 22b.
    EXPECT_EQ(irreducibility_degree_test(3, 1, p3), 11);
    EXPECT_GT(irreducibility_degree_test(3, 1, p3), 0);
    EXPECT_LE(irreducibility_degree_test(2, 1, p3), 0);
    EXPECT_LE(irreducibility_degree_test(3, 2, p3), 0);
    EXPECT_EQ(irreducibility_degree_test(3, 2, p3), -11);
}

TEST(Links, FourRealizedRows)
{
    const auto rows = realized_rows(ledger());
    ASSERT_EQ(rows.size(), 4u);
    const std::vector<std::array<std::string, 4>> golden{
        {"P3", "blowup of a rational quintic curve (p_a 0)", "P3", "blowup of a rational quintic curve (p_a 0)"},
        {"Q", "blowup of a rational quintic curve (p_a 0)", "P2", "conic bundle with discriminant of degree 3"},
        {"V5", "blowup of a rational quartic curve (p_a 0)", "P1", "del Pezzo fibration of degree 6"},
        {"P2", "P(E) -> P2, E stable of rank 2 with c1 = 0, c2 = 4", "P1", "del Pezzo fibration of degree 5"}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(rows[i].number, static_cast<int>(i) + 1);
        EXPECT_EQ(rows[i].z, golden[i][0]);
        EXPECT_EQ(rows[i].f, golden[i][1]);
        EXPECT_EQ(rows[i].z_plus, golden[i][2]);
        EXPECT_EQ(rows[i].f_plus, golden[i][3]);
    }
}

TEST(Links, CompleteGridNothingSilentlySkipped)
{
    // Sides: contraction kinds with e1 expanded per candidate.
    const auto sides = ledger_sides(filter_e1(e1_candidates(12), all_rules(), table()));
    const std::size_t n = sides.size();
    EXPECT_EQ(ledger().size(), n * (n + 1) / 2);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& lc : ledger()) {
        EXPECT_TRUE(seen.emplace(lc.left.label(), lc.right.label()).second);
        if (lc.status == LinkStatus::Excluded) {
            EXPECT_FALSE(lc.rule.empty()) << lc.left.label() << " | " << lc.right.label();
            EXPECT_FALSE(lc.reason.empty());
        }
        if (lc.solution) {
            EXPECT_NE(lc.solution->status, linkeq::Status::Unresolved);
            EXPECT_TRUE(linkeq::verify_certificate(*lc.solution));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            EXPECT_TRUE(seen.contains({sides[i].label(), sides[j].label()}));
        }
    }
}

TEST(Links, SpecificPairs)
{
    auto find_pair = [](const std::string& l, const std::string& r) -> const LinkCandidate& {
        for (const auto& lc : ledger()) {
            if (lc.left.label() == l && lc.right.label() == r) {
                return lc;
            }
        }
        throw std::runtime_error("pair not found " + l + " | " + r);
    };
    const auto& e5d = find_pair("e5", "d(6)");
    EXPECT_EQ(e5d.status, LinkStatus::Excluded);
    ASSERT_TRUE(e5d.solution.has_value());
    EXPECT_TRUE(linkeq::verify_certificate(*e5d.solution));

    const auto& dd = find_pair("d(5)", "d(6)");
    EXPECT_EQ(dd.status, LinkStatus::Excluded);
    ASSERT_TRUE(dd.solution.has_value());
    EXPECT_EQ(dd.solution->certificate_kind, linkeq::CertificateKind::Divisibility);
}

TEST(Links, Guards)
{
    try {
        (void)enumerate_links(10, 2, table());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedGenus);
    }
    try {
        (void)enumerate_links(12, 3, table());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedRank);
    }
}

TEST(Bundle, NormalisedChernClasses)
{
    auto c = bundle_for(22);
    EXPECT_EQ(c.c1sq, 0);
    EXPECT_EQ(c.c2, 4);
}
