#pragma once

// A ledger is a list of exact comparisons. Each check stores both sides, so
// it can be re-evaluated after serialization.

#include "sarkisov/error.hpp"
#include "sarkisov/rational.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace sarkisov {

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

[[nodiscard]] inline std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
    }
    return "?";
}

[[nodiscard]] inline Relation parse_relation(std::string_view s)
{
    for (Relation r : {Relation::Eq, Relation::Ne, Relation::Lt, Relation::Le, Relation::Gt, Relation::Ge}) {
        if (to_string(r) == s) {
            return r;
        }
    }
    throw Error(ErrorCode::MalformedJson, "unknown relation '" + std::string(s) + "'");
}

struct Check
{
    std::string claim;
    Rational lhs;
    Relation relation = Relation::Eq;
    Rational rhs;

    [[nodiscard]] bool holds() const
    {
        switch (relation) {
        case Relation::Eq: return lhs == rhs;
        case Relation::Ne: return lhs != rhs;
        case Relation::Lt: return lhs < rhs;
        case Relation::Le: return lhs <= rhs;
        case Relation::Gt: return lhs > rhs;
        case Relation::Ge: return lhs >= rhs;
        }
        return false;
    }

    [[nodiscard]] std::string text() const
    {
        return claim + ": " + to_string(lhs) + " " + std::string(to_string(relation)) + " " + to_string(rhs);
    }
};

struct Ledger
{
    std::vector<Check> checks;

    void add(std::string claim, Rational lhs, Relation rel, Rational rhs)
    {
        checks.push_back({std::move(claim), std::move(lhs), rel, std::move(rhs)});
    }

    [[nodiscard]] bool all_hold() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds(); });
    }

    void append(const Ledger& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

}  // namespace sarkisov
