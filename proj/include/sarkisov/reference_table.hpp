#pragma once

// Facts consumed by citation from the classification of smooth Fano
// threefolds, shipped as a TSV so they stay reviewable inputs:
//
//   name <TAB> rho <TAB> kcube <TAB> notes <TAB> tags
//
// Tags are ';'-separated, each either a bare flag ("contains-plane") or a
// key:value pair ("iota:4"). Lines starting with '#' and blank lines are
// skipped.

#include "sarkisov/error.hpp"
#include "sarkisov/rational.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sarkisov {

struct ReferenceEntry
{
    std::string name;
    int rho = 1;
    Rational kcube;
    std::string notes;
    std::vector<std::string> tags;

    [[nodiscard]] bool has_tag(std::string_view flag) const
    {
        return std::find(tags.begin(), tags.end(), flag) != tags.end();
    }

    /// Value of the first "key:value" tag with this key.
    [[nodiscard]] std::optional<std::string> tag_value(std::string_view key) const
    {
        for (const auto& t : tags) {
            if (t.size() > key.size() && t.compare(0, key.size(), key) == 0 && t[key.size()] == ':') {
                return t.substr(key.size() + 1);
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] int int_tag(std::string_view key) const
    {
        auto v = tag_value(key);
        if (!v) {
            throw Error(ErrorCode::MissingEntry, name + " has no tag '" + std::string(key) + "'");
        }
        return num(parse_rational(*v)).convert_to<int>();
    }
};

class ReferenceTable
{
public:
    static constexpr std::array<std::string_view, 10> required_entries{
        "MM2-15", "MM2-16", "MM2-18", "MM2-36", "MM3-5", "MM5-products", "P3", "Q", "V5", "P1xP2"};

    ReferenceTable() = default;
    ReferenceTable(std::vector<ReferenceEntry> entries, std::string provenance)
        : entries_(std::move(entries))
        , provenance_(std::move(provenance))
    {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!index_.emplace(entries_[i].name, i).second) {
                throw Error(ErrorCode::MalformedRow, "duplicate entry " + entries_[i].name);
            }
        }
        for (auto name : required_entries) {
            if (!contains(name)) {
                throw Error(ErrorCode::MissingEntry, "required reference entry " + std::string(name) + " is absent");
            }
        }
    }

    [[nodiscard]] bool contains(std::string_view name) const { return index_.contains(std::string(name)); }

    [[nodiscard]] const ReferenceEntry& at(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) {
            throw Error(ErrorCode::MissingEntry, "no reference entry " + std::string(name));
        }
        return entries_[it->second];
    }

    [[nodiscard]] const std::vector<ReferenceEntry>& entries() const { return entries_; }
    [[nodiscard]] const std::string& provenance() const { return provenance_; }

    template <class Pred>
    [[nodiscard]] std::vector<const ReferenceEntry*> select(Pred pred) const
    {
        std::vector<const ReferenceEntry*> out;
        for (const auto& e : entries_) {
            if (pred(e)) {
                out.push_back(&e);
            }
        }
        return out;
    }

private:
    std::vector<ReferenceEntry> entries_;
    std::map<std::string, std::size_t> index_;
    std::string provenance_;
};

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

}  // namespace detail

[[nodiscard]] inline ReferenceTable parse_reference_table(std::istream& in, const std::string& provenance)
{
    std::vector<ReferenceEntry> entries;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto fields = detail::split(line, '\t');
        auto malformed = [&](const std::string& why) {
            return Error(ErrorCode::MalformedRow, provenance + ":" + std::to_string(lineno) + ": " + why);
        };
        if (!header_seen) {
            if (fields != std::vector<std::string>{"name", "rho", "kcube", "notes", "tags"}) {
                throw malformed("expected header name<TAB>rho<TAB>kcube<TAB>notes<TAB>tags");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 5) {
            throw malformed("expected 5 tab-separated fields, got " + std::to_string(fields.size()));
        }
        ReferenceEntry e;
        e.name = fields[0];
        if (e.name.empty()) {
            throw malformed("empty name");
        }
        try {
            e.rho = num(parse_rational(fields[1])).convert_to<int>();
            e.kcube = parse_rational(fields[2]);
        } catch (const Error&) {
            throw malformed("non-numeric rho or kcube");
        }
        if (e.rho < 1 || e.kcube <= 0) {
            throw malformed("rho must be >= 1 and kcube > 0");
        }
        e.notes = fields[3];
        for (auto& t : detail::split(fields[4], ';')) {
            if (!t.empty()) {
                e.tags.push_back(std::move(t));
            }
        }
        entries.push_back(std::move(e));
    }
    return ReferenceTable(std::move(entries), provenance);
}

[[nodiscard]] inline ReferenceTable load_reference_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::MissingEntry, "cannot open reference table " + path.string());
    }
    return parse_reference_table(in, path.filename().string());
}

}  // namespace sarkisov
