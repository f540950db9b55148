#include "dcas/covering.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include <fmt/core.h>

#include "dcas/errors.hpp"

namespace dcas {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok)
        out.push_back(tok);
    return out;
}

void check_name_token(const std::string& name, std::size_t line_no) {
    if (name.empty() || name.find(':') != std::string::npos)
        throw ParseError(fmt::format("line {}: bad name token '{}'", line_no, name));
}

void sort_unique(std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

CoveringSpace::CoveringSpace(std::vector<std::string> objects) {
    for (auto& o : objects)
        add_object(o);
}

void CoveringSpace::add_object(const std::string& name) {
    if (object_index_.count(name))
        throw NameError(fmt::format("duplicate object name '{}'", name));
    object_index_.emplace(name, static_cast<std::uint32_t>(objects_.size()));
    objects_.push_back(name);
}

void CoveringSpace::add_element(const std::string& name,
                                const std::vector<std::string>& member_names) {
    std::vector<std::uint32_t> members;
    members.reserve(member_names.size());
    for (const auto& m : member_names)
        members.push_back(object_index(m));
    add_element_by_index(name, std::move(members));
}

void CoveringSpace::add_element_by_index(const std::string& name,
                                         std::vector<std::uint32_t> members) {
    if (element_index_.count(name))
        throw NameError(fmt::format("duplicate element name '{}'", name));
    for (auto i : members)
        if (i >= objects_.size())
            throw NameError(fmt::format("element '{}': object index {} out of range", name, i));
    sort_unique(members);
    element_index_.emplace(name, static_cast<std::uint32_t>(elements_.size()));
    elements_.push_back({name, std::move(members)});
}

void CoveringSpace::extend_element(const std::string& name,
                                   const std::vector<std::uint32_t>& extra) {
    auto& el = elements_[element_index(name)];
    for (auto i : extra) {
        if (i >= objects_.size())
            throw NameError(fmt::format("extend '{}': object index {} out of range", name, i));
        el.members.push_back(i);
    }
    sort_unique(el.members);
}

bool CoveringSpace::has_object(const std::string& name) const {
    return object_index_.count(name) != 0;
}

bool CoveringSpace::has_element(const std::string& name) const {
    return element_index_.count(name) != 0;
}

std::uint32_t CoveringSpace::object_index(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end())
        throw NameError(fmt::format("unknown object '{}'", name));
    return it->second;
}

std::uint32_t CoveringSpace::element_index(const std::string& name) const {
    auto it = element_index_.find(name);
    if (it == element_index_.end())
        throw NameError(fmt::format("unknown element '{}'", name));
    return it->second;
}

ValidationReport CoveringSpace::validate() const {
    ValidationReport rep;
    std::vector<bool> covered(objects_.size(), false);
    for (const auto& el : elements_) {
        if (el.members.empty())
            rep.violations.push_back(fmt::format("empty element '{}'", el.name));
        for (auto i : el.members)
            covered[i] = true;
    }
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (!covered[i])
            rep.violations.push_back(fmt::format("object '{}' uncovered", objects_[i]));
    return rep;
}

BoolMatrix CoveringSpace::matrix_rep() const {
    auto rep = validate();
    if (!rep.ok()) {
        std::string msg = "invalid covering:";
        for (const auto& v : rep.violations)
            msg += " " + v + ";";
        throw ValidationError(msg);
    }
    BoolMatrix m(objects_.size(), elements_.size());
    for (std::size_t j = 0; j < elements_.size(); ++j)
        for (auto i : elements_[j].members)
            m.set(i, j, true);
    return m;
}

std::vector<std::uint32_t> CoveringSpace::neighborhood(std::uint32_t obj) const {
    if (obj >= objects_.size())
        throw NameError(fmt::format("object index {} out of range", obj));
    std::vector<bool> in(objects_.size(), true);
    bool any = false;
    for (const auto& el : elements_) {
        if (!std::binary_search(el.members.begin(), el.members.end(), obj))
            continue;
        any = true;
        std::vector<bool> mark(objects_.size(), false);
        for (auto i : el.members)
            mark[i] = true;
        for (std::size_t i = 0; i < in.size(); ++i)
            in[i] = in[i] && mark[i];
    }
    std::vector<std::uint32_t> out;
    if (!any)
        return out; // uncovered object has empty neighborhood
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i])
            out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

std::vector<std::uint32_t> CoveringSpace::neighborhood(const std::string& name) const {
    return neighborhood(object_index(name));
}

CoveringSpace CoveringSpace::parse(std::istream& in) {
    CoveringSpace space;
    std::string line;
    std::size_t line_no = 0;
    bool saw_objects = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        auto toks = split_tokens(line);
        if (toks.empty())
            continue;
        if (!saw_objects) {
            if (toks[0] != "objects:")
                throw ParseError(fmt::format(
                    "line {}: expected 'objects:' as the first statement", line_no));
            for (std::size_t i = 1; i < toks.size(); ++i) {
                check_name_token(toks[i], line_no);
                space.add_object(toks[i]);
            }
            saw_objects = true;
            continue;
        }
        if (toks[0] == "objects:")
            throw ParseError(fmt::format("line {}: duplicate 'objects:' line", line_no));
        if (toks[0] != "element" || toks.size() < 2 || toks[1].back() != ':')
            throw ParseError(fmt::format(
                "line {}: expected 'element NAME: members...'", line_no));
        std::string name = toks[1].substr(0, toks[1].size() - 1);
        check_name_token(name, line_no);
        std::vector<std::string> members(toks.begin() + 2, toks.end());
        for (const auto& m : members)
            check_name_token(m, line_no);
        try {
            space.add_element(name, members);
        } catch (const NameError& e) {
            throw ParseError(fmt::format("line {}: {}", line_no, e.what()));
        }
    }
    if (!saw_objects)
        throw ParseError("line 1: missing 'objects:' line");
    return space;
}

CoveringSpace CoveringSpace::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(fmt::format("cannot open '{}'", path));
    return parse(in);
}

QuerySet QuerySet::from_names(const CoveringSpace& space,
                              const std::vector<std::string>& names) {
    QuerySet x;
    x.members.reserve(names.size());
    for (const auto& n : names)
        x.members.push_back(space.object_index(n));
    sort_unique(x.members);
    return x;
}

QuerySet QuerySet::full(const CoveringSpace& space) {
    QuerySet x;
    x.members.resize(space.object_count());
    for (std::size_t i = 0; i < x.members.size(); ++i)
        x.members[i] = static_cast<std::uint32_t>(i);
    return x;
}

bool QuerySet::contains(std::uint32_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

BoolMatrix char_vector(const CoveringSpace& space, const QuerySet& x) {
    BoolMatrix v(space.object_count(), 1);
    for (auto i : x.members) {
        if (i >= space.object_count())
            throw NameError(fmt::format("query index {} outside the universe", i));
        v.set(i, 0, true);
    }
    return v;
}

} // namespace dcas
