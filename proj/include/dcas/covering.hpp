#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcas/boolmat.hpp"

namespace dcas {

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

struct CoveringElement {
    std::string name;
    std::vector<std::uint32_t> members; // sorted object indices
};

/// A named universe with a named family of subsets. Object and element
/// order is declaration order and append-only; matrix row/column indices
/// stay stable across incremental updates.
class CoveringSpace {
public:
    CoveringSpace() = default;
    explicit CoveringSpace(std::vector<std::string> objects);

    /// Text format: one `objects:` line first, then `element NAME: ...`
    /// lines; '#' starts a comment.
    static CoveringSpace parse(std::istream& in);
    static CoveringSpace parse_file(const std::string& path);

    void add_object(const std::string& name); // throws NameError on collision
    void add_element(const std::string& name,
                     const std::vector<std::string>& member_names);
    void add_element_by_index(const std::string& name,
                              std::vector<std::uint32_t> members);
    /// Extend an existing element with additional object indices.
    void extend_element(const std::string& name,
                        const std::vector<std::uint32_t>& extra);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t element_count() const { return elements_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<CoveringElement>& elements() const { return elements_; }
    const std::string& object_name(std::uint32_t i) const { return objects_[i]; }

    bool has_object(const std::string& name) const;
    bool has_element(const std::string& name) const;
    std::uint32_t object_index(const std::string& name) const; // throws NameError
    std::uint32_t element_index(const std::string& name) const;

    /// Covering invariants: no empty element, every object covered.
    ValidationReport validate() const;

    /// n x m membership matrix; throws ValidationError if invalid.
    BoolMatrix matrix_rep() const;

    /// Intersection of all elements containing the object.
    std::vector<std::uint32_t> neighborhood(std::uint32_t obj) const;
    std::vector<std::uint32_t> neighborhood(const std::string& name) const;

private:
    std::vector<std::string> objects_;
    std::vector<CoveringElement> elements_;
    std::unordered_map<std::string, std::uint32_t> object_index_;
    std::unordered_map<std::string, std::uint32_t> element_index_;
};

/// A subset of a space's universe, held as sorted object indices.
struct QuerySet {
    std::vector<std::uint32_t> members;

    static QuerySet from_names(const CoveringSpace& space,
                               const std::vector<std::string>& names);
    static QuerySet full(const CoveringSpace& space);

    bool contains(std::uint32_t i) const;
};

/// n x 1 membership column of X.
BoolMatrix char_vector(const CoveringSpace& space, const QuerySet& x);

} // namespace dcas
