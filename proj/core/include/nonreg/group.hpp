#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nonreg::group {

using Int = boost::multiprecision::cpp_int;

struct Zk {
    std::size_t k;
    bool operator==(const Zk&) const = default;
};
struct ZMod {
    std::int64_t m;
    bool operator==(const ZMod&) const = default;
};
struct Free {
    std::size_t rank;
    bool operator==(const Free&) const = default;
};
using Factor = std::variant<Zk, ZMod, Free>;

/// A direct product of factors; a single factor is the group itself.
struct GroupSpec {
    std::vector<Factor> factors;

    bool is_product() const { return factors.size() > 1; }
    bool operator==(const GroupSpec&) const = default;
};

GroupSpec zk(std::size_t k);
GroupSpec zmod(std::int64_t m);
GroupSpec free_group(std::size_t rank);
/// Flattens nested products. Throws PreconditionError on an empty list.
GroupSpec product(const std::vector<GroupSpec>& parts);

/// "Z^k", "Zmod m", "F r", joined by " x ".
GroupSpec parse_spec(std::string_view text);
std::string render_spec(const GroupSpec& s);

/// Free-group words: +i is g_i, -i is its inverse.
using FreeWord = std::vector<int>;
using Component = std::variant<std::vector<Int>, std::int64_t, FreeWord>;

class Element {
public:
    Element() = default;
    Element(std::shared_ptr<const GroupSpec> spec, std::vector<Component> parts);

    const GroupSpec& spec() const { return *spec_; }
    const std::shared_ptr<const GroupSpec>& spec_ptr() const { return spec_; }
    const std::vector<Component>& parts() const { return parts_; }

    /// Sum of absolute entries / word lengths; residues count 0.
    std::size_t norm() const;

    bool operator==(const Element& o) const;
    std::size_t hash() const;

private:
    std::shared_ptr<const GroupSpec> spec_;
    std::vector<Component> parts_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

Element identity(const std::shared_ptr<const GroupSpec>& s);
Element identity(const GroupSpec& s);

/// Throws SpecMismatch when the operands belong to different groups.
Element mul(const Element& a, const Element& b);
Element inv(const Element& a);
bool is_identity(const Element& a);

/// Literal syntax: "[i1,...,ik]", a residue, a generator word such as
/// "g1 g2 G1" ("1" for the empty word), "( e1 ; e2 )" for products.
Element parse_element(const std::shared_ptr<const GroupSpec>& s, std::string_view text);
Element parse_element(const GroupSpec& s, std::string_view text);
std::string render_element(const Element& a);

} // namespace nonreg::group
