#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mlib/util.hpp"

namespace mlib {

// Stable element identity. Unique within a snapshot; kept across snapshots
// of the same model so rename/retype stay distinguishable from delete+add.
struct ElementId {
    std::string value;

    auto operator<=>(const ElementId&) const = default;
    bool empty() const { return value.empty(); }
};

struct Parameter {
    std::string name;
    std::string type;

    auto operator<=>(const Parameter&) const = default;
};

struct AttributeDecl {
    ElementId id;
    std::string name;
    std::string type;

    auto operator<=>(const AttributeDecl&) const = default;
};

struct MethodDecl {
    ElementId id;
    std::string name;
    std::vector<Parameter> params;
    std::string return_type = "Void";

    auto operator<=>(const MethodDecl&) const = default;
};

struct ClassDecl {
    ElementId id;
    std::string name;
    std::vector<AttributeDecl> attributes;
    std::vector<MethodDecl> methods;

    auto operator<=>(const ClassDecl&) const = default;
};

// One immutable model version. Ordering of classes and members is
// significant and preserved by every operation.
struct ModelSnapshot {
    std::string model_name;
    std::string description;
    std::vector<ClassDecl> classes;

    auto operator<=>(const ModelSnapshot&) const = default;

    const ClassDecl* find_class(const ElementId& id) const {
        for (const auto& c : classes)
            if (c.id == id)
                return &c;
        return nullptr;
    }

    const ClassDecl* find_class_by_name(std::string_view name) const {
        for (const auto& c : classes)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

inline constexpr std::array<std::string_view, 5> kPrimitiveTypes = {
    "String", "Int", "Float", "Bool", "Void"};

inline bool is_primitive_type(std::string_view t) {
    return std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), t) !=
           kPrimitiveTypes.end();
}

// A type reference resolves if it is a primitive or names a class in the
// same snapshot.
inline bool type_resolves(const ModelSnapshot& s, std::string_view t) {
    return is_primitive_type(t) || s.find_class_by_name(t) != nullptr;
}

// size = |classes| + sum |attributes| + sum |methods|; parameters do not count.
inline std::size_t model_size(const ModelSnapshot& s) {
    std::size_t n = s.classes.size();
    for (const auto& c : s.classes)
        n += c.attributes.size() + c.methods.size();
    return n;
}

struct ConformityViolation {
    std::string rule;
    std::string path;
    std::string message;

    auto operator<=>(const ConformityViolation&) const = default;
};

struct ConformityReport {
    bool conforms = true;
    std::vector<ConformityViolation> violations;
};

namespace detail {

inline void add_violation(ConformityReport& r, std::string rule, std::string path,
                          std::string message) {
    r.conforms = false;
    r.violations.push_back({std::move(rule), std::move(path), std::move(message)});
}

} // namespace detail

// Meta-model conformity. Rules:
//   unique-name   duplicate sibling names (classes, attrs, methods, params)
//   unique-id     an ElementId appears more than once in the snapshot
//   typed-element empty type reference on an attribute, parameter, or return
// Violations can only enter via corrupted storage; parse_model rejects them.
inline ConformityReport check_conformity(const ModelSnapshot& s) {
    ConformityReport report;
    std::set<std::string> ids;
    std::set<std::string> class_names;

    auto check_id = [&](const ElementId& id, const std::string& path) {
        if (!ids.insert(id.value).second)
            detail::add_violation(report, "unique-id", path,
                                  "element id '" + id.value + "' is not unique");
    };

    for (const auto& c : s.classes) {
        std::string cpath = s.model_name + "." + c.name;
        if (!class_names.insert(c.name).second)
            detail::add_violation(report, "unique-name", cpath,
                                  "duplicate class name '" + c.name + "'");
        check_id(c.id, cpath);

        std::set<std::string> attr_names;
        for (const auto& a : c.attributes) {
            std::string apath = cpath + "." + a.name;
            if (!attr_names.insert(a.name).second)
                detail::add_violation(report, "unique-name", apath,
                                      "duplicate attribute name '" + a.name + "'");
            check_id(a.id, apath);
            if (a.type.empty())
                detail::add_violation(report, "typed-element", apath,
                                      "attribute has an empty type reference");
        }

        std::set<std::string> method_names;
        for (const auto& m : c.methods) {
            std::string mpath = cpath + "." + m.name;
            if (!method_names.insert(m.name).second)
                detail::add_violation(report, "unique-name", mpath,
                                      "duplicate method name '" + m.name + "'");
            check_id(m.id, mpath);
            if (m.return_type.empty())
                detail::add_violation(report, "typed-element", mpath,
                                      "method has an empty return type");
            std::set<std::string> param_names;
            for (const auto& p : m.params) {
                std::string ppath = mpath + "." + p.name;
                if (!param_names.insert(p.name).second)
                    detail::add_violation(report, "unique-name", ppath,
                                          "duplicate parameter name '" + p.name + "'");
                if (p.type.empty())
                    detail::add_violation(report, "typed-element", ppath,
                                          "parameter has an empty type reference");
            }
        }
    }
    return report;
}

// Where an element lives, for lookups shared by edit ops and quality rules.
enum class ElementKind { Class, Attribute, Method };

struct ElementRef {
    ElementKind kind;
    std::size_t class_index;
    std::size_t member_index = 0; // unused for classes
};

inline std::optional<ElementRef> find_element(const ModelSnapshot& s,
                                              const ElementId& id) {
    for (std::size_t ci = 0; ci < s.classes.size(); ++ci) {
        const auto& c = s.classes[ci];
        if (c.id == id)
            return ElementRef{ElementKind::Class, ci};
        for (std::size_t ai = 0; ai < c.attributes.size(); ++ai)
            if (c.attributes[ai].id == id)
                return ElementRef{ElementKind::Attribute, ci, ai};
        for (std::size_t mi = 0; mi < c.methods.size(); ++mi)
            if (c.methods[mi].id == id)
                return ElementRef{ElementKind::Method, ci, mi};
    }
    return std::nullopt;
}

inline bool id_exists(const ModelSnapshot& s, const ElementId& id) {
    return find_element(s, id).has_value();
}

} // namespace mlib
