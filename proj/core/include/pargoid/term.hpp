#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace pargoid {

enum class TermKind : std::uint8_t { Var, S, K, Elem, App };

/// Immutable applicative term over the constants s and k, variables, and
/// model-element constants. Copies share structure; equality is structural.
class Term {
public:
    static Term var(std::string name);
    static Term s();
    static Term k();
    static Term elem(std::string handle);
    static Term app(Term left, Term right);

    /// Left-nested application: apply(f, {a, b}) is (f a) b.
    template <typename... Rest>
    static Term apply(Term head, Rest... args) {
        ((head = app(std::move(head), std::move(args))), ...);
        return head;
    }

    TermKind kind() const noexcept;
    bool isApp() const noexcept;
    bool isVar() const noexcept;

    /// Variable name or element handle; empty for other kinds.
    const std::string& name() const noexcept;
    const Term& left() const;
    const Term& right() const;

    /// Number of leaves.
    std::size_t size() const noexcept;
    std::size_t hash() const noexcept;
    /// True when no variable occurs.
    bool closed() const noexcept;
    bool hasElem() const noexcept;
    /// True when some subterm is an s- or k-redex; cached per node.
    bool containsRedex() const noexcept;

    bool sameNode(const Term& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b) noexcept;
    friend bool operator!=(const Term& a, const Term& b) noexcept { return !(a == b); }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    TermKind kind;
    bool hasVar = false;
    bool hasElem = false;
    bool hasRedex = false;
    std::size_t size = 1;
    std::size_t hash = 0;
    std::string name;
    Term left{nullptr};
    Term right{nullptr};
};

inline TermKind Term::kind() const noexcept { return node_->kind; }
inline bool Term::isApp() const noexcept { return node_->kind == TermKind::App; }
inline bool Term::isVar() const noexcept { return node_->kind == TermKind::Var; }
inline const std::string& Term::name() const noexcept { return node_->name; }
inline std::size_t Term::size() const noexcept { return node_->size; }
inline std::size_t Term::hash() const noexcept { return node_->hash; }
inline bool Term::closed() const noexcept { return !node_->hasVar; }
inline bool Term::hasElem() const noexcept { return node_->hasElem; }
inline bool Term::containsRedex() const noexcept { return node_->hasRedex; }

/// Grammar: term := atom+ ; atom := s | k | i | omega | IDENT | #HANDLE | ( term ).
/// `i` expands to s k k and `omega` to s i i.
Term parse(std::string_view text);
/// Minimal parentheses, application to the left implicit; never re-sugars.
std::string print(const Term& t);

bool isIdentifier(std::string_view name);

Term substitute(const Term& t, const std::string& x, const Term& u);
std::set<std::string> vars(const Term& t);
bool occurs(const Term& t, const std::string& x);
std::size_t countOccurrences(const Term& t, const std::string& x);

/// First name of the form x0, x1, ... not in `avoid`.
std::string freshVar(const std::set<std::string>& avoid);

/// Ordered variable set with its own fresh-name counter.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::set<std::string> names) : names_(std::move(names)) {}

    bool contains(const std::string& name) const { return names_.count(name) != 0; }
    void insert(std::string name) { names_.insert(std::move(name)); }
    const std::set<std::string>& names() const noexcept { return names_; }

    /// Returns a name outside the set and adds it.
    std::string fresh();

private:
    std::set<std::string> names_;
    unsigned next_ = 0;
};

namespace terms {
Term i();
Term omega();
} // namespace terms

} // namespace pargoid

template <>
struct std::hash<pargoid::Term> {
    std::size_t operator()(const pargoid::Term& t) const noexcept { return t.hash(); }
};
