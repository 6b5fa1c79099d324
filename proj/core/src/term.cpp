#include "pargoid/term.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "pargoid/errors.hpp"

namespace pargoid {

namespace {

constexpr std::size_t kSeedS = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kSeedK = 0xc2b2ae3d27d4eb4fULL;

std::size_t mix(std::size_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
}

bool isReserved(std::string_view w) {
    return w == "s" || w == "k" || w == "i" || w == "omega";
}

} // namespace

bool isIdentifier(std::string_view name) {
    if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z'))
        return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return !isReserved(name);
}

namespace {
bool isHandle(std::string_view name) {
    if (name.empty())
        return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}
} // namespace

const Term& Term::left() const {
    if (node_->kind != TermKind::App)
        throw std::logic_error("left() of a non-application");
    return node_->left;
}

const Term& Term::right() const {
    if (node_->kind != TermKind::App)
        throw std::logic_error("right() of a non-application");
    return node_->right;
}

Term Term::var(std::string name) {
    if (!isIdentifier(name))
        throw std::invalid_argument("not a variable identifier: " + name);
    auto node = std::make_shared<Node>();
    node->kind = TermKind::Var;
    node->hasVar = true;
    node->hash = mix(std::hash<std::string>{}(name) ^ 0x51ULL);
    node->name = std::move(name);
    return Term(std::move(node));
}

Term Term::s() {
    static const Term shared = [] {
        auto node = std::make_shared<Node>();
        node->kind = TermKind::S;
        node->hash = kSeedS;
        return Term(std::move(node));
    }();
    return shared;
}

Term Term::k() {
    static const Term shared = [] {
        auto node = std::make_shared<Node>();
        node->kind = TermKind::K;
        node->hash = kSeedK;
        return Term(std::move(node));
    }();
    return shared;
}

Term Term::elem(std::string handle) {
    if (!isHandle(handle))
        throw std::invalid_argument("not an element handle: " + handle);
    auto node = std::make_shared<Node>();
    node->kind = TermKind::Elem;
    node->hasElem = true;
    node->hash = mix(std::hash<std::string>{}(handle) ^ 0xe1ULL);
    node->name = std::move(handle);
    return Term(std::move(node));
}

Term Term::app(Term left, Term right) {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::App;
    node->hasVar = left.node_->hasVar || right.node_->hasVar;
    node->hasElem = left.node_->hasElem || right.node_->hasElem;
    node->size = left.size() + right.size();
    // k x y, or s x y z
    const bool rootRedex =
        left.isApp() && (left.left().kind() == TermKind::K ||
                         (left.left().isApp() && left.left().left().kind() == TermKind::S));
    node->hasRedex = rootRedex || left.node_->hasRedex || right.node_->hasRedex;
    node->hash = mix(left.hash() * 31 + mix(right.hash() + 0x7f4a7c15ULL));
    node->left = std::move(left);
    node->right = std::move(right);
    return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) noexcept {
    const Term* x = &a;
    const Term* y = &b;
    // Iterate down the left spine, recurse on right children.
    while (true) {
        if (x->node_ == y->node_)
            return true;
        const auto& nx = *x->node_;
        const auto& ny = *y->node_;
        if (nx.hash != ny.hash || nx.kind != ny.kind || nx.size != ny.size)
            return false;
        switch (nx.kind) {
        case TermKind::S:
        case TermKind::K:
            return true;
        case TermKind::Var:
        case TermKind::Elem:
            return nx.name == ny.name;
        case TermKind::App:
            if (!(nx.right == ny.right))
                return false;
            x = &nx.left;
            y = &ny.left;
            break;
        }
    }
}

namespace terms {

Term i() {
    static const Term t = Term::apply(Term::s(), Term::k(), Term::k());
    return t;
}

Term omega() {
    static const Term t = Term::apply(Term::s(), i(), i());
    return t;
}

} // namespace terms

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Term parseAll() {
        Term t = parseApplication();
        skipSpace();
        if (pos_ != text_.size()) {
            if (text_[pos_] == ')')
                throw SyntaxError("unbalanced ')'", pos_);
            throw SyntaxError("unexpected character", pos_);
        }
        return t;
    }

private:
    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool atAtomStart() {
        skipSpace();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '(' || c == '#' || (c >= 'a' && c <= 'z');
    }

    Term parseApplication() {
        if (!atAtomStart()) {
            if (pos_ >= text_.size())
                throw SyntaxError("expected a term", pos_);
            throw SyntaxError("unexpected character", pos_);
        }
        Term head = parseAtom();
        while (atAtomStart())
            head = Term::app(std::move(head), parseAtom());
        return head;
    }

    std::string_view word() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                break;
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Term parseAtom() {
        std::size_t start = pos_;
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Term inner = parseApplication();
            skipSpace();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '#') {
            ++pos_;
            auto handle = word();
            if (handle.empty())
                throw SyntaxError("expected element handle after '#'", start);
            return Term::elem(std::string(handle));
        }
        auto w = word();
        if (w == "s")
            return Term::s();
        if (w == "k")
            return Term::k();
        if (w == "i")
            return terms::i();
        if (w == "omega")
            return terms::omega();
        if (!isIdentifier(w))
            throw SyntaxError("malformed identifier '" + std::string(w) + "'", start);
        return Term::var(std::string(w));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void printInto(const Term& t, std::string& out) {
    switch (t.kind()) {
    case TermKind::S:
        out += 's';
        return;
    case TermKind::K:
        out += 'k';
        return;
    case TermKind::Var:
        out += t.name();
        return;
    case TermKind::Elem:
        out += '#';
        out += t.name();
        return;
    case TermKind::App:
        printInto(t.left(), out);
        out += ' ';
        if (t.right().isApp()) {
            out += '(';
            printInto(t.right(), out);
            out += ')';
        } else {
            printInto(t.right(), out);
        }
        return;
    }
}

} // namespace

Term parse(std::string_view text) { return Parser(text).parseAll(); }

std::string print(const Term& t) {
    std::string out;
    out.reserve(t.size() * 3);
    printInto(t, out);
    return out;
}

// ---------------------------------------------------------------------------
// Variables and substitution

Term substitute(const Term& t, const std::string& x, const Term& u) {
    if (t.closed())
        return t;
    switch (t.kind()) {
    case TermKind::Var:
        return t.name() == x ? u : t;
    case TermKind::App: {
        Term l = substitute(t.left(), x, u);
        Term r = substitute(t.right(), x, u);
        if (l.sameNode(t.left()) && r.sameNode(t.right()))
            return t;
        return Term::app(std::move(l), std::move(r));
    }
    default:
        return t;
    }
}

namespace {
void collectVars(const Term& t, std::set<std::string>& out) {
    if (t.closed())
        return;
    if (t.isVar()) {
        out.insert(t.name());
    } else if (t.isApp()) {
        collectVars(t.left(), out);
        collectVars(t.right(), out);
    }
}
} // namespace

std::set<std::string> vars(const Term& t) {
    std::set<std::string> out;
    collectVars(t, out);
    return out;
}

bool occurs(const Term& t, const std::string& x) { return countOccurrences(t, x) != 0; }

std::size_t countOccurrences(const Term& t, const std::string& x) {
    if (t.closed())
        return 0;
    if (t.isVar())
        return t.name() == x ? 1 : 0;
    if (t.isApp())
        return countOccurrences(t.left(), x) + countOccurrences(t.right(), x);
    return 0;
}

std::string freshVar(const std::set<std::string>& avoid) {
    for (unsigned n = 0;; ++n) {
        std::string candidate = "x" + std::to_string(n);
        if (avoid.count(candidate) == 0)
            return candidate;
    }
}

std::string VarSet::fresh() {
    while (true) {
        std::string candidate = "x" + std::to_string(next_++);
        if (names_.insert(candidate).second)
            return candidate;
    }
}

} // namespace pargoid
