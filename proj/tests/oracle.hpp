#pragma once

// Reference implementations used to check the library. They share no code
// with it: terms are re-parsed from printed text into a separate tree type.

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pargoid/divergence.hpp>
#include <pargoid/term.hpp>

namespace oracle {

struct Node;
using T = std::shared_ptr<const Node>;

struct Node {
    char kind; // 's', 'k', 'v' (variable or #handle), 'a'
    std::string name;
    T l, r;
};

inline T leaf(char kind, std::string name = {}) { return std::make_shared<const Node>(Node{kind, std::move(name), {}, {}}); }
inline T ap(T l, T r) { return std::make_shared<const Node>(Node{'a', {}, std::move(l), std::move(r)}); }

inline bool same(const T& a, const T& b) {
    if (a == b)
        return true;
    if (a->kind != b->kind)
        return false;
    if (a->kind == 'a')
        return same(a->l, b->l) && same(a->r, b->r);
    return a->name == b->name;
}

class Reader {
public:
    explicit Reader(std::string text) : s_(std::move(text)) {}

    T term() {
        T t = atom();
        while (true) {
            skip();
            if (i_ >= s_.size() || s_[i_] == ')')
                return t;
            t = ap(t, atom());
        }
    }

    bool done() {
        skip();
        return i_ == s_.size();
    }

private:
    void skip() {
        while (i_ < s_.size() && s_[i_] == ' ')
            ++i_;
    }

    T atom() {
        skip();
        if (i_ >= s_.size())
            throw std::runtime_error("oracle: unexpected end");
        if (s_[i_] == '(') {
            ++i_;
            T t = term();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')')
                throw std::runtime_error("oracle: missing )");
            ++i_;
            return t;
        }
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '#'))
            ++i_;
        std::string w = s_.substr(start, i_ - start);
        if (w.empty())
            throw std::runtime_error("oracle: bad character");
        if (w == "s")
            return leaf('s');
        if (w == "k")
            return leaf('k');
        if (w == "i")
            return ap(ap(leaf('s'), leaf('k')), leaf('k'));
        if (w == "omega") {
            T i = ap(ap(leaf('s'), leaf('k')), leaf('k'));
            return ap(ap(leaf('s'), i), i);
        }
        return leaf('v', w);
    }

    std::string s_;
    std::size_t i_ = 0;
};

inline T read(const std::string& text) {
    Reader r(text);
    T t = r.term();
    if (!r.done())
        throw std::runtime_error("oracle: trailing input in " + text);
    return t;
}

inline T from(const pargoid::Term& t) { return read(pargoid::print(t)); }

inline bool closed(const T& t) {
    if (t->kind == 'a')
        return closed(t->l) && closed(t->r);
    return t->kind != 'v' || t->name.starts_with("#");
}

/// 'S', 'K' or 0.
inline char rootRule(const T& t) {
    if (t->kind != 'a' || t->l->kind != 'a')
        return 0;
    if (t->l->l->kind == 'k')
        return 'K';
    if (t->l->l->kind == 'a' && t->l->l->l->kind == 's')
        return 'S';
    return 0;
}

inline T contractRoot(const T& t) {
    if (rootRule(t) == 'K')
        return t->l->r;
    const T& x = t->l->l->r;
    const T& y = t->l->r;
    const T& z = t->r;
    return ap(ap(x, z), ap(y, z));
}

/// Redex positions as strings of 'l'/'r', in preorder.
inline void redexes(const T& t, std::string& at, std::vector<std::string>& out) {
    if (rootRule(t))
        out.push_back(at);
    if (t->kind != 'a')
        return;
    at.push_back('l');
    redexes(t->l, at, out);
    at.back() = 'r';
    redexes(t->r, at, out);
    at.pop_back();
}

inline std::vector<std::string> redexes(const T& t) {
    std::string at;
    std::vector<std::string> out;
    redexes(t, at, out);
    return out;
}

inline std::optional<T> subterm(const T& t, const std::string& pos) {
    T cur = t;
    for (char c : pos) {
        if (cur->kind != 'a')
            return std::nullopt;
        cur = c == 'l' ? cur->l : cur->r;
    }
    return cur;
}

/// Contracts the redex at `pos`; nothing if there is none there.
inline std::optional<T> contract(const T& t, const std::string& pos, std::size_t depth = 0) {
    if (depth == pos.size()) {
        if (!rootRule(t))
            return std::nullopt;
        return contractRoot(t);
    }
    if (t->kind != 'a')
        return std::nullopt;
    if (pos[depth] == 'l') {
        auto l = contract(t->l, pos, depth + 1);
        return l ? std::optional<T>(ap(*l, t->r)) : std::nullopt;
    }
    auto r = contract(t->r, pos, depth + 1);
    return r ? std::optional<T>(ap(t->l, *r)) : std::nullopt;
}

inline std::size_t size(const T& t) { return t->kind == 'a' ? size(t->l) + size(t->r) : 1; }

/// Naive leftmost-outermost normalizer; nothing when the step limit is hit.
inline std::optional<T> normalize(T t, std::size_t limit, std::size_t maxSize = 5000) {
    for (std::size_t n = 0; n <= limit; ++n) {
        auto rs = redexes(t);
        if (rs.empty())
            return t;
        t = *contract(t, rs.front());
        if (size(t) > maxSize)
            return std::nullopt;
    }
    return std::nullopt;
}

inline std::string posString(const pargoid::Position& p) {
    std::string out;
    for (auto side : p.path)
        out.push_back(side == pargoid::Side::Left ? 'l' : 'r');
    return out;
}

inline bool replaySteps(T cur, const std::vector<pargoid::Step>& steps, T& end, bool leftmostOnly) {
    for (const auto& st : steps) {
        std::string pos = posString(st.position);
        auto rs = redexes(cur);
        if (rs.empty() || (leftmostOnly && rs.front() != pos))
            return false;
        auto sub = subterm(cur, pos);
        if (!sub)
            return false;
        char rule = rootRule(*sub);
        if (rule == 0 || rule != (st.rule == pargoid::Rule::S ? 'S' : 'K'))
            return false;
        auto next = contract(cur, pos);
        if (!next || !same(*next, from(st.result)))
            return false;
        cur = *next;
    }
    end = cur;
    return true;
}

/// Independent replay of a divergence certificate. Registry entries are
/// trusted as given; everything else is rechecked on the oracle tree.
inline bool replay(const pargoid::Certificate& cert, const pargoid::DivergenceRegistry& registry) {
    using namespace pargoid;
    if (const auto* c = std::get_if<LoCycle>(&cert.body)) {
        T end;
        if (c->trace.empty() || !replaySteps(from(c->start), c->trace, end, true))
            return false;
        T target = c->repeatIndex == 0 ? from(c->start) : from(c->trace[c->repeatIndex - 1].result);
        return c->repeatIndex < c->trace.size() && same(end, target);
    }
    if (const auto* c = std::get_if<RegistryChain>(&cert.body)) {
        T end;
        if (!replaySteps(from(c->start), c->path, end, false))
            return false;
        std::string at = posString(c->at);
        auto sub = subterm(end, at);
        if (!sub || !same(*sub, from(c->entry)))
            return false;
        bool listed = false;
        for (const auto& e : registry.entries())
            listed = listed || same(from(e.term), *sub);
        if (!listed)
            return false;
        if (at.empty())
            return true;
        if (at.back() != 'r')
            return false;
        for (const auto& r : redexes(end))
            if (!r.starts_with(at))
                return false;
        return true;
    }
    const auto& c = std::get<ClosedDivergentReduct>(cert.body);
    T end;
    if (!c.inner || !replaySteps(from(c.start), c.path, end, false) || !closed(end))
        return false;
    return same(from(c.inner->subject()), end) && replay(*c.inner, registry);
}

/// Cantor pairing by walking the diagonals.
inline std::pair<unsigned, unsigned> unpairByWalk(unsigned n) {
    unsigned idx = 0;
    for (unsigned d = 0;; ++d)
        for (unsigned b = 0; b <= d; ++b, ++idx)
            if (idx == n)
                return {d - b, b};
}

} // namespace oracle
