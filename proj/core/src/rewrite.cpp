#include "pargoid/rewrite.hpp"

#include <deque>
#include <unordered_set>

#include "pargoid/divergence.hpp"
#include "pargoid/errors.hpp"

namespace pargoid {

Position Position::child(Side side) const {
    Position p = *this;
    p.path.push_back(side);
    return p;
}

std::string toString(const Position& p) {
    if (p.isRoot())
        return ".";
    std::string out;
    out.reserve(p.path.size());
    for (Side s : p.path)
        out += s == Side::Left ? 'l' : 'r';
    return out;
}

Position parsePosition(std::string_view text) {
    Position p;
    if (text == ".")
        return p;
    if (text.empty())
        throw ParseError("empty position");
    for (char c : text) {
        if (c == 'l')
            p.path.push_back(Side::Left);
        else if (c == 'r')
            p.path.push_back(Side::Right);
        else
            throw ParseError("bad position '" + std::string(text) + "'");
    }
    return p;
}

std::optional<Term> subtermAt(const Term& t, const Position& p) {
    Term cur = t;
    for (Side s : p.path) {
        if (!cur.isApp())
            return std::nullopt;
        cur = s == Side::Left ? cur.left() : cur.right();
    }
    return cur;
}

std::string_view toString(Rule r) { return r == Rule::S ? "S" : "K"; }

std::optional<Rule> rootRedex(const Term& t) {
    // k x y  = App(App(K, x), y)
    // s x y z = App(App(App(S, x), y), z)
    if (!t.isApp())
        return std::nullopt;
    const Term& f = t.left();
    if (!f.isApp())
        return std::nullopt;
    if (f.left().kind() == TermKind::K)
        return Rule::K;
    const Term& g = f.left();
    if (g.isApp() && g.left().kind() == TermKind::S)
        return Rule::S;
    return std::nullopt;
}

namespace {

Term contract(const Term& t, Rule rule) {
    if (rule == Rule::K)
        return t.left().right();
    const Term& x = t.left().left().right();
    const Term& y = t.left().right();
    const Term& z = t.right();
    return Term::app(Term::app(x, z), Term::app(y, z));
}

void collectRedexes(const Term& t, Position& here, std::vector<Redex>& out) {
    if (!t.containsRedex())
        return;
    if (auto r = rootRedex(t))
        out.push_back({here, *r});
    here.path.push_back(Side::Left);
    collectRedexes(t.left(), here, out);
    here.path.back() = Side::Right;
    collectRedexes(t.right(), here, out);
    here.path.pop_back();
}

struct Successor {
    Term term;
    Position position;
    Rule rule;
};

// One-step reducts in preorder of their redex positions, rebuilt on the way up.
void collectSuccessors(const Term& t, Position& here, std::vector<Successor>& out) {
    if (!t.containsRedex())
        return;
    if (auto r = rootRedex(t))
        out.push_back({contract(t, *r), here, *r});
    const std::size_t first = out.size();
    here.path.push_back(Side::Left);
    collectSuccessors(t.left(), here, out);
    const std::size_t mid = out.size();
    here.path.back() = Side::Right;
    collectSuccessors(t.right(), here, out);
    here.path.pop_back();
    for (std::size_t i = first; i < out.size(); ++i)
        out[i].term = i < mid ? Term::app(std::move(out[i].term), t.right()) : Term::app(t.left(), std::move(out[i].term));
}

Term replaceAt(const Term& t, const Position& p, std::size_t depth, const Term& replacement) {
    if (depth == p.path.size())
        return replacement;
    if (p.path[depth] == Side::Left)
        return Term::app(replaceAt(t.left(), p, depth + 1, replacement), t.right());
    return Term::app(t.left(), replaceAt(t.right(), p, depth + 1, replacement));
}

// Leftmost-outermost: first redex in preorder.
std::optional<Term> stepLeftmostOutermost(const Term& t, Position& pos, Rule& rule) {
    if (!t.containsRedex())
        return std::nullopt;
    if (auto r = rootRedex(t)) {
        rule = *r;
        return contract(t, *r);
    }
    pos.path.push_back(Side::Left);
    if (auto l = stepLeftmostOutermost(t.left(), pos, rule))
        return Term::app(std::move(*l), t.right());
    pos.path.back() = Side::Right;
    if (auto r = stepLeftmostOutermost(t.right(), pos, rule))
        return Term::app(t.left(), std::move(*r));
    pos.path.pop_back();
    return std::nullopt;
}

// Rightmost-innermost: search the right subtree, then the left, then the root.
std::optional<Term> stepRightmostInnermost(const Term& t, Position& pos, Rule& rule) {
    if (!t.containsRedex())
        return std::nullopt;
    pos.path.push_back(Side::Right);
    if (auto r = stepRightmostInnermost(t.right(), pos, rule))
        return Term::app(t.left(), std::move(*r));
    pos.path.back() = Side::Left;
    if (auto l = stepRightmostInnermost(t.left(), pos, rule))
        return Term::app(std::move(*l), t.right());
    pos.path.pop_back();
    if (auto r = rootRedex(t)) {
        rule = *r;
        return contract(t, *r);
    }
    return std::nullopt;
}

} // namespace

bool hasRedex(const Term& t) { return t.containsRedex(); }

std::vector<Redex> redexes(const Term& t) {
    std::vector<Redex> out;
    Position here;
    collectRedexes(t, here, out);
    return out;
}

Term stepAt(const Term& t, const Position& p) {
    auto sub = subtermAt(t, p);
    if (!sub)
        throw NotARedex("position " + toString(p) + " is outside the term");
    auto rule = rootRedex(*sub);
    if (!rule)
        throw NotARedex("no redex at position " + toString(p));
    return replaceAt(t, p, 0, contract(*sub, *rule));
}

std::optional<Step> strategyStep(const Term& t, Strategy strategy) {
    Position pos;
    Rule rule = Rule::K;
    auto next = strategy == Strategy::LeftmostOutermost ? stepLeftmostOutermost(t, pos, rule)
                                                        : stepRightmostInnermost(t, pos, rule);
    if (!next)
        return std::nullopt;
    return Step{std::move(pos), rule, std::move(*next)};
}

EvalOutcome normalize(const Term& t, std::size_t stepBudget) {
    Budget b;
    b.steps = stepBudget;
    return normalize(t, b);
}

EvalOutcome normalize(const Term& t, const Budget& budget) {
    // Revisits are detected by term identity; the first occurrence index of
    // every visited term is kept for the certificate.
    std::unordered_map<Term, std::size_t> seen;
    std::vector<Step> trace;
    Term cur = t;
    seen.emplace(cur, 0);
    for (std::size_t n = 0;; ++n) {
        auto step = strategyStep(cur, Strategy::LeftmostOutermost);
        if (!step)
            return Defined{cur, n};
        if (n == budget.steps)
            return Exhausted{budget.steps, "step budget"};
        cur = step->result;
        trace.push_back(std::move(*step));
        if (cur.size() > budget.maxTermSize)
            return Exhausted{budget.steps, "term size limit"};
        auto [it, inserted] = seen.emplace(cur, n + 1);
        if (!inserted) {
            return Divergent{std::make_shared<Certificate>(Certificate{LoCycle{t, std::move(trace), it->second}})};
        }
    }
}

EvalOutcome normalizeWith(const Term& t, Strategy strategy, const Budget& budget) {
    Term cur = t;
    for (std::size_t n = 0;; ++n) {
        auto step = strategyStep(cur, strategy);
        if (!step)
            return Defined{cur, n};
        if (n == budget.steps)
            return Exhausted{budget.steps, "step budget"};
        cur = std::move(step->result);
        if (cur.size() > budget.maxTermSize)
            return Exhausted{budget.steps, "term size limit"};
    }
}

// ---------------------------------------------------------------------------
// Reduction graphs

std::optional<std::size_t> ReductionGraph::find(const Term& t) const {
    auto it = index_.find(t);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Step> ReductionGraph::pathTo(std::size_t index) const {
    std::vector<Step> path;
    while (auto e = parentEdge_.at(index)) {
        const Edge& edge = edges_[*e];
        path.push_back({edge.position, edge.rule, nodes_[edge.to]});
        index = edge.from;
    }
    return {path.rbegin(), path.rend()};
}

ReductionGraph reachable(const Term& t, std::size_t nodeBudget, std::size_t maxTermSize,
                         const std::function<bool(const Term&)>& stopAt) {
    ReductionGraph g;
    g.nodes_.push_back(t);
    g.parentEdge_.push_back(std::nullopt);
    g.index_.emplace(t, 0);
    bool dropped = false;
    if (stopAt && stopAt(t)) {
        g.closed_ = !hasRedex(t);
        return g;
    }
    std::size_t frontier = 0;
    for (; frontier < g.nodes_.size(); ++frontier) {
        Term cur = g.nodes_[frontier];
        std::vector<Successor> succ;
        Position here;
        collectSuccessors(cur, here, succ);
        for (auto& r : succ) {
            Term next = std::move(r.term);
            if (next.size() > maxTermSize) {
                dropped = true;
                continue;
            }
            std::size_t target;
            bool discovered = false;
            auto it = g.index_.find(next);
            if (it != g.index_.end()) {
                target = it->second;
            } else {
                discovered = true;
                if (g.nodes_.size() >= nodeBudget) {
                    dropped = true;
                    continue;
                }
                target = g.nodes_.size();
                g.nodes_.push_back(next);
                g.parentEdge_.push_back(g.edges_.size());
                g.index_.emplace(next, target);
            }
            g.edges_.push_back({frontier, target, r.position, r.rule});
            if (discovered && stopAt && stopAt(next)) {
                g.closed_ = false;
                return g;
            }
        }
    }
    g.closed_ = !dropped;
    return g;
}

Truth3 reducesTo(const Term& t, const Term& u, std::size_t nodeBudget) {
    auto g = reachable(t, nodeBudget, Budget{}.maxTermSize, [&](const Term& n) { return n == u; });
    if (g.contains(u))
        return Truth3::True;
    return g.closed() ? Truth3::False : Truth3::Unknown;
}

CommonReductResult commonReduct(const Term& t, const Term& u, std::size_t nodeBudget) {
    auto left = reachable(t, nodeBudget);
    auto right = reachable(u, nodeBudget);
    CommonReductResult res{Truth3::Unknown, std::nullopt, left.nodes().size(), right.nodes().size(),
                           left.closed(), right.closed()};
    for (const Term& n : left.nodes()) {
        if (right.contains(n)) {
            res.answer = Truth3::True;
            res.witness = n;
            return res;
        }
    }
    if (left.closed() && right.closed())
        res.answer = Truth3::False;
    return res;
}

} // namespace pargoid
