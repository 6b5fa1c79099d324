#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pargoid/partiality.hpp"
#include "pargoid/term.hpp"

namespace pargoid {

/// Resource limits shared by every budgeted computation over terms.
struct Budget {
    std::size_t steps = 10'000;
    std::size_t nodes = 20'000;
    std::size_t maxTermSize = 5'000;
};

enum class Side : std::uint8_t { Left, Right };

/// Path from the root to a subterm. Printed as "." for the root, otherwise
/// one letter per edge ("l" or "r").
struct Position {
    std::vector<Side> path;

    bool isRoot() const noexcept { return path.empty(); }
    Position child(Side side) const;
    friend bool operator==(const Position&, const Position&) = default;
};

std::string toString(const Position& p);
Position parsePosition(std::string_view text);

/// Subterm addressed by `p`, or nothing if the path leaves the term.
std::optional<Term> subtermAt(const Term& t, const Position& p);

enum class Rule : std::uint8_t { S, K };

std::string_view toString(Rule r);

struct Redex {
    Position position;
    Rule rule;
};

struct Step {
    Position position;
    Rule rule;
    Term result;
};

/// Rule matching at the root, if any.
std::optional<Rule> rootRedex(const Term& t);
bool hasRedex(const Term& t);

/// All redexes in leftmost-outermost (preorder) order.
std::vector<Redex> redexes(const Term& t);

/// Contracts the redex at `p`. Throws NotARedex.
Term stepAt(const Term& t, const Position& p);

enum class Strategy : std::uint8_t { LeftmostOutermost, RightmostInnermost };

/// One step under `strategy`; nothing if `t` is a normal form.
std::optional<Step> strategyStep(const Term& t, Strategy strategy);

struct Certificate;

struct Defined {
    Term normalForm;
    std::size_t steps;
};

struct Divergent {
    std::shared_ptr<const Certificate> certificate;
};

struct Exhausted {
    std::size_t budget;
    std::string reason;
};

using EvalOutcome = std::variant<Defined, Divergent, Exhausted>;

/// Leftmost-outermost normalization. A deterministic revisit yields a
/// LoCycle certificate; running out of steps or term size yields Exhausted.
EvalOutcome normalize(const Term& t, const Budget& budget = {});
EvalOutcome normalize(const Term& t, std::size_t stepBudget);

/// Normalization under an arbitrary strategy without cycle detection.
EvalOutcome normalizeWith(const Term& t, Strategy strategy, const Budget& budget);

inline bool isDefined(const EvalOutcome& o) { return std::holds_alternative<Defined>(o); }
inline bool isDivergent(const EvalOutcome& o) { return std::holds_alternative<Divergent>(o); }
inline bool isExhausted(const EvalOutcome& o) { return std::holds_alternative<Exhausted>(o); }

/// Breadth-first closure of a term under all one-step reductions.
class ReductionGraph {
public:
    struct Edge {
        std::size_t from;
        std::size_t to;
        Position position;
        Rule rule;
    };

    const std::vector<Term>& nodes() const noexcept { return nodes_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// True when every node was expanded and no successor was dropped.
    bool closed() const noexcept { return closed_; }

    std::optional<std::size_t> find(const Term& t) const;
    bool contains(const Term& t) const { return find(t).has_value(); }
    /// Steps along the BFS tree from the root to node `index`.
    std::vector<Step> pathTo(std::size_t index) const;

private:
    friend ReductionGraph reachable(const Term&, std::size_t, std::size_t,
                                    const std::function<bool(const Term&)>&);

    std::vector<Term> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::optional<std::size_t>> parentEdge_;
    std::unordered_map<Term, std::size_t> index_;
    bool closed_ = false;
};

/// Explores at most `nodeBudget` distinct terms. When `stopAt` accepts a
/// discovered node the search ends early (the graph is then not closed
/// unless nothing remained to explore).
ReductionGraph reachable(const Term& t, std::size_t nodeBudget, std::size_t maxTermSize = Budget{}.maxTermSize,
                         const std::function<bool(const Term&)>& stopAt = {});

Truth3 reducesTo(const Term& t, const Term& u, std::size_t nodeBudget);

struct CommonReductResult {
    Truth3 answer;
    std::optional<Term> witness;
    std::size_t leftNodes;
    std::size_t rightNodes;
    bool leftClosed;
    bool rightClosed;
};

CommonReductResult commonReduct(const Term& t, const Term& u, std::size_t nodeBudget);

} // namespace pargoid
