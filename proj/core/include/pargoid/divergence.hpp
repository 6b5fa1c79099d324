#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pargoid/rewrite.hpp"
#include "pargoid/term.hpp"

namespace pargoid {

/// The deterministic leftmost-outermost sequence from `start` returns to the
/// term with index `repeatIndex` (index 0 is `start`, index i+1 the result
/// of trace[i]) after its final step.
struct LoCycle {
    Term start;
    std::vector<Step> trace;
    std::size_t repeatIndex;
};

/// `start` reduces along `path` to a term with a registry member at `at`.
/// Unless `at` is the root it must be a right child, and every redex of the
/// end term must lie inside it; then no redex can ever form outside the
/// member, so the end term diverges with it.
struct RegistryChain {
    Term start;
    std::vector<Step> path;
    Term entry;
    std::string provenance;
    Position at{};
};

/// `start` reduces along `path` to a closed term that has its own certificate.
struct ClosedDivergentReduct {
    Term start;
    std::vector<Step> path;
    std::shared_ptr<const Certificate> inner;
};

/// Checkable evidence that a term has no normal form.
struct Certificate {
    std::variant<LoCycle, RegistryChain, ClosedDivergentReduct> body;

    const Term& subject() const;
    std::string_view kind() const;
};

/// Closed terms known to have no normal form, each tagged with provenance.
class DivergenceRegistry {
public:
    struct Entry {
        Term term;
        std::string provenance;
    };

    DivergenceRegistry() = default;

    /// omega omega, omega omega omega, and s omega i omega.
    static DivergenceRegistry seeded();

    /// Throws std::invalid_argument for open terms or an empty justification.
    void add(Term t, std::string justification);

    const Entry* lookup(const Term& t) const;
    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    std::vector<Entry> entries_;
};

/// Sound divergence certification. Returns null when no rule fires; that is
/// not evidence of convergence.
std::shared_ptr<const Certificate> certifyDivergence(const Term& t, const Budget& budget,
                                                      const DivergenceRegistry& registry);

/// Position of a registry member in `t` that every redex of `t` lies inside
/// (the root when `t` itself is a member), if there is one.
std::optional<Position> rigidRegistryOccurrence(const Term& t, const DivergenceRegistry& registry);

/// Registry lookup along the reduction graph only (no normalization run).
std::shared_ptr<const Certificate> registryChain(const Term& t, const Budget& budget,
                                                  const DivergenceRegistry& registry);

/// Replays every path with stepAt and checks the terminal conditions.
bool verifyCertificate(const Certificate& cert, const DivergenceRegistry& registry);

/// Line-oriented text form; step lines are "position TAB rule TAB term".
std::string serialize(const Certificate& cert);

} // namespace pargoid
