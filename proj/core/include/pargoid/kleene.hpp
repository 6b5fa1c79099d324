#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "pargoid/model.hpp"

namespace pargoid::kleene {

using Nat = boost::multiprecision::cpp_int;

/// Cantor pairing (a + b)(a + b + 1)/2 + b and its inverse.
Nat pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> unpair(const Nat& z);

// ---------------------------------------------------------------------------
// Programs
//
// Expressions evaluated against a single natural input:
//   Input            the input
//   Const c          the natural c
//   Apply e1 e2      run the program coded by e1 on the value of e2
//   Pair e1 e2       pair(e1, e2)
//   Wrap_j e         1 + pair(j, e)
//
// Codes: 0 is Input; otherwise (a, b) = unpair(n - 1) and
//   a = 0: Const b,  a = 1: Apply (unpair b),  a = 2: Pair (unpair b),
//   a = 3 + j: Wrap_j (decode b).
// Every node's code is then Wrap_a(payload), which lets programs build codes.

enum class Op { Input, Const, Apply, Pair, Wrap };

struct Program;
using ProgPtr = std::shared_ptr<const Program>;

struct Program {
    Op op;
    Nat value; ///< Const payload, or j for Wrap_j
    ProgPtr a;
    ProgPtr b;
};

ProgPtr input();
ProgPtr constant(Nat c);
ProgPtr apply(ProgPtr f, ProgPtr x);
ProgPtr pairOf(ProgPtr l, ProgPtr r);
ProgPtr wrap(Nat j, ProgPtr e);

bool equal(const Program& p, const Program& q);
std::string show(const Program& p);

Nat encode(const Program& p);
ProgPtr decode(const Nat& n);

struct RunBudget {
    std::uint64_t steps = 100'000;
    /// Intermediate values above this many bits make the run indeterminate.
    std::size_t maxBits = 1u << 18;
};

/// Evaluates the program coded by `code` on `x`. Each node visited and each
/// universal call costs one step. Running out is Indeterminate, never Absent.
PartialValue<Nat> run(const Nat& code, const Nat& x, const RunBudget& budget = {});

/// f: code of Const x.
Nat constProg(const Nat& x);
/// g: code of z -> run(run(x, z), run(y, z)).
Nat gCompose(const Nat& x, const Nat& y);

// ---------------------------------------------------------------------------
// Specialization

/// A program tree with holes. Splice(e) stands for Const(v) where v is the
/// value of e at run time of the builder.
struct Template;
using TemplatePtr = std::shared_ptr<const Template>;

struct Template {
    enum class Kind { Literal, Splice, Apply, Pair, Wrap };
    Kind kind;
    ProgPtr program; ///< Literal body or Splice expression
    Nat j;           ///< Wrap index
    TemplatePtr a;
    TemplatePtr b;
};

TemplatePtr literal(ProgPtr p);
TemplatePtr splice(ProgPtr e);
TemplatePtr tApply(TemplatePtr f, TemplatePtr x);
TemplatePtr tPair(TemplatePtr l, TemplatePtr r);
TemplatePtr tWrap(Nat j, TemplatePtr e);

/// A program that on input v returns the code of the template with its
/// splices filled in.
ProgPtr quoteBuilder(const Template& t);

/// y -> g(x, y) as a template in y.
TemplatePtr gTemplate(const Nat& x);

/// h(x): code of y -> twoArg(x) filled at y.
Nat specialize(const std::function<TemplatePtr(const Nat&)>& twoArg, const Nat& x);
/// h specialised to g.
Nat hCompose(const Nat& x);

/// Program computing constProg.
ProgPtr kProgram();
/// Program computing hCompose.
ProgPtr sProgram();

// ---------------------------------------------------------------------------
// Model

/// Naturals with x * y the result of running x on y. Elements are carried as
/// decimal element handles.
class KleeneModel final : public PargoidModel {
public:
    explicit KleeneModel(RunBudget budget = {});

    std::string name() const override { return "kleene"; }
    std::vector<Element> probeElements() const override;
    Element sample(std::mt19937_64& rng) const override;

    Truth3 contains(const Element& e) const override;
    /// Uses the model's own step budget; the term budget is ignored.
    PartialValue<Element> apply(const Element& a, const Element& b, const Budget& budget) const override;

    std::optional<Element> sElem() const override { return sElem_; }
    std::optional<Element> kElem() const override { return kElem_; }

    std::string show(const Element& e) const override;

    const RunBudget& budget() const noexcept { return budget_; }

private:
    RunBudget budget_;
    Element sElem_;
    Element kElem_;
};

Element toElement(const Nat& n);
/// Throws UnknownElementName for handles that are not decimal naturals.
Nat fromElement(const Element& e);

std::shared_ptr<const KleeneModel> kleenePargoid(RunBudget budget = {});

} // namespace pargoid::kleene
