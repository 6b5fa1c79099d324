#include "pargoid/kleene.hpp"

#include <sstream>
#include <vector>

#include "pargoid/errors.hpp"

namespace pargoid::kleene {

Nat pair(const Nat& a, const Nat& b) {
    Nat s = a + b;
    return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> unpair(const Nat& z) {
    Nat w = (boost::multiprecision::sqrt(Nat(8 * z + 1)) - 1) / 2;
    Nat t = w * (w + 1) / 2;
    Nat b = z - t;
    return {w - b, b};
}

ProgPtr input() {
    static const ProgPtr p = std::make_shared<Program>(Program{Op::Input, 0, nullptr, nullptr});
    return p;
}

ProgPtr constant(Nat c) { return std::make_shared<Program>(Program{Op::Const, std::move(c), nullptr, nullptr}); }
ProgPtr apply(ProgPtr f, ProgPtr x) {
    return std::make_shared<Program>(Program{Op::Apply, 0, std::move(f), std::move(x)});
}
ProgPtr pairOf(ProgPtr l, ProgPtr r) {
    return std::make_shared<Program>(Program{Op::Pair, 0, std::move(l), std::move(r)});
}
ProgPtr wrap(Nat j, ProgPtr e) { return std::make_shared<Program>(Program{Op::Wrap, std::move(j), std::move(e), nullptr}); }

bool equal(const Program& p, const Program& q) {
    if (&p == &q)
        return true;
    if (p.op != q.op || p.value != q.value)
        return false;
    if (bool(p.a) != bool(q.a) || bool(p.b) != bool(q.b))
        return false;
    return (!p.a || equal(*p.a, *q.a)) && (!p.b || equal(*p.b, *q.b));
}

std::string show(const Program& p) {
    switch (p.op) {
    case Op::Input:
        return "Input";
    case Op::Const:
        return "Const(" + p.value.str() + ")";
    case Op::Apply:
        return "Apply(" + show(*p.a) + ", " + show(*p.b) + ")";
    case Op::Pair:
        return "Pair(" + show(*p.a) + ", " + show(*p.b) + ")";
    case Op::Wrap:
        break;
    }
    return "Wrap" + p.value.str() + "(" + show(*p.a) + ")";
}

Nat encode(const Program& p) {
    switch (p.op) {
    case Op::Input:
        return 0;
    case Op::Const:
        return 1 + pair(0, p.value);
    case Op::Apply:
        return 1 + pair(1, pair(encode(*p.a), encode(*p.b)));
    case Op::Pair:
        return 1 + pair(2, pair(encode(*p.a), encode(*p.b)));
    case Op::Wrap:
        break;
    }
    return 1 + pair(3 + p.value, encode(*p.a));
}

ProgPtr decode(const Nat& n) {
    if (n == 0)
        return input();
    auto [a, b] = unpair(n - 1);
    if (a == 0)
        return constant(b);
    if (a >= 3)
        return wrap(a - 3, decode(b));
    auto [l, r] = unpair(b);
    return a == 1 ? apply(decode(l), decode(r)) : pairOf(decode(l), decode(r));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Frame {
    enum class Kind { Eval, Call, Pair, Wrap };
    Kind kind;
    const Program* node = nullptr;
    std::shared_ptr<const Nat> input{};
    const Nat* j = nullptr;
};

} // namespace

PartialValue<Nat> run(const Nat& code, const Nat& x, const RunBudget& budget) {
    // Decoded programs stay alive for the whole run: frames hold raw pointers.
    std::vector<ProgPtr> programs{decode(code)};
    std::vector<Frame> control{{Frame::Kind::Eval, programs.back().get(), std::make_shared<const Nat>(x)}};
    std::vector<Nat> values;
    std::uint64_t steps = 0;

    auto tooBig = [&](const Nat& v) { return msb(v + 1) >= budget.maxBits; };

    while (!control.empty()) {
        if (++steps > budget.steps)
            return PartialValue<Nat>::indeterminate("step budget " + std::to_string(budget.steps) + " exhausted");
        Frame f = std::move(control.back());
        control.pop_back();
        switch (f.kind) {
        case Frame::Kind::Eval:
            switch (f.node->op) {
            case Op::Input:
                values.push_back(*f.input);
                break;
            case Op::Const:
                values.push_back(f.node->value);
                break;
            case Op::Apply:
                control.push_back({Frame::Kind::Call});
                control.push_back({Frame::Kind::Eval, f.node->b.get(), f.input});
                control.push_back({Frame::Kind::Eval, f.node->a.get(), f.input});
                break;
            case Op::Pair:
                control.push_back({Frame::Kind::Pair});
                control.push_back({Frame::Kind::Eval, f.node->b.get(), f.input});
                control.push_back({Frame::Kind::Eval, f.node->a.get(), f.input});
                break;
            case Op::Wrap:
                control.push_back({Frame::Kind::Wrap, nullptr, nullptr, &f.node->value});
                control.push_back({Frame::Kind::Eval, f.node->a.get(), f.input});
                break;
            }
            break;
        case Frame::Kind::Call: {
            Nat arg = std::move(values.back());
            values.pop_back();
            Nat fn = std::move(values.back());
            values.pop_back();
            programs.push_back(decode(fn));
            control.push_back({Frame::Kind::Eval, programs.back().get(), std::make_shared<const Nat>(std::move(arg))});
            break;
        }
        case Frame::Kind::Pair: {
            Nat r = std::move(values.back());
            values.pop_back();
            values.back() = pair(values.back(), r);
            if (tooBig(values.back()))
                return PartialValue<Nat>::indeterminate("value size limit exceeded");
            break;
        }
        case Frame::Kind::Wrap:
            values.back() = 1 + pair(*f.j, values.back());
            if (tooBig(values.back()))
                return PartialValue<Nat>::indeterminate("value size limit exceeded");
            break;
        }
    }
    return PartialValue<Nat>::present(std::move(values.back()));
}

Nat constProg(const Nat& x) { return encode(*constant(x)); }

Nat gCompose(const Nat& x, const Nat& y) {
    return encode(*apply(apply(constant(x), input()), apply(constant(y), input())));
}

// ---------------------------------------------------------------------------
// Specialization

TemplatePtr literal(ProgPtr p) {
    return std::make_shared<Template>(Template{Template::Kind::Literal, std::move(p), 0, nullptr, nullptr});
}
TemplatePtr splice(ProgPtr e) {
    return std::make_shared<Template>(Template{Template::Kind::Splice, std::move(e), 0, nullptr, nullptr});
}
TemplatePtr tApply(TemplatePtr f, TemplatePtr x) {
    return std::make_shared<Template>(Template{Template::Kind::Apply, nullptr, 0, std::move(f), std::move(x)});
}
TemplatePtr tPair(TemplatePtr l, TemplatePtr r) {
    return std::make_shared<Template>(Template{Template::Kind::Pair, nullptr, 0, std::move(l), std::move(r)});
}
TemplatePtr tWrap(Nat j, TemplatePtr e) {
    return std::make_shared<Template>(Template{Template::Kind::Wrap, nullptr, std::move(j), std::move(e), nullptr});
}

ProgPtr quoteBuilder(const Template& t) {
    switch (t.kind) {
    case Template::Kind::Literal:
        return constant(encode(*t.program));
    case Template::Kind::Splice:
        return wrap(0, t.program);
    case Template::Kind::Apply:
        return wrap(1, pairOf(quoteBuilder(*t.a), quoteBuilder(*t.b)));
    case Template::Kind::Pair:
        return wrap(2, pairOf(quoteBuilder(*t.a), quoteBuilder(*t.b)));
    case Template::Kind::Wrap:
        break;
    }
    return wrap(3 + t.j, quoteBuilder(*t.a));
}

TemplatePtr gTemplate(const Nat& x) {
    return tApply(literal(apply(constant(x), input())), tApply(splice(input()), literal(input())));
}

Nat specialize(const std::function<TemplatePtr(const Nat&)>& twoArg, const Nat& x) {
    return encode(*quoteBuilder(*twoArg(x)));
}

Nat hCompose(const Nat& x) { return specialize(gTemplate, x); }

ProgPtr kProgram() { return quoteBuilder(*splice(input())); }

ProgPtr sProgram() {
    // quoteBuilder(gTemplate(x)) is Wrap_1(Pair(Const(c), e)) where c, the code
    // of Apply(Const x, Input), is computed from x by e itself.
    static const ProgPtr p = [] {
        ProgPtr e = quoteBuilder(*tApply(splice(input()), literal(input())));
        return quoteBuilder(*tWrap(1, tPair(splice(e), literal(e))));
    }();
    return p;
}

// ---------------------------------------------------------------------------
// Model

Element toElement(const Nat& n) { return Term::elem(n.str()); }

Nat fromElement(const Element& e) {
    if (e.kind() != TermKind::Elem || e.name().find_first_not_of("0123456789") != std::string::npos ||
        (e.name().size() > 1 && e.name()[0] == '0'))
        throw UnknownElementName(print(e) + " is not a natural number");
    return Nat(e.name());
}

KleeneModel::KleeneModel(RunBudget budget)
    : budget_(budget), sElem_(toElement(encode(*sProgram()))), kElem_(toElement(encode(*kProgram()))) {}

std::vector<Element> KleeneModel::probeElements() const {
    return {toElement(0),
            toElement(1),
            toElement(7),
            kElem_,
            sElem_,
            toElement(constProg(7)),
            toElement(encode(*kleene::apply(input(), input()))),
            toElement(gCompose(0, 0))};
}

Element KleeneModel::sample(std::mt19937_64& rng) const {
    switch (rng() % 4) {
    case 0:
        return toElement(Nat(rng() % 1000));
    case 1:
        return toElement(constProg(Nat(rng() % 100)));
    case 2:
        return rng() % 2 ? sElem_ : kElem_;
    default:
        break;
    }
    // A random small program over small constants.
    std::function<ProgPtr(int)> gen = [&](int depth) -> ProgPtr {
        unsigned pick = depth == 0 ? rng() % 2 : rng() % 5;
        switch (pick) {
        case 0:
            return input();
        case 1:
            return kleene::constant(Nat(rng() % 10));
        case 2:
            return kleene::apply(gen(depth - 1), gen(depth - 1));
        case 3:
            return pairOf(gen(depth - 1), gen(depth - 1));
        default:
            return wrap(Nat(rng() % 3), gen(depth - 1));
        }
    };
    return toElement(encode(*gen(2)));
}

Truth3 KleeneModel::contains(const Element& e) const {
    if (e.kind() != TermKind::Elem)
        return Truth3::False;
    const auto& n = e.name();
    return truth(n.find_first_not_of("0123456789") == std::string::npos && (n.size() == 1 || n[0] != '0'));
}

PartialValue<Element> KleeneModel::apply(const Element& a, const Element& b, const Budget&) const {
    auto r = run(fromElement(a), fromElement(b), budget_);
    if (r.isPresent())
        return PartialValue<Element>::present(toElement(r.value()));
    return r.template withoutValue<Element>();
}

std::string KleeneModel::show(const Element& e) const {
    if (e == sElem_)
        return "s";
    if (e == kElem_)
        return "k";
    const auto& n = e.name();
    if (n.size() <= 24)
        return n;
    return n.substr(0, 8) + "..." + n.substr(n.size() - 8) + " (" + std::to_string(n.size()) + " digits)";
}

std::shared_ptr<const KleeneModel> kleenePargoid(RunBudget budget) { return std::make_shared<KleeneModel>(budget); }

} // namespace pargoid::kleene
