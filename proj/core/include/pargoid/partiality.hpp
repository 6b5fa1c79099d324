#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pargoid {

struct Certificate;

/// Three-valued truth under the strong Kleene connectives. Unknown means a
/// budget ran out, never that the question itself is undetermined.
enum class Truth3 { False, True, Unknown };

Truth3 operator!(Truth3 a);
Truth3 operator&&(Truth3 a, Truth3 b);
Truth3 operator||(Truth3 a, Truth3 b);
inline Truth3 truth(bool b) { return b ? Truth3::True : Truth3::False; }
std::string_view toString(Truth3 t);

/// Why a value is certainly absent: a divergence certificate, a table hole,
/// a failed membership, or strict propagation from a subexpression.
struct Absence {
    std::string reason;
    std::shared_ptr<const Certificate> certificate;
};

/// Why a value could not be determined within budget.
struct Indeterminacy {
    std::string info;
};

template <typename T>
class PartialValue {
public:
    static PartialValue present(T value) { return PartialValue(std::move(value)); }
    static PartialValue absent(std::string reason, std::shared_ptr<const Certificate> cert = nullptr) {
        return PartialValue(Absence{std::move(reason), std::move(cert)});
    }
    static PartialValue absent(Absence a) { return PartialValue(std::move(a)); }
    static PartialValue indeterminate(std::string info) { return PartialValue(Indeterminacy{std::move(info)}); }
    static PartialValue indeterminate(Indeterminacy i) { return PartialValue(std::move(i)); }

    bool isPresent() const noexcept { return state_.index() == 0; }
    bool isAbsent() const noexcept { return state_.index() == 1; }
    bool isIndeterminate() const noexcept { return state_.index() == 2; }

    const T& value() const { return std::get<0>(state_); }
    const Absence& absence() const { return std::get<1>(state_); }
    const Indeterminacy& indeterminacy() const { return std::get<2>(state_); }

    /// Same partiality status carrying a different value type.
    template <typename U>
    PartialValue<U> withoutValue() const {
        if (isAbsent())
            return PartialValue<U>::absent(absence());
        return PartialValue<U>::indeterminate(indeterminacy());
    }

private:
    template <typename A>
    explicit PartialValue(A a) : state_(std::move(a)) {}
    std::variant<T, Absence, Indeterminacy> state_;
};

template <typename T, typename Eq = std::equal_to<T>>
Truth3 kleeneEqual(const PartialValue<T>& a, const PartialValue<T>& b, Eq eq = {}) {
    if (a.isPresent() && b.isPresent())
        return truth(eq(a.value(), b.value()));
    if (a.isAbsent() && b.isAbsent())
        return Truth3::True;
    if ((a.isPresent() && b.isAbsent()) || (a.isAbsent() && b.isPresent()))
        return Truth3::False;
    return Truth3::Unknown;
}

/// M <| A |> N
template <typename T>
PartialValue<T> hoare(const PartialValue<T>& m, Truth3 cond, const PartialValue<T>& n) {
    switch (cond) {
    case Truth3::True:
        return m;
    case Truth3::False:
        return n;
    case Truth3::Unknown:
        break;
    }
    return PartialValue<T>::indeterminate("condition undetermined within budget");
}

/// M <| A : undefined when the condition fails.
template <typename T>
PartialValue<T> hoare(const PartialValue<T>& m, Truth3 cond, std::string failReason = "condition is false") {
    return hoare(m, cond, PartialValue<T>::absent(std::move(failReason)));
}

/// Strictness: a composite exists only if all of its parts exist.
template <typename T, typename R, typename Combine>
PartialValue<R> strictJoin(const std::vector<PartialValue<T>>& parts, Combine combine) {
    const PartialValue<T>* blocker = nullptr;
    for (const auto& p : parts) {
        if (p.isAbsent())
            return PartialValue<R>::absent(p.absence());
        if (p.isIndeterminate() && blocker == nullptr)
            blocker = &p;
    }
    if (blocker != nullptr)
        return PartialValue<R>::indeterminate(blocker->indeterminacy());
    std::vector<T> values;
    values.reserve(parts.size());
    for (const auto& p : parts)
        values.push_back(p.value());
    return PartialValue<R>::present(combine(values));
}

} // namespace pargoid
