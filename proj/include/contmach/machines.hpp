#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contmach/alphabets.hpp"
#include "contmach/json_codec.hpp"

namespace contmach {

/// The effort parameter. Larger efforts usually mean more work, but an effort
/// is an ordinary input of the machine and not a step count.
using Effort = Natural;

/// A fuel-indexed machine: M(phi)(n, q') is an optional answer. Must be total
/// and deterministic in all three arguments.
template <typename Q, typename A, typename Q2, typename A2>
class Machine {
public:
    using Fn = std::function<std::optional<A2>(const NameOracle<Q, A>&, Effort, const Q2&)>;

    Machine() = default;
    explicit Machine(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

    std::optional<A2> operator()(const NameOracle<Q, A>& phi, Effort n, const Q2& q) const { return (*fn_)(phi, n, q); }

private:
    std::shared_ptr<const Fn> fn_;
};

/// mu(phi)(n, q'): the finite list of input questions the machine's output at
/// (phi, n, q') depends on.
template <typename Q, typename A, typename Q2>
class Modulus {
public:
    using Fn = std::function<std::vector<Q>(const NameOracle<Q, A>&, Effort, const Q2&)>;

    Modulus() = default;
    explicit Modulus(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

    std::vector<Q> operator()(const NameOracle<Q, A>& phi, Effort n, const Q2& q) const { return (*fn_)(phi, n, q); }

private:
    std::shared_ptr<const Fn> fn_;
};

/// A machine together with a self-modulating modulus of it.
template <typename Q, typename A, typename Q2, typename A2>
struct ContinuousMachine {
    using Question = Q;
    using Answer = A;
    using OutQuestion = Q2;
    using OutAnswer = A2;

    Machine<Q, A, Q2, A2> machine;
    Modulus<Q, A, Q2> modulus;
};

/// A continuous machine whose answers persist under increasing effort and
/// whose modulus list stays fixed once the machine has answered.
///
/// Obtained from use_first() or compose_monotone(), or by vouching for a
/// machine that is monotone by construction with assume_monotone().
template <typename Q, typename A, typename Q2, typename A2>
class MonotoneMachine {
public:
    static MonotoneMachine assume_monotone(ContinuousMachine<Q, A, Q2, A2> cm) { return MonotoneMachine(std::move(cm)); }

    const ContinuousMachine<Q, A, Q2, A2>& continuous() const { return cm_; }
    const Machine<Q, A, Q2, A2>& machine() const { return cm_.machine; }
    const Modulus<Q, A, Q2>& modulus() const { return cm_.modulus; }

private:
    explicit MonotoneMachine(ContinuousMachine<Q, A, Q2, A2> cm) : cm_(std::move(cm)) {}

    ContinuousMachine<Q, A, Q2, A2> cm_;
};

// Effort search.

enum class Schedule { linear, powers_of_two };

std::string to_string(Schedule schedule);
/// Accepts "linear" and "powers_of_two"; throws std::invalid_argument.
Schedule parse_schedule(std::string_view text);

/// Efforts visited under `schedule` up to and including `cap`:
/// linear 0, 1, ..., cap; powers_of_two 0, 1, 2, 4, ..., largest power <= cap.
std::vector<Effort> schedule_efforts(Schedule schedule, Effort cap);

template <typename A2>
struct Success {
    A2 value;
    Effort effort;

    friend bool operator==(const Success&, const Success&) = default;
};

/// First answer along the schedule. std::nullopt means no effort up to the cap
/// produced one, which is divergence up to the cap rather than an error.
template <typename Q, typename A, typename Q2, typename A2>
std::optional<Success<A2>> evaluate(const Machine<Q, A, Q2, A2>& m, const NameOracle<Q, A>& phi, const Q2& q,
                                    Effort cap, Schedule schedule = Schedule::linear) {
    for (Effort n : schedule_efforts(schedule, cap)) {
        if (auto a = m(phi, n, q)) {
            return Success<A2>{std::move(*a), n};
        }
    }
    return std::nullopt;
}

template <typename Q, typename A2>
struct Attempt {
    Effort effort;
    std::optional<A2> result;
    std::vector<Q> modulus;
};

template <typename Q, typename A2>
struct EvaluationTrace {
    Schedule schedule;
    Effort fuel_cap;
    std::vector<Attempt<Q, A2>> attempts;
    std::optional<Success<A2>> final;
};

/// evaluate() that also records the modulus at every visited effort.
template <typename Q, typename A, typename Q2, typename A2>
EvaluationTrace<Q, A2> evaluate_traced(const ContinuousMachine<Q, A, Q2, A2>& cm, const NameOracle<Q, A>& phi,
                                       const Q2& q, Effort cap, Schedule schedule = Schedule::linear) {
    EvaluationTrace<Q, A2> trace{schedule, cap, {}, std::nullopt};
    for (Effort n : schedule_efforts(schedule, cap)) {
        auto a = cm.machine(phi, n, q);
        trace.attempts.push_back({n, a, cm.modulus(phi, n, q)});
        if (a) {
            trace.final = Success<A2>{std::move(*a), n};
            break;
        }
    }
    return trace;
}

/// {"effort_schedule": str, "attempts": [{"n": int, "result": "none"|value,
/// "modulus": [q, ...]}], "final": value|null, "fuel_cap": int}
template <typename Q, typename A2>
Json encode(const EvaluationTrace<Q, A2>& trace) {
    Json attempts = Json::array();
    for (const auto& attempt : trace.attempts) {
        attempts.push_back(Json{{"n", attempt.effort}, {"result", encode(attempt.result)}, {"modulus", encode(attempt.modulus)}});
    }
    return Json{{"effort_schedule", to_string(trace.schedule)},
                {"attempts", std::move(attempts)},
                {"final", trace.final ? encode(trace.final->value) : Json(nullptr)},
                {"fuel_cap", trace.fuel_cap}};
}

/// Outcome of a bounded membership test psi in F_M(phi).
struct Membership {
    bool member = false;
    /// Some question got no answer at any effort up to the cap, so a negative
    /// verdict may be due to insufficient fuel.
    bool undecided = false;
};

/// Checks, for every q' in `questions`, that M(phi)(n, q') = Some(psi(q')) for
/// some n <= cap.
template <typename Q, typename A, typename Q2, typename A2>
Membership in_F_M(const Machine<Q, A, Q2, A2>& m, const NameOracle<Q, A>& phi, const NameOracle<Q2, A2>& psi,
                  const std::vector<Q2>& questions, Effort cap) {
    Membership out{true, false};
    for (const Q2& q : questions) {
        const A2 wanted = psi(q);
        bool matched = false;
        bool answered = false;
        for (Effort n = 0; n <= cap && !matched; ++n) {
            if (auto a = m(phi, n, q)) {
                answered = true;
                matched = *a == wanted;
            }
        }
        if (!matched) {
            out.member = false;
            out.undecided = out.undecided || !answered;
        }
    }
    return out;
}

/// Monotonization: commit to the answer at the smallest effort that produces
/// one. The modulus concatenates mu(phi)(i, q') over all i <= n up to and
/// including the first answering effort, duplicates kept.
template <typename Q, typename A, typename Q2, typename A2>
MonotoneMachine<Q, A, Q2, A2> use_first(const ContinuousMachine<Q, A, Q2, A2>& cm) {
    Machine<Q, A, Q2, A2> machine([m = cm.machine](const NameOracle<Q, A>& phi, Effort n, const Q2& q) {
        for (Effort i = 0; i <= n; ++i) {
            if (auto a = m(phi, i, q)) {
                return a;
            }
        }
        return std::optional<A2>{};
    });
    Modulus<Q, A, Q2> modulus([m = cm.machine, mu = cm.modulus](const NameOracle<Q, A>& phi, Effort n, const Q2& q) {
        std::vector<Q> out;
        for (Effort i = 0; i <= n; ++i) {
            append_all(out, mu(phi, i, q));
            if (m(phi, i, q)) {
                break;
            }
        }
        return out;
    });
    return MonotoneMachine<Q, A, Q2, A2>::assume_monotone({std::move(machine), std::move(modulus)});
}

/// N(phi)(n, q') = Some(mu(phi)(n, q')) whenever M answers, else None. Each
/// list returned is a continuity certificate for the operator at (phi, q').
template <typename Q, typename A, typename Q2, typename A2>
ContinuousMachine<Q, A, Q2, std::vector<Q>> derive_modulus_machine(const MonotoneMachine<Q, A, Q2, A2>& mm) {
    Machine<Q, A, Q2, std::vector<Q>> machine(
        [m = mm.machine(), mu = mm.modulus()](const NameOracle<Q, A>& phi, Effort n, const Q2& q) {
            if (m(phi, n, q)) {
                return std::optional<std::vector<Q>>(mu(phi, n, q));
            }
            return std::optional<std::vector<Q>>{};
        });
    return {std::move(machine), mm.modulus()};
}

namespace detail {

// The intermediate name phi'_n of a composition, evaluated on demand. Results
// of the inner machine are memoized; one view lives for one composite call.
template <typename Q, typename A, typename Q2, typename A2>
class IntermediateName {
public:
    IntermediateName(Machine<Q, A, Q2, A2> inner, NameOracle<Q, A> phi, Effort n, A2 fallback)
        : inner_(std::move(inner)), phi_(std::move(phi)), n_(n), fallback_(std::move(fallback)) {}

    const std::optional<A2>& inner_answer(const Q2& q) {
        for (const auto& [key, value] : cache_) {
            if (key == q) {
                return value;
            }
        }
        cache_.emplace_back(q, inner_(phi_, n_, q));
        return cache_.back().second;
    }

    A2 value(const Q2& q) {
        const auto& a = inner_answer(q);
        return a ? *a : fallback_;
    }

    bool in_domain(const Q2& q) { return inner_answer(q).has_value(); }

private:
    Machine<Q, A, Q2, A2> inner_;
    NameOracle<Q, A> phi_;
    Effort n_;
    A2 fallback_;
    std::vector<std::pair<Q2, std::optional<A2>>> cache_;
};

template <typename Q, typename A, typename Q2, typename A2>
NameOracle<Q2, A2> as_oracle(const std::shared_ptr<IntermediateName<Q, A, Q2, A2>>& view) {
    return NameOracle<Q2, A2>([view](const Q2& q) { return view->value(q); });
}

} // namespace detail

/// Composition of monotone machines.
///
/// phi'_n answers q' with the inner machine's answer at effort n, or with
/// `inner_default` where the inner machine has none; dom_n is the set of q'
/// where it has one. At (phi, n, q'') the composite returns
/// outer(phi'_n)(n, q'') provided every question of outer_mu(phi'_n)(n, q'')
/// lies in dom_n, else None. An empty outer modulus list passes the check.
/// The composite modulus concatenates inner_mu(phi)(n, q') over the q' of that
/// list.
template <typename Q, typename A, typename Q2, typename A2, typename Q3, typename A3>
MonotoneMachine<Q, A, Q3, A3> compose_monotone(const MonotoneMachine<Q2, A2, Q3, A3>& outer,
                                               const MonotoneMachine<Q, A, Q2, A2>& inner, A2 inner_default) {
    using View = detail::IntermediateName<Q, A, Q2, A2>;
    Machine<Q, A, Q3, A3> machine([outer_m = outer.machine(), outer_mu = outer.modulus(), inner_m = inner.machine(),
                                   inner_default](const NameOracle<Q, A>& phi, Effort n, const Q3& q) {
        auto view = std::make_shared<View>(inner_m, phi, n, inner_default);
        const auto phi_n = detail::as_oracle(view);
        for (const Q2& needed : outer_mu(phi_n, n, q)) {
            if (!view->in_domain(needed)) {
                return std::optional<A3>{};
            }
        }
        return outer_m(phi_n, n, q);
    });
    Modulus<Q, A, Q3> modulus([outer_mu = outer.modulus(), inner_m = inner.machine(), inner_mu = inner.modulus(),
                               inner_default](const NameOracle<Q, A>& phi, Effort n, const Q3& q) {
        auto view = std::make_shared<View>(inner_m, phi, n, inner_default);
        std::vector<Q> out;
        for (const Q2& needed : outer_mu(detail::as_oracle(view), n, q)) {
            append_all(out, inner_mu(phi, n, needed));
        }
        return out;
    });
    return MonotoneMachine<Q, A, Q3, A3>::assume_monotone({std::move(machine), std::move(modulus)});
}

/// Raised when no initial segment of the enumeration within the bound
/// certifies the machine's output over the given domain.
class ModulusSearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimal modulus over an explicit finite domain: the shortest initial
/// segment q_0, ..., q_{k-1} of `questions.enumerate` such that every psi in
/// `domain` agreeing with phi there has M(psi)(n, q') = M(phi)(n, q').
/// Throws ModulusSearchError if k would exceed `enumeration_bound`.
template <typename Q, typename A, typename Q2, typename A2>
Modulus<Q, A, Q2> brute_force_min_modulus(const Machine<Q, A, Q2, A2>& m, std::vector<NameOracle<Q, A>> domain,
                                          const Alphabet<Q>& questions, Natural enumeration_bound) {
    return Modulus<Q, A, Q2>([m, domain = std::move(domain), enumerate = questions.enumerate,
                              enumeration_bound](const NameOracle<Q, A>& phi, Effort n, const Q2& q) {
        const auto target = m(phi, n, q);
        std::vector<Q> prefix;
        for (Natural k = 0;; ++k) {
            bool certified = true;
            for (const auto& psi : domain) {
                if (restriction_eq(phi, psi, prefix) && !(m(psi, n, q) == target)) {
                    certified = false;
                    break;
                }
            }
            if (certified) {
                return prefix;
            }
            if (k == enumeration_bound) {
                throw ModulusSearchError("no initial segment of length <= " + std::to_string(enumeration_bound) +
                                         " certifies the machine at this input");
            }
            prefix.push_back(enumerate(k));
        }
    });
}

} // namespace contmach
