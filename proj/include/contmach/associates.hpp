#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "contmach/alphabets.hpp"
#include "contmach/json_codec.hpp"
#include "contmach/machines.hpp"

namespace contmach {

/// "?K": the associate needs the answers to these questions first.
template <typename Q>
struct Query {
    std::vector<Q> questions;
    friend bool operator==(const Query&, const Query&) = default;
};

/// "!a'": the final answer.
template <typename A2>
struct Answer {
    A2 value;
    friend bool operator==(const Answer&, const Answer&) = default;
};

template <typename Q, typename A2>
using Reply = std::variant<Query<Q>, Answer<A2>>;

/// Function-space name of a continuous operator: a total map from a finite
/// sub-function of the input name and an output question to either a query
/// or an answer.
template <typename Q, typename A, typename Q2, typename A2>
class Associate {
public:
    using Fn = std::function<Reply<Q, A2>(const FiniteFunction<Q, A>&, const Q2&)>;

    Associate() = default;
    explicit Associate(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

    Reply<Q, A2> operator()(const FiniteFunction<Q, A>& phi_hat, const Q2& q) const { return (*fn_)(phi_hat, q); }

private:
    std::shared_ptr<const Fn> fn_;
};

/// phi_n of the dialogue between `psi` and `phi` on question q': start from
/// the empty function; whenever psi queries K, append (q, phi(q)) for q in K.
/// Once psi answers the state no longer changes.
template <typename Q, typename A, typename Q2, typename A2>
FiniteFunction<Q, A> dialogue_state(const Associate<Q, A, Q2, A2>& psi, const NameOracle<Q, A>& phi, const Q2& q,
                                    Effort steps) {
    FiniteFunction<Q, A> state;
    for (Effort k = 0; k < steps; ++k) {
        auto reply = psi(state, q);
        const auto* query = std::get_if<Query<Q>>(&reply);
        if (query == nullptr) {
            break;
        }
        for (const Q& asked : query->questions) {
            state.append(asked, phi(asked));
        }
    }
    return state;
}

/// (M_psi, mu_psi): M_psi answers at effort n iff psi answers on phi_n, and
/// mu_psi(phi)(n, q') lists the questions of phi_n in order.
template <typename Q, typename A, typename Q2, typename A2>
ContinuousMachine<Q, A, Q2, A2> dialogue_machine(const Associate<Q, A, Q2, A2>& psi) {
    Machine<Q, A, Q2, A2> machine([psi](const NameOracle<Q, A>& phi, Effort n, const Q2& q) {
        auto reply = psi(dialogue_state(psi, phi, q, n), q);
        if (auto* answer = std::get_if<Answer<A2>>(&reply)) {
            return std::optional<A2>(std::move(answer->value));
        }
        return std::optional<A2>{};
    });
    Modulus<Q, A, Q2> modulus([psi](const NameOracle<Q, A>& phi, Effort n, const Q2& q) {
        return dialogue_state(psi, phi, q, n).domain();
    });
    return {std::move(machine), std::move(modulus)};
}

/// Where unbound questions of the finite function get their answers when the
/// machine is run on it.
enum class DefaultAnswer {
    /// The supplied default answer.
    fixed,
    /// The first answer listed in the finite function; the empty function is
    /// met with a query for the default question.
    first_listed,
};

/// The associate psi_{M,mu} of F_M. On (phi_hat, q') it runs the machine and
/// modulus on phi_hat extended by a default answer, for efforts
/// m = 0, ..., size(phi_hat):
///   1. the smallest m where M answers and every modulus list up to m is bound
///      in phi_hat yields that answer;
///   2. otherwise the smallest m where the modulus list is not bound and M has
///      not answered up to m yields a query for its unbound part (list order);
///   3. otherwise it queries the default question.
template <typename Q, typename A, typename Q2, typename A2>
Associate<Q, A, Q2, A2> machine_to_associate(const ContinuousMachine<Q, A, Q2, A2>& cm, Q default_question,
                                             A default_answer, DefaultAnswer mode = DefaultAnswer::fixed) {
    return Associate<Q, A, Q2, A2>([cm, default_question, default_answer, mode](const FiniteFunction<Q, A>& phi_hat,
                                                                                 const Q2& q) -> Reply<Q, A2> {
        if (mode == DefaultAnswer::first_listed && phi_hat.empty()) {
            return Query<Q>{{default_question}};
        }
        const A& fallback = mode == DefaultAnswer::fixed ? default_answer : phi_hat.entries().front().second;
        const auto extended = extend_with_default(phi_hat, fallback);
        const auto bound = phi_hat.domain();

        bool all_bound = true;
        bool all_silent = true;
        for (Effort m = 0; m <= phi_hat.size(); ++m) {
            if (!all_bound && !all_silent) {
                break;
            }
            const auto answer = cm.machine(extended, m, q);
            const auto unbound = list_diff(cm.modulus(extended, m, q), bound);
            all_bound = all_bound && unbound.empty();
            if (answer && all_bound) {
                return Answer<A2>{*answer};
            }
            all_silent = all_silent && !answer;
            if (!unbound.empty() && all_silent) {
                return Query<Q>{unbound};
            }
        }
        return Query<Q>{{default_question}};
    });
}

/// One exchange of a dialogue.
template <typename Q, typename A2>
struct Round {
    std::size_t state_size;
    Reply<Q, A2> reply;
};

template <typename Q, typename A2>
struct Transcript {
    std::vector<Round<Q, A2>> rounds;
    bool answered = false;
};

/// Runs the dialogue loop for at most `max_rounds` replies, stopping at the
/// first answer.
template <typename Q, typename A, typename Q2, typename A2>
Transcript<Q, A2> dialogue_trace(const Associate<Q, A, Q2, A2>& psi, const NameOracle<Q, A>& phi, const Q2& q,
                                 std::size_t max_rounds) {
    Transcript<Q, A2> out;
    FiniteFunction<Q, A> state;
    for (std::size_t k = 0; k < max_rounds; ++k) {
        auto reply = psi(state, q);
        out.rounds.push_back({state.size(), reply});
        if (const auto* query = std::get_if<Query<Q>>(&reply)) {
            for (const Q& asked : query->questions) {
                state.append(asked, phi(asked));
            }
        } else {
            out.answered = true;
            break;
        }
    }
    return out;
}

/// {"rounds":[{"size":int,"tag":"query"|"answer","payload":...}], "answered": bool}
template <typename Q, typename A2>
Json encode(const Transcript<Q, A2>& transcript) {
    Json rounds = Json::array();
    for (const auto& round : transcript.rounds) {
        Json entry{{"size", round.state_size}};
        if (const auto* query = std::get_if<Query<Q>>(&round.reply)) {
            entry["tag"] = "query";
            entry["payload"] = encode(query->questions);
        } else {
            entry["tag"] = "answer";
            entry["payload"] = encode(std::get<Answer<A2>>(round.reply).value);
        }
        rounds.push_back(std::move(entry));
    }
    return Json{{"rounds", std::move(rounds)}, {"answered", transcript.answered}};
}

} // namespace contmach
