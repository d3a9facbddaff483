#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contmach/alphabets.hpp"
#include "contmach/json_codec.hpp"
#include "contmach/machines.hpp"
#include "contmach/rational.hpp"

namespace contmach {

/// A represented space at test scale.
///
/// is_name can only inspect finitely many answers, so for spaces with
/// infinitely many questions it is a sampled approximation; each constructor
/// documents its sample. answer_ok is present exactly for spaces where every
/// answer can be judged on its own, so that any oracle giving only correct
/// answers is a name.
template <typename Q, typename A, typename X>
struct RepresentedSpace {
    std::string name;
    Alphabet<Q> questions;
    Alphabet<A> answers;
    std::function<bool(const NameOracle<Q, A>&, const X&)> is_name;
    std::optional<std::function<bool(const X&, const Q&, const A&)>> answer_ok;
};

/// Q = {*}, A = X; phi names x iff phi(*) = x.
template <typename X>
RepresentedSpace<Unit, X, X> discrete_space(Alphabet<X> points) {
    return {"discrete(" + points.name + ")", unit_alphabet(), std::move(points),
            [](const NameOracle<Unit, X>& phi, const X& x) { return phi(Unit{}) == x; },
            [](const X& x, const Unit&, const X& a) { return a == x; }};
}

// Reals via rational approximations.

/// |x - a| <= eps, and anything for eps <= 0 (those questions carry no
/// requirement).
bool rational_answer_ok(const Rational& x, const Rational& eps, const Rational& a);

/// The questions is_name of rational_reals() inspects: 2^-k for k = 0..64 and
/// 7/5, 1/3, 1/10, 3.
const std::vector<Rational>& rational_sample_questions();

/// Q = A = rationals; phi names x iff |x - phi(eps)| <= eps for all eps > 0.
/// The default question is 1 and the default answer is 0.
RepresentedSpace<Rational, Rational, Rational> rational_reals();

/// phi(eps) = x.
NameOracle<Rational, Rational> exact_name(const Rational& x);
/// phi(eps) = the multiple of eps/2 nearest to x (ties round up); phi(eps) = x
/// for eps <= 0.
NameOracle<Rational, Rational> grid_name(const Rational& x);

// Kleeneans.

enum class Kleenean { false_k, true_k, bottom };

std::string to_string(Kleenean k);
Json encode(Kleenean k);

using KleeneanName = NameOracle<Natural, std::optional<bool>>;

/// The Kleenean named by the first `length` entries of a name: the first Some
/// decides, and a prefix of None is read as bottom.
Kleenean kleenean_on_prefix(const KleeneanName& phi, Natural length);

/// Q = N, A = opt(B). is_name compares kleenean_on_prefix over the first
/// `prefix_length` entries; bottom can only be confirmed up to that prefix.
RepresentedSpace<Natural, std::optional<bool>, Kleenean> kleeneans(Natural prefix_length = 64);

/// psi(n) = Some(b) for the first Some(b) among phi(0..n), None before it.
/// The result names the same Kleenean and is monotone.
KleeneanName monotonize_kleenean_name(KleeneanName phi);

/// Booleans into Kleeneans: M(phi)(n, k) = Some(Some(phi(*))) at every effort.
MonotoneMachine<Unit, bool, Natural, std::optional<bool>> bool_to_kleenean_realizer();

/// Kleeneans back to Booleans: at effort n, the first Some(b) among
/// phi(0..n). Diverges on names of bottom.
MonotoneMachine<Natural, std::optional<bool>, Unit, bool> kleenean_to_bool_machine();

/// Reads the effort-indexed outputs of a machine on a one-point question set
/// as a Kleenean name: k -> M(phi)(k, *). M(phi)(e, k) ignores e.
template <typename Q, typename A>
MonotoneMachine<Q, A, Natural, std::optional<bool>> as_kleenean_name_machine(const ContinuousMachine<Q, A, Unit, bool>& cm) {
    Machine<Q, A, Natural, std::optional<bool>> machine([m = cm.machine](const NameOracle<Q, A>& phi, Effort, const Natural& k) {
        return std::optional<std::optional<bool>>(m(phi, k, Unit{}));
    });
    Modulus<Q, A, Natural> modulus(
        [mu = cm.modulus](const NameOracle<Q, A>& phi, Effort, const Natural& k) { return mu(phi, k, Unit{}); });
    return MonotoneMachine<Q, A, Natural, std::optional<bool>>::assume_monotone({std::move(machine), std::move(modulus)});
}

// Precompletion: questions N x Q, answers opt(A).

template <typename Q>
using IndexedQuestion = std::pair<Natural, Q>;

/// embed_name(phi)(n, q) = Some(phi(q)).
template <typename Q, typename A>
NameOracle<IndexedQuestion<Q>, std::optional<A>> embed_name(NameOracle<Q, A> phi) {
    return NameOracle<IndexedQuestion<Q>, std::optional<A>>(
        [phi = std::move(phi)](const IndexedQuestion<Q>& q) { return std::optional<A>(phi(q.second)); });
}

/// Back from precompleted names: at effort m on question q, the first Some
/// among psi(0, q), ..., psi(m, q). The modulus lists the indices scanned.
template <typename Q, typename A>
MonotoneMachine<IndexedQuestion<Q>, std::optional<A>, Q, A> search_translate() {
    using Name = NameOracle<IndexedQuestion<Q>, std::optional<A>>;
    Machine<IndexedQuestion<Q>, std::optional<A>, Q, A> machine([](const Name& psi, Effort m, const Q& q) {
        for (Natural n = 0; n <= m; ++n) {
            if (auto a = psi({n, q})) {
                return a;
            }
        }
        return std::optional<A>{};
    });
    Modulus<IndexedQuestion<Q>, std::optional<A>, Q> modulus([](const Name& psi, Effort m, const Q& q) {
        std::vector<IndexedQuestion<Q>> out;
        for (Natural n = 0; n <= m; ++n) {
            out.push_back({n, q});
            if (psi({n, q})) {
                break;
            }
        }
        return out;
    });
    return MonotoneMachine<IndexedQuestion<Q>, std::optional<A>, Q, A>::assume_monotone(
        {std::move(machine), std::move(modulus)});
}

/// psi names x iff searching each column recovers a name of x in `space`.
/// is_name searches at most `search_bound` indices per question; a question
/// without a Some in that range counts as a failure.
template <typename Q, typename A, typename X>
RepresentedSpace<IndexedQuestion<Q>, std::optional<A>, X> precompletion(const RepresentedSpace<Q, A, X>& space,
                                                                       Natural search_bound = 64) {
    using Name = NameOracle<IndexedQuestion<Q>, std::optional<A>>;
    auto is_name = [inner = space.is_name, fallback = space.answers.fallback, search_bound](const Name& psi,
                                                                                           const X& x) {
        auto missing = std::make_shared<bool>(false);
        NameOracle<Q, A> recovered([psi, fallback, search_bound, missing](const Q& q) {
            for (Natural n = 0; n <= search_bound; ++n) {
                if (auto a = psi({n, q})) {
                    return *a;
                }
            }
            *missing = true;
            return fallback;
        });
        return inner(recovered, x) && !*missing;
    };
    return {"precompletion(" + space.name + ")", indexed_alphabet(space.questions), optional_alphabet(space.answers),
            std::move(is_name), std::nullopt};
}

} // namespace contmach
