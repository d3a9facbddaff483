#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "contmach/associates.hpp"
#include "contmach/certify.hpp"
#include "contmach/realizers.hpp"
#include "test_support.hpp"

using namespace contmach;
using contmach::testing::all_lists;
using contmach::testing::all_oracles;
using contmach::testing::efforts_upto;
using contmach::testing::range;

namespace {

using Name = NameOracle<Natural, Natural>;
using FF = FiniteFunction<Natural, Natural>;
using Assoc = Associate<Natural, Natural, Natural, Natural>;
using NatCM = ContinuousMachine<Natural, Natural, Natural, Natural>;
using NatReply = Reply<Natural, Natural>;

Assoc always_answer(Natural a) {
    return Assoc([a](const FF&, const Natural&) -> NatReply { return Answer<Natural>{a}; });
}

Assoc head(Natural q0) {
    return Assoc([q0](const FF& phi_hat, const Natural&) -> NatReply {
        if (auto a = lookup(phi_hat, q0)) {
            return Answer<Natural>{*a};
        }
        return Query<Natural>{{q0}};
    });
}

Assoc always_query(Natural q0) {
    return Assoc([q0](const FF&, const Natural&) -> NatReply { return Query<Natural>{{q0}}; });
}

// Reads phi(q0) already at effort 0, so it answers even on a default-extended
// table that does not bind q0.
NatCM echo_eager(Natural q0) {
    return {Machine<Natural, Natural, Natural, Natural>(
                [q0](const Name& phi, Effort, const Natural&) { return std::optional<Natural>(phi(q0)); }),
            Modulus<Natural, Natural, Natural>([q0](const Name&, Effort, const Natural&) { return std::vector<Natural>{q0}; })};
}

// Same output, but only from effort 1 on.
NatCM echo_patient(Natural q0) {
    return {Machine<Natural, Natural, Natural, Natural>([q0](const Name& phi, Effort n, const Natural&) {
                return n >= 1 ? std::optional<Natural>(phi(q0)) : std::nullopt;
            }),
            Modulus<Natural, Natural, Natural>([q0](const Name&, Effort, const Natural&) { return std::vector<Natural>{q0}; })};
}

// Asks q' first and then, if the answer is 1, also q' + 1; answers with the
// last value read at effort 2.
NatCM two_step() {
    return {Machine<Natural, Natural, Natural, Natural>([](const Name& phi, Effort n, const Natural& q) -> std::optional<Natural> {
                if (n < 2) {
                    return std::nullopt;
                }
                return phi(q) == 1 ? phi(q + 1) : phi(q);
            }),
            Modulus<Natural, Natural, Natural>([](const Name& phi, Effort n, const Natural& q) {
                if (n == 0) {
                    return std::vector<Natural>{};
                }
                return phi(q) == 1 ? std::vector<Natural>{q, q + 1} : std::vector<Natural>{q};
            })};
}

// The three cases, written out separately from the library.
NatReply literal_associate(const NatCM& cm, Natural q_d, Natural a_d, const FF& phi_hat, Natural q) {
    const auto phi = extend_with_default(phi_hat, a_d);
    const auto dom = phi_hat.domain();
    const Effort size = phi_hat.size();
    for (Effort m = 0; m <= size; ++m) {
        const auto b = cm.machine(phi, m, q);
        bool covered = true;
        for (Effort n = 0; n <= m; ++n) {
            covered = covered && sublist(cm.modulus(phi, n, q), dom);
        }
        if (b && covered) {
            return Answer<Natural>{*b};
        }
    }
    for (Effort m = 0; m <= size; ++m) {
        bool silent = true;
        for (Effort n = 0; n <= m; ++n) {
            silent = silent && !cm.machine(phi, n, q);
        }
        const auto needed = cm.modulus(phi, m, q);
        if (!sublist(needed, dom) && silent) {
            return Query<Natural>{list_diff(needed, dom)};
        }
    }
    return Query<Natural>{{q_d}};
}

std::vector<FF> tables_upto(Natural length) {
    std::vector<FF> out;
    for (const auto& qs : all_lists(3, length)) {
        for (const auto& as : all_lists(2, qs.size())) {
            if (as.size() != qs.size()) {
                continue;
            }
            FF f;
            for (std::size_t i = 0; i < qs.size(); ++i) {
                f.append(qs[i], as[i]);
            }
            out.push_back(f);
        }
    }
    return out;
}

} // namespace

TEST_CASE("dialogue machine of a zero-query associate") {
    const auto cm = dialogue_machine(always_answer(4));
    const Name phi = Name::constant(0);
    CHECK(cm.machine(phi, 0, 0) == std::optional<Natural>(4));
    CHECK(cm.modulus(phi, 0, 0).empty());
    CHECK(cm.modulus(phi, 7, 0).empty());
}

TEST_CASE("dialogue machine of the head associate") {
    const auto cm = dialogue_machine(head(2));
    for (const auto& phi : all_oracles(3, 2)) {
        CHECK_FALSE(cm.machine(phi, 0, 0).has_value());
        CHECK(cm.modulus(phi, 0, 0).empty());
        CHECK(cm.machine(phi, 1, 0) == std::optional<Natural>(phi(2)));
        CHECK(cm.modulus(phi, 1, 0) == std::vector<Natural>{2});
        CHECK(cm.modulus(phi, 5, 0) == std::vector<Natural>{2});
    }
}

TEST_CASE("dialogue machine of a divergent associate") {
    const auto cm = dialogue_machine(always_query(1));
    const Name phi = Name::constant(1);
    for (Effort n = 0; n < 6; ++n) {
        CHECK_FALSE(cm.machine(phi, n, 0).has_value());
        CHECK(cm.modulus(phi, n, 0) == std::vector<Natural>(n, 1));
    }
}

TEST_CASE("dialogue moduli are self-modulating") {
    const auto oracles = all_oracles(3, 2);
    for (const auto& psi : {always_answer(1), head(0), head(2), always_query(1),
                            machine_to_associate(two_step(), Natural{0}, Natural{0})}) {
        CHECK_FALSE(find_continuity_violation(dialogue_machine(psi), oracles, efforts_upto(5), range(2)).has_value());
    }
}

TEST_CASE("dialogue states only grow by appending") {
    const auto psi = machine_to_associate(two_step(), Natural{2}, Natural{0});
    for (const auto& phi : all_oracles(3, 2)) {
        FF previous;
        for (Effort n = 0; n < 6; ++n) {
            const auto state = dialogue_state(psi, phi, Natural{0}, n);
            REQUIRE(state.size() >= previous.size());
            CHECK(std::equal(previous.entries().begin(), previous.entries().end(), state.entries().begin()));
            previous = state;
        }
    }
}

TEST_CASE("machine_to_associate follows the three cases") {
    std::vector<std::pair<const char*, NatCM>> machines{
        {"eager echo", echo_eager(0)}, {"patient echo", echo_patient(1)}, {"two step", two_step()}};
    machines.emplace_back("constant", NatCM{Machine<Natural, Natural, Natural, Natural>(
                                                [](const Name&, Effort, const Natural&) { return std::optional<Natural>(1); }),
                                            Modulus<Natural, Natural, Natural>([](const Name&, Effort, const Natural&) {
                                                return std::vector<Natural>{};
                                            })});
    const auto tables = tables_upto(3);
    for (const auto& [label, cm] : machines) {
        CAPTURE(label);
        for (Natural q_d = 0; q_d < 2; ++q_d) {
            for (Natural a_d = 0; a_d < 2; ++a_d) {
                const auto psi = machine_to_associate(cm, q_d, a_d);
                for (const auto& phi_hat : tables) {
                    for (Natural q = 0; q < 2; ++q) {
                        CHECK(psi(phi_hat, q) == literal_associate(cm, q_d, a_d, phi_hat, q));
                    }
                }
            }
        }
    }
}

TEST_CASE("a machine ignoring its input answers at the empty table") {
    const NatCM constant{Machine<Natural, Natural, Natural, Natural>(
                             [](const Name&, Effort, const Natural&) { return std::optional<Natural>(9); }),
                         Modulus<Natural, Natural, Natural>(
                             [](const Name&, Effort, const Natural&) { return std::vector<Natural>{}; })};
    CHECK(machine_to_associate(constant, Natural{0}, Natural{0})(FF{}, 0) == NatReply(Answer<Natural>{9}));
}

TEST_CASE("echo machines at the empty table") {
    const auto oracles = all_oracles(2, 2);
    for (Natural q0 = 0; q0 < 2; ++q0) {
        for (Natural q_d = 0; q_d < 2; ++q_d) {
            for (Natural a_d = 0; a_d < 2; ++a_d) {
                // The patient machine is silent at effort 0, so the unbound
                // modulus is queried directly.
                const auto patient = machine_to_associate(echo_patient(q0), q_d, a_d);
                CHECK(patient(FF{}, 0) == NatReply(Query<Natural>{{q0}}));

                // The eager machine answers on the default-extended table
                // without its modulus being bound: neither case 1 nor case 2
                // applies, so it falls back to the default question.
                const auto eager = machine_to_associate(echo_eager(q0), q_d, a_d);
                CHECK(eager(FF{}, 0) == NatReply(Query<Natural>{{q_d}}));

                for (const auto& phi : oracles) {
                    const auto p = dialogue_trace(patient, phi, Natural{0}, 10);
                    CHECK(p.answered);
                    CHECK(p.rounds.size() == 2);
                    CHECK(p.rounds.back().reply == NatReply(Answer<Natural>{phi(q0)}));

                    const auto e = dialogue_trace(eager, phi, Natural{0}, 10);
                    if (q_d == q0) {
                        CHECK(e.answered);
                        CHECK(e.rounds.size() == 2);
                        CHECK(e.rounds.back().reply == NatReply(Answer<Natural>{phi(q0)}));
                    } else {
                        // Asking q_d again and again never binds q0.
                        CHECK_FALSE(e.answered);
                    }
                }
            }
        }
    }
}

TEST_CASE("first-listed default answers") {
    const auto psi = machine_to_associate(echo_patient(1), Natural{0}, Natural{0}, DefaultAnswer::first_listed);
    CHECK(psi(FF{}, 0) == NatReply(Query<Natural>{{0}}));
    CHECK(psi(FF({{0, 1}}), 0) == NatReply(Query<Natural>{{1}}));
    CHECK(psi(FF({{0, 1}, {1, 0}}), 0) == NatReply(Answer<Natural>{0}));

    // The eager echo now answers as soon as the table holds its question.
    const auto eager = machine_to_associate(echo_eager(1), Natural{1}, Natural{0}, DefaultAnswer::first_listed);
    for (const auto& phi : all_oracles(2, 2)) {
        const auto t = dialogue_trace(eager, phi, Natural{0}, 10);
        CHECK(t.answered);
        CHECK(t.rounds.back().reply == NatReply(Answer<Natural>{phi(1)}));
    }
}

TEST_CASE("dialogue_trace") {
    const Name phi = Name::constant(1);
    SUBCASE("zero-query associate") {
        const auto t = dialogue_trace(always_answer(3), phi, Natural{0}, 5);
        CHECK(t.answered);
        CHECK(t.rounds.size() == 1);
        CHECK(encode(t).dump() == R"({"rounds":[{"size":0,"tag":"answer","payload":3}],"answered":true})");
    }
    SUBCASE("head associate") {
        const auto t = dialogue_trace(head(2), phi, Natural{0}, 5);
        CHECK(t.answered);
        REQUIRE(t.rounds.size() == 2);
        CHECK(t.rounds[0].reply == NatReply(Query<Natural>{{2}}));
        CHECK(t.rounds[1].state_size == 1);
        CHECK(t.rounds[1].reply == NatReply(Answer<Natural>{1}));
    }
    SUBCASE("divergent associate stops at the cap") {
        const auto t = dialogue_trace(always_query(0), phi, Natural{0}, 5);
        CHECK_FALSE(t.answered);
        CHECK(t.rounds.size() == 5);
        CHECK(t.rounds.back().state_size == 4);
    }
}

TEST_CASE("associate round trip stays inside F_M") {
    const auto cm = two_step();
    for (Natural q_d = 0; q_d < 3; ++q_d) {
        const auto dm = dialogue_machine(machine_to_associate(cm, q_d, Natural{0}));
        for (const auto& phi : all_oracles(3, 2)) {
            for (Natural q = 0; q < 2; ++q) {
                const auto result = evaluate(dm.machine, phi, q, 10);
                REQUIRE(result.has_value());
                CHECK(in_F_M(cm.machine, phi, Name::constant(result->value), {q}, 10).member);
            }
        }
    }
}

TEST_CASE("queries from the modulus bind new questions") {
    const auto cm = two_step();
    const auto psi = machine_to_associate(cm, Natural{2}, Natural{0});
    for (const auto& phi : all_oracles(3, 2)) {
        const auto t = dialogue_trace(psi, phi, Natural{0}, 10);
        REQUIRE(t.answered);
        FF state;
        for (const auto& round : t.rounds) {
            if (const auto* query = std::get_if<Query<Natural>>(&round.reply)) {
                const auto fresh = list_diff(query->questions, state.domain());
                CHECK((!fresh.empty() || query->questions == std::vector<Natural>{2}));
                for (const auto& q : query->questions) {
                    state.append(q, phi(q));
                }
            }
        }
        CHECK(sublist(cm.modulus(phi, 2, 0), state.domain()));
    }
}

TEST_CASE("inversion survives the associate round trip") {
    const auto mm = use_first(inversion_machine());
    const auto dm = dialogue_machine(machine_to_associate(mm.continuous(), Rational(1), Rational(0)));
    for (const Rational& x : {Rational(2), Rational(-3), Rational(1, 3)}) {
        for (const Rational& eps : {Rational(1), Rational::power_of_two(-10)}) {
            const auto phi = exact_name(x);
            const auto result = evaluate(dm.machine, phi, eps, 200);
            REQUIRE(result.has_value());
            CHECK((result->value - x.inverse()).abs() <= eps);
            const auto verdict = in_F_M(mm.machine(), phi, RealName::constant(result->value), {eps}, 1 << 10);
            CHECK(verdict.member);
        }
    }
}
