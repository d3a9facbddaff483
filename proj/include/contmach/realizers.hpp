#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contmach/json_codec.hpp"
#include "contmach/machines.hpp"
#include "contmach/rational.hpp"
#include "contmach/spaces.hpp"

namespace contmach {

using RealName = NameOracle<Rational, Rational>;

/// Multiplicative inverse on names of reals.
///
/// At effort n and accuracy eps: with t = 2^-n and delta = |phi(t)| - t,
/// answers 1 / phi(min(delta, eps * delta^2) / 2) when delta > 0, otherwise
/// None. On names of x != 0 every answer is within eps of 1/x, and different
/// efforts may give different answers. The modulus lists the questions asked:
/// [t] when delta <= 0, [t, min(delta, eps * delta^2) / 2] otherwise.
///
/// phi(min(...) / 2) cannot be 0 on a name (it is at least delta / 2 in
/// absolute value); on other oracles a zero there yields None so that the
/// machine stays total.
ContinuousMachine<Rational, Rational, Rational, Rational> inversion_machine();

/// Sign into the Kleeneans, as a machine on the one-point question set whose
/// effort-indexed outputs form the Kleenean name: at effort n, Some(0 < a)
/// where a = phi(2^-n) if |a| > 3 * 2^-n, None otherwise. The modulus is
/// [2^-n]. Once an answer appears, every later effort gives the same answer.
ContinuousMachine<Rational, Rational, Unit, bool> sign_machine();

/// The Kleenean value of sign(x): bottom at 0.
Kleenean sign_kleenean(const Rational& x);

// Sample corpora.

enum class NameKind { exact, grid };

std::string to_string(NameKind kind);

struct CorpusEntry {
    Rational point;
    NameKind kind;
};

RealName name_for(const CorpusEntry& entry);
std::string label(const CorpusEntry& entry);

/// JSON array of {"point": "p/q", "name_kind": "exact"|"grid"}.
std::vector<CorpusEntry> decode_corpus(const Json& j);
Json encode(const std::vector<CorpusEntry>& corpus);

/// Every point of `points` with both name kinds.
std::vector<CorpusEntry> corpus_of(const std::vector<Rational>& points);

// Realizer checking.

template <typename X, typename Q, typename A>
struct RealizerSample {
    std::string label;
    X point;
    NameOracle<Q, A> name;
};

struct RealizerReport {
    std::size_t samples = 0;
    std::vector<Json> failures;
    /// Fuel ran out before an answer. Never counted as a failure.
    std::vector<Json> undecided;

    bool passed() const { return failures.empty(); }
};

Json encode(const RealizerReport& report);

/// Checks that M realizes f on the samples. Samples where f is undefined are
/// skipped. For an output space with answer_ok every output question is
/// evaluated under `schedule` and judged on its own; otherwise the answers to
/// all output questions are assembled into a name (unanswered questions make
/// the sample undecided) and passed to is_name.
template <typename X, typename Q, typename A, typename Y, typename Q2, typename A2>
RealizerReport check_realizer(const Machine<Q, A, Q2, A2>& m, const std::function<std::optional<Y>(const X&)>& f,
                              const RepresentedSpace<Q, A, X>& space_in, const RepresentedSpace<Q2, A2, Y>& space_out,
                              const std::vector<RealizerSample<X, Q, A>>& samples,
                              const std::vector<Q2>& output_questions, Effort cap,
                              Schedule schedule = Schedule::linear) {
    RealizerReport report;
    for (const auto& sample : samples) {
        const auto target = f(sample.point);
        if (!target) {
            continue;
        }
        ++report.samples;
        if (!space_in.is_name(sample.name, sample.point)) {
            report.failures.push_back(Json{{"sample", sample.label}, {"reason", "input is not a name"}});
            continue;
        }
        if (space_out.answer_ok) {
            for (const Q2& q : output_questions) {
                const auto result = evaluate(m, sample.name, q, cap, schedule);
                if (!result) {
                    report.undecided.push_back(Json{{"sample", sample.label}, {"question", encode(q)}});
                } else if (!(*space_out.answer_ok)(*target, q, result->value)) {
                    report.failures.push_back(Json{{"sample", sample.label},
                                                   {"question", encode(q)},
                                                   {"answer", encode(result->value)},
                                                   {"effort", result->effort}});
                }
            }
            continue;
        }
        TableOracle<Q2, A2> assembled{space_out.answers.name, {}, space_out.answers.fallback};
        bool complete = true;
        for (const Q2& q : output_questions) {
            const auto result = evaluate(m, sample.name, q, cap, schedule);
            if (!result) {
                complete = false;
                report.undecided.push_back(Json{{"sample", sample.label}, {"question", encode(q)}});
                break;
            }
            assembled.table.emplace_back(q, result->value);
        }
        if (complete && !space_out.is_name(assembled.oracle(), *target)) {
            report.failures.push_back(Json{{"sample", sample.label}, {"reason", "output is not a name of the image"}});
        }
    }
    return report;
}

} // namespace contmach
