#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "contmach/associates.hpp"
#include "contmach/realizers.hpp"

namespace contmach::cli {

namespace {

using RealMachine = MonotoneMachine<Rational, Rational, Rational, Rational>;
using SignMachine = MonotoneMachine<Rational, Rational, Unit, bool>;

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    if (text.empty()) {
        throw UsageError("--" + flag + " is required");
    }
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

Rational parse_eps(const Invocation& inv) {
    Rational eps = parse_rational_flag("eps", inv.eps);
    if (eps.sign() <= 0) {
        throw UsageError("--eps must be positive");
    }
    return eps;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_text(const Json& j) {
    if (j.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += (i ? " " : "") + inline_text(j[i]);
        }
        return out + "]";
    }
    if (j.is_object()) {
        std::string out;
        for (const auto& [k, v] : j.items()) {
            out += (out.empty() ? "" : " ") + k + "=" + inline_text(v);
        }
        return out;
    }
    return scalar_text(j);
}

void render_text(const Json& doc, std::ostream& out, const std::string& indent) {
    for (const auto& [key, value] : doc.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render_text(value, out, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << indent << key << ":\n";
            for (const auto& item : value) {
                out << indent << "  - " << inline_text(item) << "\n";
            }
        } else {
            out << indent << key << ": " << inline_text(value) << "\n";
        }
    }
}

void emit(const Json& doc, Format format, std::ostream& out) {
    if (format == Format::json) {
        out << doc.dump(2) << "\n";
    } else {
        render_text(doc, out, "");
    }
}

RealMachine inverse_stage() { return use_first(inversion_machine()); }

struct Pipeline {
    RealMachine rational;
    std::optional<SignMachine> sign;
};

// Stages run left to right: "invert|invert|sign" inverts twice, then takes
// the sign. "sign" may only appear last.
Pipeline parse_pipeline(const std::string& text) {
    std::vector<std::string> stages;
    std::stringstream ss(text);
    for (std::string stage; std::getline(ss, stage, '|');) {
        stages.push_back(stage);
    }
    if (stages.empty()) {
        throw UsageError("--pipeline must name at least one machine");
    }
    std::optional<RealMachine> rational;
    std::optional<SignMachine> sign;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const auto& stage = stages[i];
        if (stage == "invert") {
            rational = rational ? compose_monotone(inverse_stage(), *rational, Rational(0)) : inverse_stage();
        } else if (stage == "sign" && i + 1 == stages.size()) {
            sign = use_first(sign_machine());
        } else if (stage == "sign") {
            throw UsageError("\"sign\" can only be the last stage of a pipeline");
        } else {
            throw UsageError("unknown machine in pipeline: \"" + stage + "\"");
        }
    }
    if (!rational) {
        // A lone "sign" stage.
        return {inverse_stage(), sign};
    }
    if (sign) {
        sign = compose_monotone(*sign, *rational, Rational(0));
    }
    return {*rational, sign};
}

int run_invert(const Invocation& inv, std::ostream& out) {
    const Rational x = parse_rational_flag("value", inv.value);
    const Rational eps = parse_eps(inv);
    const auto trace = evaluate_traced(inverse_stage().continuous(), exact_name(x), eps, inv.max_effort, inv.schedule);
    Json doc{{"command", "invert"},
             {"value", encode(x)},
             {"eps", encode(eps)},
             {"answer", trace.final ? encode(trace.final->value) : Json(nullptr)},
             {"trace", encode(trace)}};
    emit(doc, inv.format, out);
    return trace.final ? exit_code::ok : exit_code::undecided;
}

int run_sign(const Invocation& inv, std::ostream& out) {
    const Rational x = parse_rational_flag("value", inv.value);
    const auto cm = sign_machine();
    const auto phi = exact_name(x);
    std::vector<std::optional<bool>> prefix;
    for (Effort n = 0; n <= inv.max_effort; ++n) {
        prefix.push_back(cm.machine(phi, n, Unit{}));
    }
    const auto named = kleenean_on_prefix(
        KleeneanName([&prefix](const Natural& k) { return prefix[k]; }), prefix.size());
    Json doc{{"command", "sign"}, {"value", encode(x)}, {"prefix", encode(prefix)}, {"kleenean", encode(named)}};
    emit(doc, inv.format, out);
    return named == Kleenean::bottom ? exit_code::undecided : exit_code::ok;
}

int run_compose(const Invocation& inv, std::ostream& out) {
    const Pipeline pipeline = parse_pipeline(inv.pipeline);
    const Rational x = parse_rational_flag("value", inv.value);
    const auto phi = exact_name(x);
    Json doc{{"command", "compose"}, {"pipeline", inv.pipeline}, {"value", encode(x)}};
    bool answered = false;
    if (pipeline.sign) {
        const auto trace = evaluate_traced(pipeline.sign->continuous(), phi, Unit{}, inv.max_effort, inv.schedule);
        answered = trace.final.has_value();
        doc["answer"] = answered ? encode(trace.final->value) : Json(nullptr);
        doc["trace"] = encode(trace);
    } else {
        const Rational eps = parse_eps(inv);
        doc["eps"] = encode(eps);
        const auto trace = evaluate_traced(pipeline.rational.continuous(), phi, eps, inv.max_effort, inv.schedule);
        answered = trace.final.has_value();
        doc["answer"] = answered ? encode(trace.final->value) : Json(nullptr);
        doc["trace"] = encode(trace);
    }
    emit(doc, inv.format, out);
    return answered ? exit_code::ok : exit_code::undecided;
}

int run_associate_trace(const Invocation& inv, std::ostream& out) {
    const Rational x = parse_rational_flag("value", inv.value);
    const auto phi = exact_name(x);
    Json doc{{"command", "associate-trace"}, {"machine", inv.machine}, {"value", encode(x)}};
    bool answered = false;
    if (inv.machine == "invert") {
        const Rational eps = parse_eps(inv);
        doc["eps"] = encode(eps);
        const auto psi = machine_to_associate(inverse_stage().continuous(), Rational(1), Rational(0));
        const auto transcript = dialogue_trace(psi, phi, eps, inv.max_effort);
        answered = transcript.answered;
        doc["transcript"] = encode(transcript);
    } else if (inv.machine == "sign") {
        const auto psi = machine_to_associate(sign_machine(), Rational(1), Rational(0));
        const auto transcript = dialogue_trace(psi, phi, Unit{}, inv.max_effort);
        answered = transcript.answered;
        doc["transcript"] = encode(transcript);
    } else {
        throw UsageError("--machine must be \"invert\" or \"sign\"");
    }
    emit(doc, inv.format, out);
    return answered ? exit_code::ok : exit_code::undecided;
}

std::vector<RealizerSample<Rational, Rational, Rational>> samples_from(const std::vector<CorpusEntry>& corpus) {
    std::vector<RealizerSample<Rational, Rational, Rational>> out;
    for (const auto& entry : corpus) {
        out.push_back({label(entry), entry.point, name_for(entry)});
    }
    return out;
}

int run_check(const Invocation& inv, std::ostream& out) {
    if (inv.corpus.empty()) {
        throw UsageError("--corpus is required");
    }
    std::ifstream in(inv.corpus);
    if (!in) {
        throw UsageError("cannot open corpus file " + inv.corpus);
    }
    std::vector<CorpusEntry> corpus;
    try {
        corpus = decode_corpus(Json::parse(in));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("corpus is not valid JSON: ") + e.what());
    } catch (const DecodeError& e) {
        throw UsageError(std::string("malformed corpus: ") + e.what());
    }
    const auto samples = samples_from(corpus);
    RealizerReport report;
    if (inv.machine == "invert") {
        std::function<std::optional<Rational>(const Rational&)> reciprocal = [](const Rational& x) {
            return x.is_zero() ? std::optional<Rational>{} : std::optional<Rational>(x.inverse());
        };
        const std::vector<Rational> questions{Rational(1), Rational::power_of_two(-10), Rational::power_of_two(-30)};
        report = check_realizer(inverse_stage().machine(), reciprocal, rational_reals(), rational_reals(), samples,
                                questions, inv.max_effort, inv.schedule);
    } else if (inv.machine == "sign") {
        std::function<std::optional<Kleenean>(const Rational&)> sign = [](const Rational& x) {
            return std::optional<Kleenean>(sign_kleenean(x));
        };
        constexpr Natural prefix = 64;
        std::vector<Natural> questions;
        for (Natural k = 0; k < prefix; ++k) {
            questions.push_back(k);
        }
        report = check_realizer(as_kleenean_name_machine(sign_machine()).machine(), sign, rational_reals(),
                                kleeneans(prefix), samples, questions, inv.max_effort, inv.schedule);
    } else {
        throw UsageError("--machine must be \"invert\" or \"sign\"");
    }
    Json doc = encode(report);
    emit(doc, inv.format, out);
    if (!report.failures.empty()) {
        return exit_code::realizer_failure;
    }
    return report.undecided.empty() ? exit_code::ok : exit_code::undecided;
}

} // namespace

int run(const Invocation& invocation, std::ostream& out) {
    if (invocation.subcommand == "invert") {
        return run_invert(invocation, out);
    }
    if (invocation.subcommand == "sign") {
        return run_sign(invocation, out);
    }
    if (invocation.subcommand == "compose") {
        return run_compose(invocation, out);
    }
    if (invocation.subcommand == "associate-trace") {
        return run_associate_trace(invocation, out);
    }
    if (invocation.subcommand == "check") {
        return run_check(invocation, out);
    }
    throw UsageError("unknown subcommand: " + invocation.subcommand);
}

} // namespace contmach::cli
