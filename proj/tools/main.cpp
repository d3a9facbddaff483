#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using contmach::cli::Format;
using contmach::cli::Invocation;

void add_common(CLI::App* sub, Invocation& inv) {
    sub->add_option("--max-effort", inv.max_effort, "Largest effort (or prefix index, or dialogue round) to try")
        ->capture_default_str();
    sub->add_option("--schedule", inv.schedule, "Effort schedule: linear or powers_of_two")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, contmach::Schedule>{{"linear", contmach::Schedule::linear},
                                                      {"powers_of_two", contmach::Schedule::powers_of_two}}));
    sub->add_option("--format", inv.format, "Output format: json or text")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous machines: exact real realizers, composition and associate dialogues"};
    app.require_subcommand(1);

    Invocation inv;
    std::string output;
    app.add_option("-o,--output", output, "Write the document to this file instead of stdout");

    auto* invert = app.add_subcommand("invert", "Approximate 1/x to accuracy eps");
    invert->add_option("--value", inv.value, "x as p/q or a decimal literal")->required();
    invert->add_option("--eps", inv.eps, "Accuracy, a positive rational")->required();
    add_common(invert, inv);

    auto* sign = app.add_subcommand("sign", "Print the Kleenean name of sign(x) up to --max-effort");
    sign->add_option("--value", inv.value, "x as p/q or a decimal literal")->required();
    add_common(sign, inv);

    auto* compose = app.add_subcommand("compose", "Evaluate a pipeline of built-in machines, e.g. invert|invert");
    compose->add_option("--pipeline", inv.pipeline, "Stages separated by |: invert, and sign as the last stage")
        ->required();
    compose->add_option("--value", inv.value, "x as p/q or a decimal literal")->required();
    compose->add_option("--eps", inv.eps, "Accuracy for rational-valued pipelines");
    add_common(compose, inv);

    auto* associate = app.add_subcommand("associate-trace", "Print the dialogue of a machine's associate");
    associate->add_option("--machine", inv.machine, "invert or sign")->capture_default_str();
    associate->add_option("--value", inv.value, "x as p/q or a decimal literal")->required();
    associate->add_option("--eps", inv.eps, "Accuracy question for invert");
    add_common(associate, inv);

    auto* check = app.add_subcommand("check", "Check a built-in realizer against a corpus file");
    check->add_option("--corpus", inv.corpus, "JSON array of {\"point\", \"name_kind\"}")->required();
    check->add_option("--machine", inv.machine, "invert or sign")->capture_default_str();
    add_common(check, inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return contmach::cli::exit_code::usage;
    }
    inv.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (output.empty()) {
            return contmach::cli::run(inv, std::cout);
        }
        std::ofstream file(output);
        if (!file) {
            std::cerr << "error: cannot write " << output << "\n";
            return contmach::cli::exit_code::usage;
        }
        return contmach::cli::run(inv, file);
    } catch (const contmach::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return contmach::cli::exit_code::usage;
    }
}
