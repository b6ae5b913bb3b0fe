#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "omcert/cli.hpp"

using omcert::cli::Command;
using omcert::cli::Family;
using omcert::cli::Format;
using omcert::cli::RunConfig;

namespace {

struct Subcommand {
    const char* name;
    const char* help;
    Command command;
};

void add_common(CLI::App& sub, RunConfig& config, std::string& format)
{
    sub.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub.add_option("-o,--output", config.output_path, "Write the report to this file instead of stdout");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Oriented-matroid strong-map certificates"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "json";
    std::string family = "alternating";
    std::optional<int> rank;

    const Subcommand subcommands[] = {
        {"topes", "List the canonical topes of an instance", Command::topes},
        {"axioms", "Check the covector and uniform-tope axioms of an instance", Command::axioms},
        {"strongmap", "Check alternating(n,rank) -> m2(n) by tope inclusion and covector containment", Command::strongmap},
        {"lemma6", "Run the six-element exhaustive search and verify the forced circuits", Command::lemma6},
        {"verify-n8", "Build the eight-element contradiction certificate", Command::verify_n8},
        {"all", "Axiom sanity checks plus the full contradiction certificate", Command::all},
        {"validate", "Re-check a saved certificate without re-running the search", Command::validate},
        {"direct-search", "Independent backtracking search on eight elements (slow)", Command::direct_search},
    };

    std::map<const CLI::App*, Command> commands;
    for (const auto& s : subcommands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        commands[sub] = s.command;
        add_common(*sub, config, format);
        switch (s.command) {
        case Command::topes:
        case Command::axioms:
            sub->add_option("--family", family, "Instance family")->check(CLI::IsMember({"alternating", "m2"}));
            sub->add_option("--n", config.n, "Ground set size");
            sub->add_option("--rank", rank, "Rank (alternating family; m2 is rank 2)");
            break;
        case Command::strongmap:
            sub->add_option("--n", config.n, "Ground set size (even)");
            sub->add_option("--rank", rank, "Rank of the alternating source");
            break;
        case Command::lemma6:
        case Command::verify_n8:
        case Command::all:
            sub->add_option("--threads", config.threads, "Worker threads for the search")->check(CLI::PositiveNumber);
            break;
        case Command::validate:
            sub->add_option("certificate", config.input_path, "Certificate JSON file")->required();
            break;
        case Command::direct_search:
            sub->add_option("--budget", config.budget, "Search node limit")->check(CLI::PositiveNumber);
            break;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "omcert: " << e.what() << "\n" << app.help();
        return omcert::cli::kExitUsage;
    }

    for (const CLI::App* sub : app.get_subcommands()) config.command = commands.at(sub);
    config.format = format == "text" ? Format::text : Format::json;
    config.family = family == "m2" ? Family::m2 : Family::alternating;
    if (config.family == Family::m2) {
        if (rank && *rank != 2) {
            std::cerr << "omcert: the m2 family has rank 2\n";
            return omcert::cli::kExitUsage;
        }
        config.rank = 2;
    } else if (rank) {
        config.rank = *rank;
    }
    if (config.command == Command::validate && config.format == Format::json) config.format = Format::text;
    return omcert::cli::run(config);
}
