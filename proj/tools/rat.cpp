// Command-line front end: parses flags into a CommandRequest and hands it to cli::run.

#include <iostream>

#include <CLI11.hpp>

#include "rat/cli.hpp"

namespace {

using rat::cli::CommandRequest;

void add_word(CLI::App* sub, CommandRequest& req) {
    sub->add_option("word", req.word, "state word over D, A, E")->required();
}

void add_tiling(CLI::App* sub, CommandRequest& req) {
    sub->add_option("--tiling", req.tiling, "tiling to use")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, rat::cli::TilingChoice>{{"min", rat::cli::TilingChoice::Minimal},
                                                           {"max", rat::cli::TilingChoice::Maximal}},
            CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rhombic alternative tableaux and the two-species PASEP"};
    app.require_subcommand(1);
    CommandRequest req;

    app.add_option("--format", req.output, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, rat::cli::OutputFormat>{{"text", rat::cli::OutputFormat::Text},
                                                           {"json", rat::cli::OutputFormat::Json}},
            CLI::ignore_case));
    app.add_option("--max-area", req.max_area, "largest diagram area to enumerate (overrides RAT_MAX_AREA)");

    auto* weight = app.add_subcommand("weight", "weight of a word");
    add_word(weight, req);
    add_tiling(weight, req);

    auto* fillings = app.add_subcommand("fillings", "list fillings with their weights");
    add_word(fillings, req);
    add_tiling(fillings, req);

    auto* tilings = app.add_subcommand("tilings", "list tilings with heights and flip distances");
    add_word(tilings, req);

    auto* stationary = app.add_subcommand("stationary", "exact stationary distribution against tableau weights");
    stationary->add_option("n", req.n)->required();
    stationary->add_option("r", req.r)->required();
    stationary->add_option("alpha", req.alpha)->required();
    stationary->add_option("beta", req.beta)->required();
    stationary->add_option("q", req.q)->required();

    auto* verify = app.add_subcommand("verify", "run property suites (all when none is selected)");
    verify->add_option("--max-n", req.max_n, "largest word length");
    for (const char* name : {"ansatz", "tiling-independence", "bijection", "closed-forms", "main-theorem", "fillings"}) {
        verify->add_flag_callback(std::string("--") + name, [&req, name] { req.suites.emplace_back(name); });
    }

    auto* count = app.add_subcommand("count", "closed-form counts");
    auto* kinds = count->add_option_group("kind");
    kinds->add_flag_callback("--mct", [&req] { req.count = rat::cli::CountKind::Mct; }, "n r [k]: multi-Catalan tableaux");
    kinds->add_flag_callback("--classes", [&req] { req.count = rat::cli::CountKind::Classes; }, "n r: fillings at a=b=q=1");
    kinds->add_flag_callback("--macmahon", [&req] { req.count = rat::cli::CountKind::Macmahon; }, "a b c: box plane partitions");
    kinds->require_option(1);
    count->add_option("values", req.count_args)->required();

    auto* render = app.add_subcommand("render", "SVG drawing of a diagram and optional filling");
    add_word(render, req);
    add_tiling(render, req);
    render->add_option("--filling", req.filling_index, "filling index as listed by 'fillings'");
    render->add_option("-o,--output", req.out_file, "SVG file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    req.subcommand = app.get_subcommands().front()->get_name();
    return rat::cli::run(req, std::cout, std::cerr);
}
