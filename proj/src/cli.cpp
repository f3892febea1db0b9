#include "bullcol/cli.hpp"

#include "bullcol/certificate.hpp"
#include "bullcol/errors.hpp"
#include "bullcol/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace bullcol {

namespace {

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

GraphFormat guess_format(const std::string& path, std::optional<GraphFormat> given) {
    if (given)
        return *given;
    auto ends = [&](std::string_view ext) {
        return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
    };
    return ends(".col") || ends(".dimacs") ? GraphFormat::dimacs : GraphFormat::edgelist;
}

Graph load_graph(const std::string& path, std::optional<GraphFormat> format) {
    return parse_graph(read_text(path), guess_format(path, format));
}

int exit_code(Decision d) {
    switch (d) {
    case Decision::three_colourable:
        return kExitColourable;
    case Decision::not_three_colourable:
        return kExitNotColourable;
    case Decision::not_in_class:
        return kExitNotInClass;
    }
    return kExitInternalError;
}

} // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    try {
        Graph g = load_graph(args.input, args.format);
        SolveOptions opts;
        opts.validate_class = args.validate_class;
        Certificate cert = solve(g, args.mode, opts);
        if (!args.out.empty())
            write_text(args.out, certificate_to_json(g, cert));
        out << decision_name(cert.decision) << ' ' << g.order() << ' ' << g.size() << ' '
            << class_mode_name(args.mode) << ' ' << cert.payload_kind() << '\n';
        return exit_code(cert.decision);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    }
}

int cmd_verify(const std::string& input, const std::string& certificate, std::optional<GraphFormat> format,
               std::ostream& out, std::ostream& err) {
    Graph g;
    Certificate cert;
    try {
        g = load_graph(input, format);
        cert = certificate_from_json(g, read_text(certificate));
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    }
    VerifyReport rep = check_certificate(g, cert);
    if (rep.ok) {
        out << "ok " << decision_name(cert.decision) << ' ' << cert.payload_kind() << '\n';
        return 0;
    }
    out << "rejected: " << rep.reason << '\n';
    return kExitVerifyFailed;
}

int cmd_oracle(const std::string& input, std::optional<GraphFormat> format, int cap, std::ostream& out,
               std::ostream& err) {
    try {
        Graph g = load_graph(input, format);
        if (auto col = oracle_3colourable(g, cap)) {
            out << "3-colourable";
            for (Vertex v = 0; v < g.order(); ++v)
                out << ' ' << g.label(v) << ':' << (*col)[v];
            out << '\n';
            return kExitColourable;
        }
        out << "not 3-colourable\n";
        return kExitNotColourable;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << '\n';
    }
    return kExitInputError;
}

int cmd_gen(const GenerateRequest& req, GraphFormat format, const std::string& path, std::ostream& out,
            std::ostream& err) {
    try {
        Graph g = generate(req);
        write_text(path, serialize_graph(g, format));
        if (path != "-")
            out << "wrote " << g.order() << " vertices, " << g.size() << " edges to " << path << '\n';
        return 0;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << '\n';
    }
    return kExitInputError;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"3-colourability with certificates for bull-free graph classes"};
    app.require_subcommand(1);

    const std::map<std::string, ClassMode> modes{{"bull-chair", ClassMode::bull_chair},
                                                 {"bull-e", ClassMode::bull_e},
                                                 {"bull-c5-s113", ClassMode::bull_c5_s113},
                                                 {"bull-c5-s123", ClassMode::bull_c5_s123}};
    const std::map<std::string, GraphFormat> formats{{"dimacs", GraphFormat::dimacs},
                                                     {"edgelist", GraphFormat::edgelist}};

    std::optional<GraphFormat> format;
    std::string format_name;
    int cap = kDefaultOracleCap;
    std::uint64_t seed = 1;
    int code = kExitInputError;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "graph file format")
            ->check(CLI::IsMember({"dimacs", "edgelist"}));
    };
    auto resolved_format = [&]() -> std::optional<GraphFormat> {
        if (format_name.empty())
            return format;
        return formats.at(format_name);
    };

    SolveArgs sargs;
    std::string class_name = "bull-e", validate = "on";
    auto* solve_cmd = app.add_subcommand("solve", "decide 3-colourability and write a certificate");
    solve_cmd->add_option("input", sargs.input, "graph file, - for stdin")->required();
    solve_cmd->add_option("--class", class_name, "graph class")->check(CLI::IsMember({"bull-chair", "bull-e",
                                                                                      "bull-c5-s113", "bull-c5-s123"}));
    add_format(solve_cmd);
    solve_cmd->add_option("--out", sargs.out, "certificate output path");
    solve_cmd->add_option("--validate-class", validate, "scan for the class patterns first")
        ->check(CLI::IsMember({"on", "off"}));
    solve_cmd->add_option("--seed", seed, "unused by solve; accepted for scripts");
    solve_cmd->add_option("--cap", cap, "unused by solve; accepted for scripts");
    solve_cmd->callback([&] {
        sargs.mode = modes.at(class_name);
        sargs.format = resolved_format();
        sargs.validate_class = validate == "on";
        code = cmd_solve(sargs, std::cout, std::cerr);
    });

    std::string vinput, vcert;
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    verify_cmd->add_option("input", vinput, "graph file")->required();
    verify_cmd->add_option("certificate", vcert, "certificate file")->required();
    add_format(verify_cmd);
    verify_cmd->callback([&] { code = cmd_verify(vinput, vcert, resolved_format(), std::cout, std::cerr); });

    std::string oinput;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force 3-colourability");
    oracle_cmd->add_option("input", oinput, "graph file")->required();
    add_format(oracle_cmd);
    oracle_cmd->add_option("--cap", cap, "largest graph the oracle accepts");
    oracle_cmd->callback([&] { code = cmd_oracle(oinput, resolved_format(), cap, std::cout, std::cerr); });

    GenerateRequest req;
    std::string gen_out = "-", gen_class = "bull-e";
    auto* gen_cmd = app.add_subcommand("gen", "write a generated graph");
    gen_cmd->add_option("kind", req.kind,
                        "cycle, wheel, spindle, complement_cycle, random_class or grown_class")
        ->required();
    gen_cmd->add_option("size", req.size, "p for named graphs, n for random ones")->required();
    gen_cmd->add_option("--prob", req.prob, "edge probability for random_class");
    gen_cmd->add_option("--class", gen_class, "class for random generators")
        ->check(CLI::IsMember({"bull-chair", "bull-e", "bull-c5-s113", "bull-c5-s123"}));
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "output path, - for stdout");
    add_format(gen_cmd);
    gen_cmd->callback([&] {
        req.mode = modes.at(gen_class);
        req.seed = seed;
        code = cmd_gen(req, resolved_format().value_or(GraphFormat::edgelist), gen_out, std::cout, std::cerr);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }
    return code;
}

} // namespace bullcol
