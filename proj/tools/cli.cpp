#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mpv/core.hpp"
#include "mpv/io.hpp"
#include "mpv/kernel.hpp"
#include "mpv/oracle.hpp"
#include "mpv/reductions.hpp"
#include "mpv/solvers.hpp"

namespace mpv::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Writes to `path`, or to `out` when the path is empty or "-".
void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw DomainError("cannot write '" + path + "'");
    file << text;
}

Instance read_instance(const std::string& path)
{
    auto text = read_file(path);
    try {
        return parse_instance(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line, path + ": " + e.what());
    }
}

// The smallest no-instance, emitted when a kernel decides the input outright.
Instance trivial_no_instance(Variant variant)
{
    return Instance(variant, 1, 1, {{abstain}}, 1, 0, 1);
}

struct Options {
    std::string instance;
    std::string solution;
    std::string algorithm = "auto";
    bool witness = false;
    bool stats = false;
    std::uint64_t budget = default_solver_budget;

    std::string target;
    std::string output;
    std::string map;
    std::string unit_cap;

    std::string reduction;
    std::vector<std::string> inputs;
    std::optional<std::size_t> cover;

    std::size_t agents = 0, candidates = 0, stages = 1, k = 1, ell = 0, x = 1;
    std::string variant = "C";
    double abstain_probability = 0.0;
    std::uint64_t seed = 0;

    std::string directory;
    std::vector<std::string> algorithms{"brute", "layered-k", "inout-ell", "dp-tau"};
};

int do_solve(const Options& o, std::ostream& out, std::ostream& err)
{
    auto text = read_file(o.instance);
    SolveReport report;
    if (is_weighted_text(text)) {
        if (o.algorithm != "auto" && o.algorithm != "brute")
            throw DomainError("weighted instances are solved by exhaustive search only");
        report = solve_weighted(parse_weighted(text), o.budget);
    } else {
        report = solve_with(o.algorithm, read_instance(o.instance), o.budget);
    }
    out << (report.answer ? "YES" : "NO") << '\n';
    if (o.witness && report.witness)
        out << emit_solution(*report.witness);
    if (o.stats)
        err << "algorithm " << report.algorithm << ", states " << report.stats.states << ", "
            << std::fixed << std::setprecision(3) << report.stats.elapsed_ms << " ms\n";
    return report.answer ? exit_yes : exit_no;
}

int do_verify(const Options& o, std::ostream& out)
{
    auto instance = read_instance(o.instance);
    auto seq = parse_solution(read_file(o.solution), instance);
    auto verdict = verify(instance, seq);
    if (verdict.valid()) {
        out << "VALID\n";
        return exit_yes;
    }
    out << "INVALID\n";
    for (const auto& v : verdict.violations)
        out << v.describe() << '\n';
    return exit_no;
}

int do_kernelize(const Options& o, std::ostream& out, std::ostream& err)
{
    auto map_path = o.map;
    if (map_path.empty() && !o.output.empty() && o.output != "-")
        map_path = o.output + ".idmap";
    auto text = read_file(o.instance);

    if (o.target == "mtau") {
        auto weighted = is_weighted_text(text) ? parse_weighted(text) : to_weighted(parse_instance(text));
        auto shrunk = kernel_mtau(weighted);
        if (!o.unit_cap.empty()) {
            if (auto unit = from_weighted(shrunk, BigInt(o.unit_cap))) {
                write_output(o.output, emit_instance(*unit), out);
                return exit_yes;
            }
            err << "stage weights exceed the unit cap; writing the weighted form\n";
        }
        write_output(o.output, emit_weighted(shrunk), out);
        return exit_yes;
    }

    auto instance = read_instance(o.instance);
    if (instance.variant() == Variant::conservative) {
        auto reduced = kernel_ntau_cmpv(instance);
        write_output(o.output, emit_instance(reduced.instance), out);
        if (!map_path.empty())
            write_output(map_path, emit_id_map(reduced.original_ids), out);
        return exit_yes;
    }

    auto kernel = kernel_ntau_rmpv(instance);
    if (kernel.trivial_no) {
        err << "input is trivially a no-instance\n";
        write_output(o.output, emit_instance(trivial_no_instance(instance.variant())), out);
        return exit_yes;
    }
    if (kernel.gap)
        err << "warning: n*tau < m < k*tau after reduction; the k > n rescaling does not apply\n";
    write_output(o.output, emit_instance(kernel.reduced->instance), out);
    if (!map_path.empty())
        write_output(map_path,
                     emit_id_map(kernel.reduced->original_ids, kernel.fillers_per_stage, kernel.spare),
                     out);
    return exit_yes;
}

int do_transform(const Options& o, std::ostream& out)
{
    const auto& r = o.reduction;
    auto single_input = [&]() -> const std::string& {
        if (o.inputs.size() != 1)
            throw DomainError("reduction " + r + " takes exactly one input file");
        return o.inputs.front();
    };

    std::optional<Instance> result;
    if (r == "vc-cmpv") {
        auto graph = parse_graph(read_file(single_input()));
        std::size_t cover = o.cover ? *o.cover : graph.vertices / 2;
        if (!o.cover && graph.vertices % 2 != 0)
            throw DomainError("odd vertex count: pass --cover to pad the graph");
        auto padded = pad_half_vertex_cover(graph, cover);
        auto reduced = vc_to_cmpv(padded.graph);
        if (std::holds_alternative<bool>(reduced)) {
            out << "YES\n";
            return exit_yes;
        }
        result = std::get<Instance>(std::move(reduced));
    } else if (r == "mcc-cmpv") {
        result = mcc_to_cmpv(parse_partitioned_graph(read_file(single_input())));
    } else if (r == "cmpv-rmpv") {
        result = cmpv_to_rmpv(read_instance(single_input()));
    } else if (r == "normalize-half") {
        result = cmpv_normalize_half(read_instance(single_input()));
    } else if (r == "lift-ell1") {
        result = lift_ell1(read_instance(single_input()));
    } else if (r == "lift-ell2km2") {
        result = lift_ell_2km2(read_instance(single_input()));
    } else if (r == "and-cmpv" || r == "and-rmpv") {
        std::vector<Instance> parts;
        for (const auto& path : o.inputs)
            parts.push_back(read_instance(path));
        result = r == "and-cmpv" ? and_compose_cmpv(parts) : and_compose_rmpv(parts);
    } else {
        throw DomainError("unknown reduction '" + r + "'");
    }
    write_output(o.output, emit_instance(*result), out);
    return exit_yes;
}

int do_generate(const Options& o, std::ostream& out)
{
    auto variant = o.variant == "R" ? Variant::revolutionary : Variant::conservative;
    auto instance = random_instance(o.agents, o.candidates, o.stages, o.k, o.ell, o.x, variant,
                                    o.abstain_probability, o.seed);
    write_output(o.output, emit_instance(instance), out);
    return exit_yes;
}

int do_bench(const Options& o, std::ostream& out)
{
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.directory))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    out << "instance,algorithm,answer,states,time_ms\n";
    for (const auto& path : files) {
        auto instance = read_instance(path.string());
        for (const auto& algorithm : o.algorithms) {
            std::string answer;
            SolveReport report;
            try {
                report = solve_with(algorithm, instance, o.budget);
                answer = report.answer ? "yes" : "no";
            } catch (const BudgetExceeded&) {
                answer = "budget";
            } catch (const PreconditionError&) {
                answer = "n/a";
            }
            out << path.filename().string() << ',' << algorithm << ',' << answer << ','
                << report.stats.states << ',' << std::fixed << std::setprecision(3)
                << report.stats.elapsed_ms << '\n';
        }
    }
    return exit_yes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solvers and instance tools for multistage plurality voting", "mpv"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> algorithm_names{"auto", "brute", "layered-k", "inout-ell",
                                                   "dp-tau", "greedy"};

    auto* solve = app.add_subcommand("solve", "Decide an instance; exit 0 = yes, 1 = no");
    solve->add_option("instance", o.instance, "Instance file")->required();
    solve->add_option("-a,--algorithm", o.algorithm, "Solver to run")
        ->check(CLI::IsMember(algorithm_names));
    solve->add_flag("-w,--witness", o.witness, "Print the committee sequence on yes");
    solve->add_flag("--stats", o.stats, "Report algorithm, states and time on stderr");
    solve->add_option("--budget", o.budget, "State budget before giving up (exit 3)");

    auto* check = app.add_subcommand("verify", "Check a solution; exit 0 = valid, 1 = invalid");
    check->add_option("instance", o.instance, "Instance file")->required();
    check->add_option("solution", o.solution, "Solution file")->required();

    auto* kernelize = app.add_subcommand("kernelize", "Write a reduced equivalent instance");
    kernelize->add_option("instance", o.instance, "Instance file")->required();
    kernelize->add_option("-t,--target", o.target, "ntau (candidate deletion) or mtau (weights)")
        ->required()
        ->check(CLI::IsMember({"ntau", "mtau"}));
    kernelize->add_option("-o,--output", o.output, "Output file (default stdout)");
    kernelize->add_option("--map", o.map, "Id-mapping sidecar (default <output>.idmap)");
    kernelize->add_option("--unit-cap", o.unit_cap,
                          "mtau: emit unit agents when every stage weighs at most this much");

    auto* transform = app.add_subcommand("transform", "Apply a reduction or composition");
    transform->add_option("-r,--reduction", o.reduction, "Reduction to apply")
        ->required()
        ->check(CLI::IsMember({"vc-cmpv", "cmpv-rmpv", "normalize-half", "mcc-cmpv", "lift-ell1",
                               "lift-ell2km2", "and-cmpv", "and-rmpv"}));
    transform->add_option("inputs", o.inputs, "Input graph or instance files")->required();
    transform->add_option("--cover", o.cover, "vc-cmpv: vertex cover size (default |V|/2)");
    transform->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
    generate->add_option("--agents", o.agents, "Agents n")->required();
    generate->add_option("--candidates", o.candidates, "Candidates m")->required();
    generate->add_option("--stages", o.stages, "Stages tau")->required();
    generate->add_option("--k", o.k, "Committee size bound");
    generate->add_option("--ell", o.ell, "Symmetric-difference bound");
    generate->add_option("--x", o.x, "Score threshold");
    generate->add_option("--variant", o.variant, "C or R")->check(CLI::IsMember({"C", "R"}));
    generate->add_option("--abstain", o.abstain_probability, "Abstention probability")
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", o.seed, "Seed for std::mt19937_64");
    generate->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Run solvers over a directory, CSV on stdout");
    bench->add_option("directory", o.directory, "Directory of instance files")
        ->required()
        ->check(CLI::ExistingDirectory);
    bench->add_option("--algorithms", o.algorithms, "Solvers to run")
        ->delimiter(',')
        ->check(CLI::IsMember(algorithm_names));
    bench->add_option("--budget", o.budget, "State budget per run");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands())
            target = sub;
        out << target->help();
        return exit_yes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_error;
    }

    try {
        if (solve->parsed())
            return do_solve(o, out, err);
        if (check->parsed())
            return do_verify(o, out);
        if (kernelize->parsed())
            return do_kernelize(o, out, err);
        if (transform->parsed())
            return do_transform(o, out);
        if (generate->parsed())
            return do_generate(o, out);
        if (bench->parsed())
            return do_bench(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

}  // namespace mpv::cli
