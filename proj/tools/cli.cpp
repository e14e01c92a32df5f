#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "picloc/binoid.hpp"
#include "picloc/cech.hpp"
#include "picloc/errors.hpp"
#include "picloc/monomial.hpp"
#include "picloc/picard.hpp"
#include "picloc/report_json.hpp"
#include "picloc/simplicial.hpp"

namespace picloc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options
{
    std::string verb;
    std::string input;
    std::optional<std::string> field;
    std::string box = "-2:2";
    std::string output = "json";
    bool pretty = false;
    bool dump_cech = false;
    unsigned jobs = 1;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err)
{
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("picloc", sink);
    logger->set_pattern("[picloc] [%l] %v");
    logger->set_level(spdlog::level::warn);
    if (const char* level = std::getenv("PICLOC_LOG"))
        logger->set_level(spdlog::level::from_str(level));
    return logger;
}

FieldModel required_field(const Options& o)
{
    if (!o.field)
        throw ParseError("the '" + o.verb + "' command needs --field");
    return parse_field_model(*o.field);
}

void dump_simplicial_cech(const SimplicialComplex& k, spdlog::logger& log, std::ostream& err, bool dump)
{
    if (!dump && !log.should_log(spdlog::level::debug))
        return;
    const std::string text = build_cech_complex(simplicial_unit_model(k)).dump(k.labels());
    if (dump)
        err << text;
    else
        log.debug("Cech complex:\n{}", text);
}

void emit_report(const CohomologyReport& report, const Options& o, std::ostream& out)
{
    if (o.pretty)
        out << report_to_table(report);
    else
        out << report_to_json(report, 2) << '\n';
}

int run_simplicial(const Options& o, bool both, spdlog::logger& log, std::ostream& out, std::ostream& err)
{
    const SimplicialComplex k = read_facet_file(o.input);
    log.info("{} vertices, {} facets, dimension {}", k.vertex_count(), k.facets().size(), k.dim());
    dump_simplicial_cech(k, log, err, o.dump_cech);
    emit_report(both ? crosscheck_simplicial(k) : picloc_simplicial_direct(k), o, out);
    return Success;
}

int run_binoid(const Options& o, spdlog::logger& log, std::ostream& out, std::ostream& err)
{
    const BinoidPresentation p = read_binoid_file(o.input);
    const bool semifree = p.congruences.empty();
    if (!p.infinities.empty() && !semifree)
        throw UnsupportedPresentation("congruences together with infinity relations are not supported");

    if (!p.infinities.empty() || p.congruences.empty())
    {
        auto detected = detect_simplicial(p);
        SimplicialComplex k;
        if (auto* complex = std::get_if<SimplicialComplex>(&detected))
            k = *complex;
        else
        {
            // Semifree but not reduced: the units only see the reduction.
            const std::string reason = std::get<NotSimplicial>(detected).reason;
            if (std::any_of(p.infinities.begin(), p.infinities.end(), [](const ExponentVector& h) {
                    return std::all_of(h.begin(), h.end(), [](const Integer& x) { return x == 0; });
                }))
                throw UnsupportedPresentation("0 = inf makes the binoid trivial");
            log.info("not simplicial ({}); using the reduction", reason);
            k = reduction_complex(MonomialIdeal(p.size(), p.infinities, p.generators));
        }
        log.info("simplicial binoid on {} vertices", k.vertex_count());
        dump_simplicial_cech(k, log, err, o.dump_cech);
        emit_report(crosscheck_simplicial(k), o, out);
        return Success;
    }

    const DifferenceGroup gamma = difference_group(p);
    log.info("difference group of rank {}", gamma.rank);
    if (o.dump_cech || log.should_log(spdlog::level::debug))
    {
        const auto units = unit_generators(gamma);
        std::vector<std::size_t> cover;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!std::binary_search(units.begin(), units.end(), i))
            {
                cover.push_back(i);
                labels.push_back(p.generators[i]);
            }
        const std::string text = build_cech_complex(integral_binoid_model(gamma, cover)).dump(labels);
        if (o.dump_cech)
            err << text;
        else
            log.debug("Cech complex:\n{}", text);
    }
    emit_report(picloc_integral_binoid(p), o, out);
    return Success;
}

int run_stanley_reisner(const Options& o, spdlog::logger& log, std::ostream& out, std::ostream& err)
{
    const FieldModel model = required_field(o);
    const SimplicialComplex k = read_facet_file(o.input);
    log.info("field model {}", model.name());
    dump_simplicial_cech(k, log, err, o.dump_cech);
    emit_report(stanley_reisner_cohomology(k, model), o, out);
    return Success;
}

int run_graph(const Options& o, std::ostream& out)
{
    const SimplicialComplex k = read_facet_file(o.input);
    const GraphCounts counts = graph_fast_path(k);
    std::optional<GraphRankSequence> seq;
    if (k.dim() == 1 && k.connected_components() == 1)
        seq = graph_graded_report(k);

    if (o.pretty)
    {
        out << "s (isolated vertices)  " << counts.isolated << '\n'
            << "r (sum of deg - 1)     " << counts.r << '\n'
            << "H^0 = " << FgAbelianGroup::free(counts.isolated).to_string() << ", H^1 = "
            << FgAbelianGroup::free(counts.r).to_string() << ", higher cohomology vanishes\n";
        if (seq)
            out << "ranks 0 -> Z -> Z^" << seq->edges << " -> Z^" << seq->middle << " -> Z^" << seq->cyclomatic
                << " -> 0, cyclomatic identity " << (seq->identity_holds ? "holds" : "FAILS") << '\n';
        return Success;
    }
    json doc;
    doc["s"] = counts.isolated;
    doc["r"] = counts.r;
    doc["degrees"] = json::array({json{{"j", 0}, {"free_rank", counts.isolated}, {"torsion", json::array()}},
                                  json{{"j", 1}, {"free_rank", counts.r}, {"torsion", json::array()}}});
    if (seq)
        doc["graded"] = json{{"ranks", {seq->units, seq->edges, seq->middle, seq->cyclomatic}},
                             {"cyclomatic_identity", seq->identity_holds}};
    out << doc.dump(2) << '\n';
    return Success;
}

int run_monomial(const Options& o, spdlog::logger& log, std::ostream& out)
{
    const FieldModel model = required_field(o);
    const MonomialIdeal ideal = read_ideal_file(o.input);
    const DegreeBox box = parse_degree_box(o.box, ideal.variable_count());
    log.info("{} minimal generators in {} variables", ideal.generators().size(), ideal.variable_count());
    const NonreducedReport report = nonreduced_report(ideal, model, box);
    if (o.pretty)
        out << nonreduced_to_table(report);
    else
        out << nonreduced_to_json(report, 2) << '\n';
    return Success;
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Local Picard groups and unit-sheaf cohomology of binoids and Stanley-Reisner rings", "picloc"};
    Options o;
    app.add_option("command", o.verb, "simplicial | binoid | stanley-reisner | graph | monomial | crosscheck")
        ->required()
        ->check(CLI::IsMember({"simplicial", "binoid", "stanley-reisner", "graph", "monomial", "crosscheck"}));
    app.add_option("input", o.input, "facet file, binoid presentation or ideal file")->required();
    app.add_option("--field", o.field, "q=<prime power> | Qbar | Cstar | Fpbar=<prime> | R | Q | symbolic");
    app.add_option("--box", o.box, "degree box for monomial: lo:hi or lo:hi,lo:hi,...")->capture_default_str();
    app.add_option("--output", o.output, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}))
        ->capture_default_str();
    app.add_flag("--pretty", o.pretty, "aligned text tables instead of JSON");
    app.add_flag("--dump-cech", o.dump_cech, "write the Cech complex to stderr");
    app.add_option("--jobs", o.jobs, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return Success;
    }
    catch (const CLI::ParseError& e)
    {
        err << "picloc: " << e.what() << '\n';
        return InputFailure;
    }
    o.pretty = o.pretty || o.output == "pretty";

    auto log = make_logger(err);
    if (o.jobs > 1)
        log->info("--jobs {}: computations run on one thread", o.jobs);
    try
    {
        if (o.verb == "simplicial")
            return run_simplicial(o, false, *log, out, err);
        if (o.verb == "crosscheck")
            return run_simplicial(o, true, *log, out, err);
        if (o.verb == "binoid")
            return run_binoid(o, *log, out, err);
        if (o.verb == "stanley-reisner")
            return run_stanley_reisner(o, *log, out, err);
        if (o.verb == "graph")
            return run_graph(o, out);
        return run_monomial(o, *log, out);
    }
    catch (const DomainError& e)
    {
        err << "picloc: " << e.what() << '\n';
        return DomainFailure;
    }
    catch (const ParseError& e)
    {
        err << "picloc: " << e.what() << '\n';
        return InputFailure;
    }
    catch (const std::exception& e)
    {
        err << "picloc: internal error: " << e.what() << '\n';
        return InternalFailure;
    }
}

}   // namespace picloc::cli
