// lefdet: determinants of multiplication maps on K[x,y]/<x^{d+1}, y^{q+1}>,
// their Schur-polynomial closed forms, and brute-force cross-checks.

#include "lefdet/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

using lefdet::cli::Command;
using lefdet::cli::OutputFormat;
using lefdet::cli::RunConfig;

void add_output(CLI::App* sub, RunConfig& cfg)
{
    static const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};
    sub->add_option("--output", cfg.output, "output format")
        ->transform(CLI::CheckedTransformer(formats).description(""))
        ->option_text("json|csv|text");
}

void add_ring(CLI::App* sub, RunConfig& cfg, bool required)
{
    auto* d = sub->add_option("--d", cfg.d, "x-exponent bound (x^{d+1} = 0)");
    auto* q = sub->add_option("--q", cfg.q, "y-exponent bound (y^{q+1} = 0)");
    if (required) {
        d->required();
        q->required();
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Determinants of multiplication maps of K[x,y]/<x^{d+1},y^{q+1}> and their Schur closed forms"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* det = app.add_subcommand("det", "determinant of x(l_1...l_{d+q-2k}) : R_k -> R_{d+q-k}");
    add_ring(det, cfg, true);
    det->add_option("--k", cfg.k, "source degree")->required();
    det->add_option("--forms", cfg.forms_text, "forms as 'a,b;a,b;...'");
    det->add_option("--u", cfg.u, "size of the first group for --method expansion (default: all forms)");
    det->add_option("--method", cfg.method, "direct, expansion or corollary")
        ->check(CLI::IsMember({"direct", "expansion", "corollary"}));
    det->add_flag("--symbolic", cfg.symbolic, "use indeterminates a_t, b_t instead of --forms");
    add_output(det, cfg);

    auto* report = app.add_subcommand("report", "direct vs expansion vs corollary vs literal case statements");
    add_ring(report, cfg, true);
    report->add_option("--k", cfg.k, "source degree")->required();
    report->add_option("--u", cfg.u, "size of the first group (default: all forms)");
    report->add_option("--forms", cfg.forms_text, "forms as 'a,b;a,b;...'");
    report->add_flag("--symbolic", cfg.symbolic, "use indeterminates a_t, b_t instead of --forms");
    add_output(report, cfg);

    CLI::App* sweeps[2] = {app.add_subcommand("verify", "seeded sweep; exit 1 on any closed-form mismatch"),
                           app.add_subcommand("sweep", "seeded sweep emitted row by row (CSV unless --output json)")};
    for (auto* sub : sweeps) {
        auto* d = sub->add_option("--d", cfg.d, "restrict to this d");
        auto* q = sub->add_option("--q", cfg.q, "restrict to this q");
        auto* k = sub->add_option("--k", cfg.k, "restrict to this k");
        sub->add_option("--u", cfg.u, "restrict to this split size");
        sub->add_option("--dmax", cfg.dmax, "largest d when sweeping all (d, q) with d >= q >= 1");
        sub->add_option("--smax", cfg.smax, "optional bound on d + q");
        sub->add_option("--trials", cfg.trials, "random form lists per cell")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "base seed");
        sub->add_flag("--allow-zero", cfg.allow_zero, "allow zero coordinates in random forms");
        sub->add_option("--threads", cfg.threads, "worker count (default: LEFDET_THREADS or all cores)");
        add_output(sub, cfg);
        sub->callback([&cfg, d, q, k] {
            cfg.has_d = d->count() > 0;
            cfg.has_q = q->count() > 0;
            cfg.has_k = k->count() > 0;
        });
    }
    sweeps[1]->preparse_callback([&cfg](std::size_t) { cfg.output = OutputFormat::csv; });

    auto* slp = app.add_subcommand("slp", "strong Lefschetz check for a single form");
    add_ring(slp, cfg, true);
    slp->add_option("--forms", cfg.forms_text, "one form 'a,b'")->required();
    add_output(slp, cfg);

    auto* schur = app.add_subcommand("schur", "Schur polynomial by three evaluators");
    schur->add_option("--partition", cfg.partition_text, "partition like [2,1]")->required();
    schur->add_option("--values", cfg.values_text, "point like 2,1/3");
    add_output(schur, cfg);

    auto* duality = app.add_subcommand("duality", "beta^r s_(r^m)(a/b) = alpha^r s_(r^m)(b/a), or the rectangle "
                                                  "complement identity when --partition is given");
    duality->add_option("--r", cfg.r, "rectangle width")->required();
    duality->add_option("--m", cfg.m, "rectangle height (|a| = |b| = 2m)");
    duality->add_option("--a", cfg.a_text, "values a (or x)")->required();
    duality->add_option("--b", cfg.b_text, "values b (or y)")->required();
    duality->add_option("--partition", cfg.partition_text, "lambda inside (r^n), n = |a|");
    add_output(duality, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << lefdet::cli::error_document(e.what()).dump() << "\n";
        return 2;
    }

    static const std::map<CLI::App*, Command> commands{
        {det, Command::det},          {report, Command::report}, {sweeps[0], Command::verify},
        {sweeps[1], Command::sweep},  {slp, Command::slp},       {schur, Command::schur},
        {duality, Command::duality}};
    cfg.command = commands.at(app.get_subcommands().front());

    auto result = lefdet::cli::run(cfg);
    std::cout << result.output;
    return result.exit_code;
}
