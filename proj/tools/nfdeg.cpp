// Command line front end: generate instance documents, verify the degree
// identity on them, run the randomized property suite, and inspect files.
//
// Exit codes: 0 success (and identity holds), 1 the identity or a suite
// check failed, 2 invalid input or parameters, 3 file system trouble.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <nfdeg/nfdeg.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_unequal = 1;
constexpr int exit_invalid = 2;
constexpr int exit_io = 3;

struct GenOptions {
    int genus = 1;
    int half_length = 3;
    std::uint64_t seed = 1;
    std::string ring = "int";
    int cocycles = 2;
    std::string builtin;
    std::string out;
};

struct VerifyOptions {
    std::string path;
    int first = 0;
    int second = 1;
    int mesh = 8;
    std::string out;
};

struct SuiteOptions {
    int trials = 32;
    std::uint64_t seed = 2026;
    int jobs = 0;
};

struct InspectOptions {
    std::string path;
};

void emit(const std::string& out_path, const std::string& bytes) {
    if (out_path.empty())
        std::cout << bytes;
    else
        nfdeg::write_file(out_path, bytes);
}

nfdeg::Ring parse_ring(const std::string& name) {
    if (name == "int") return nfdeg::Ring::integers;
    if (name == "rat") return nfdeg::Ring::rationals;
    throw nfdeg::parse_error("ring must be \"int\" or \"rat\"");
}

int cmd_gen(const GenOptions& opt) {
    nfdeg::InstanceDoc doc;
    const nfdeg::Ring ring = parse_ring(opt.ring);
    if (!opt.builtin.empty()) {
        if (opt.builtin != "elliptic12")
            throw nfdeg::parse_error("unknown builtin \"" + opt.builtin + "\"");
        nfdeg::PencilRef p = nfdeg::builtin_elliptic12();
        doc = nfdeg::doc_from_pencil(*p);
        doc.label = "elliptic12";
        for (const auto& [c, pd] : nfdeg::builtin_elliptic12_pair(p))
            doc.cocycles.push_back(nfdeg::entry_from_cocycle(c, pd));
    } else {
        if (opt.genus < 1) throw nfdeg::parse_error("--genus must be at least 1");
        if (opt.half_length < 1) throw nfdeg::parse_error("--half-length must be at least 1");
        if (opt.cocycles < 0) throw nfdeg::parse_error("--cocycles must be nonnegative");
        nfdeg::PencilRef p = nfdeg::random_instance(opt.genus, opt.half_length,
                                                    nfdeg::derive_seed(opt.seed, 0));
        doc = nfdeg::doc_from_pencil(*p);
        doc.seed = std::to_string(opt.seed);
        doc.label = "random-g" + std::to_string(opt.genus) + "-k" +
                    std::to_string(opt.half_length);
        nfdeg::Rng rng(nfdeg::derive_seed(opt.seed, 1));
        for (const auto& [c, pd] : nfdeg::random_parabolic_cocycles(p, opt.cocycles, rng))
            doc.cocycles.push_back(nfdeg::entry_from_cocycle(c, pd));
    }
    if (ring == nfdeg::Ring::rationals)
        for (auto& entry : doc.cocycles) entry.ring = nfdeg::Ring::rationals;
    emit(opt.out, nfdeg::canonical_bytes(nfdeg::to_json(doc)));
    return exit_ok;
}

int cmd_verify(const VerifyOptions& opt) {
    const nfdeg::InstanceDoc doc =
        nfdeg::instance_from_json(nfdeg::parse_json(nfdeg::read_file(opt.path)));
    const int count = static_cast<int>(doc.cocycles.size());
    if (opt.first < 0 || opt.first >= count || opt.second < 0 || opt.second >= count)
        throw nfdeg::index_error("cocycle pair out of range: document has " +
                                 std::to_string(count) + " cocycles");
    if (opt.mesh < 1) throw nfdeg::parse_error("--mesh must be at least 1");

    nfdeg::PencilRef p = nfdeg::pencil_from_doc(doc);
    auto load = [&](int idx) {
        const nfdeg::CocycleEntry& e = doc.cocycles[static_cast<std::size_t>(idx)];
        nfdeg::TwistedCocycle c = nfdeg::cocycle_from_entry(p, e);
        std::optional<nfdeg::ParabolicData> pd = nfdeg::potentials_from_entry(e);
        if (!pd) pd = nfdeg::parabolic_potentials(c, e.ring);
        if (!pd)
            throw nfdeg::parabolicity_error("cocycle " + std::to_string(idx) +
                                            " is not parabolic");
        return std::make_pair(std::move(c), std::move(*pd));
    };
    auto [c1, a1] = load(opt.first);
    auto [c2, a2] = load(opt.second);

    const nfdeg::TheoremReport report = nfdeg::verify_theorem(p, c1, a1, c2, a2, opt.mesh);

    nfdeg::ReportDescriptor desc;
    desc.instance_hash = nfdeg::hash_instance(doc);
    desc.pencil_hash = nfdeg::hash_pencil(doc);
    desc.cocycle_hashes = {
        nfdeg::hash_cocycle(doc.cocycles[static_cast<std::size_t>(opt.first)]),
        nfdeg::hash_cocycle(doc.cocycles[static_cast<std::size_t>(opt.second)])};
    desc.pair = {opt.first, opt.second};
    desc.seed = doc.seed;

    std::cout << "instance " << desc.instance_hash << " (genus " << doc.genus << ", "
              << doc.punctures << " punctures, pair " << opt.first << "," << opt.second
              << ")\n";
    std::cout << "lhs = " << nfdeg::to_string(report.lhs)
              << "  rhs = " << nfdeg::to_string(report.rhs) << "  sigma = " << report.sigma
              << "\n";
    std::cout << "quadrature mesh " << report.mesh << ": value " << report.quadrature_value
              << ", abs error " << report.quadrature_abs_error << "\n";
    std::cout << "timing: lhs " << report.lhs_microseconds << "us, rhs "
              << report.rhs_microseconds << "us\n";
    std::cout << (report.equal ? "EQUAL" : "NOT EQUAL") << "\n";

    if (!opt.out.empty())
        nfdeg::write_file(opt.out, nfdeg::canonical_bytes(nfdeg::report_to_json(report, desc)));
    return report.equal ? exit_ok : exit_unequal;
}

int cmd_suite(const SuiteOptions& opt) {
    if (opt.trials < 1) throw nfdeg::parse_error("--trials must be at least 1");
    const nfdeg::SuiteSummary summary = nfdeg::run_suite(opt.trials, opt.seed, opt.jobs);
    for (const nfdeg::TrialResult& r : summary.results) {
        if (r.passed()) continue;
        std::cout << "trial " << r.index << " FAILED [" << r.failed_checks() << "] seed "
                  << r.seed << " genus " << r.genus << " punctures " << r.punctures
                  << " lhs " << nfdeg::to_string(r.lhs) << " rhs " << nfdeg::to_string(r.rhs)
                  << "\n";
    }
    std::cout << "suite: " << summary.passed << "/" << summary.trials
              << " trials passed (seed " << summary.base_seed << ")\n";
    std::cout << "timing per trial: p50 " << summary.p50_microseconds << "us, p90 "
              << summary.p90_microseconds << "us, max " << summary.max_microseconds << "us\n";
    return summary.all_passed() ? exit_ok : exit_unequal;
}

int cmd_inspect(const InspectOptions& opt) {
    const nfdeg::InstanceDoc doc =
        nfdeg::instance_from_json(nfdeg::parse_json(nfdeg::read_file(opt.path)));
    nfdeg::PencilRef p = nfdeg::pencil_from_doc(doc);
    std::cout << "instance " << nfdeg::hash_instance(doc) << "\n";
    std::cout << "pencil " << nfdeg::hash_pencil(doc) << ": genus " << doc.genus << ", "
              << doc.punctures << " punctures, lefschetz "
              << (p->lefschetz ? "true" : "false") << "\n";
    if (doc.label) std::cout << "label: " << *doc.label << "\n";
    if (doc.seed) std::cout << "seed: " << *doc.seed << "\n";
    std::cout << "cocycle space dimension: " << nfdeg::cocycle_basis(p, nfdeg::Ring::rationals).size()
              << "\n";
    for (std::size_t k = 0; k < doc.cocycles.size(); ++k) {
        const nfdeg::CocycleEntry& e = doc.cocycles[k];
        nfdeg::TwistedCocycle c = nfdeg::cocycle_from_entry(p, e);
        std::string parabolic;
        if (auto pd = nfdeg::potentials_from_entry(e))
            parabolic = nfdeg::validate_potentials(c, *pd) ? "certified" : "INVALID CERTIFICATE";
        else
            parabolic = nfdeg::parabolic_potentials(c, e.ring) ? "parabolic" : "not parabolic";
        std::cout << "cocycle " << k << " " << nfdeg::hash_cocycle(e) << ": ring "
                  << nfdeg::ring_name(e.ring) << ", " << parabolic
                  << (nfdeg::is_coboundary(c) ? ", coboundary" : "") << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the cup-pairing / section-degree identity"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("nfdeg ") + nfdeg::version_string + " (" +
                                          nfdeg::conventions_tag + ")");

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance document");
    gen_cmd->add_option("--genus", gen.genus, "surface genus");
    gen_cmd->add_option("--half-length", gen.half_length, "half the puncture count");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--ring", gen.ring, "coefficient ring: int or rat");
    gen_cmd->add_option("--cocycles", gen.cocycles, "number of parabolic cocycles to draw");
    gen_cmd->add_option("--builtin", gen.builtin, "emit a builtin model instead (elliptic12)");
    gen_cmd->add_option("--out", gen.out, "output path (default: stdout)");

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check the identity on an instance");
    verify_cmd->add_option("instance", verify.path, "instance document path")->required();
    verify_cmd->add_option("--first", verify.first, "index of the first cocycle");
    verify_cmd->add_option("--second", verify.second, "index of the second cocycle");
    verify_cmd->add_option("--mesh", verify.mesh, "quadrature mesh per triangle edge");
    verify_cmd->add_option("--out", verify.out, "write a report document here");

    SuiteOptions suite;
    CLI::App* suite_cmd = app.add_subcommand("suite", "run the randomized property battery");
    suite_cmd->add_option("--trials", suite.trials, "number of trials");
    suite_cmd->add_option("--seed", suite.seed, "base seed");
    suite_cmd->add_option("--jobs", suite.jobs, "worker threads (0: all cores)");

    InspectOptions inspect;
    CLI::App* inspect_cmd = app.add_subcommand("inspect", "describe an instance document");
    inspect_cmd->add_option("instance", inspect.path, "instance document path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (verify_cmd->parsed()) return cmd_verify(verify);
        if (suite_cmd->parsed()) return cmd_suite(suite);
        if (inspect_cmd->parsed()) return cmd_inspect(inspect);
    } catch (const nfdeg::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const nfdeg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
