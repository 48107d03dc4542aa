#include "fk3/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fk3/census.hpp"
#include "fk3/hodge.hpp"
#include "fk3/io.hpp"
#include "fk3/quasismooth.hpp"

namespace fk3 {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitPredicate = 1;
constexpr int kExitCrossCheck = 2;
constexpr int kExitUsage = 3;

/// A self-check of the artifact failed; distinct from inputs that merely fail
/// the mathematics.
struct CrossCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file " + out_path);
    file << payload;
    file.close();
    if (!file)
        throw std::runtime_error("failed writing output file " + out_path);
}

// Gorenstein symmetry of the Jacobian ring: with sum(d - a_i) - sum(a_i) = 2d
// (both census regimes), coefficients are symmetric about degree d.
void verify_palindrome(const WeightSystem& ws) {
    const Int d = ws.degree();
    const TruncatedSeries series = jacobian_hilbert_series(ws, 2 * d);
    for (Int m = 0; m <= d; ++m)
        if (series.coeff(m) != series.coeff(2 * d - m))
            throw CrossCheckError("series coefficients not symmetric about d for " +
                                  to_string(ws));
}

void verify_sorted_unique(const std::vector<WeightSystem>& list, const std::string& what) {
    for (std::size_t i = 1; i < list.size(); ++i)
        if (!(list[i - 1] < list[i]))
            throw CrossCheckError(what + " is not strictly sorted at row " + std::to_string(i));
}

void verify_k3_census(const std::vector<WeightSystem>& k3s) {
    verify_sorted_unique(k3s, "the K3 catalog");
    for (const auto& ws : k3s)
        verify_palindrome(ws);
}

void verify_fourfold_census(const std::vector<FamilyRecord>& records, int jobs) {
    std::vector<WeightSystem> census;
    census.reserve(records.size());
    for (const auto& rec : records)
        census.push_back(rec.ws);
    verify_sorted_unique(census, "the fourfold catalog");

    const std::vector<WeightSystem> k3s = enumerate_k3_surfaces();
    const Int d_max = k3s.back().degree();
    const std::vector<WeightSystem> brute = brute_force_census(d_max, jobs);
    if (brute != census)
        throw CrossCheckError("brute-force sweep disagrees with the constructed census (" +
                              std::to_string(brute.size()) + " vs " +
                              std::to_string(census.size()) + " families)");

    for (const auto& rec : records) {
        if (rec.ws.weight(5) > 1) {
            if (!rec.association)
                throw CrossCheckError("family without K3 association: " + to_string(rec.ws));
            if (!std::binary_search(k3s.begin(), k3s.end(), rec.association->k3))
                throw CrossCheckError("associated K3 not in the surface census for " +
                                      to_string(rec.ws));
            if (!hodge_correspondence_holds(rec.ws, rec.association->index))
                throw CrossCheckError("Hodge correspondence fails for " + to_string(rec.ws));
        }
        verify_palindrome(rec.ws);
    }
}

void verify_brute_against_census(const std::vector<WeightSystem>& brute, Int d_max, int jobs) {
    verify_sorted_unique(brute, "the sweep output");
    std::vector<WeightSystem> expected;
    for (const auto& rec : enumerate_fk3_fourfolds(jobs))
        if (rec.ws.degree() <= d_max)
            expected.push_back(rec.ws);
    if (brute != expected)
        throw CrossCheckError("sweep disagrees with the constructed census below degree " +
                              std::to_string(d_max));
}

void verify_extra_families(const std::vector<FamilyRecord>& records) {
    if (records.size() != 2)
        throw CrossCheckError("expected exactly 2 extra families, found " +
                              std::to_string(records.size()));
    for (const auto& rec : records) {
        if (!rec.tags.count(FamilyTag::CyclicDelPezzo) || !rec.del_pezzo)
            throw CrossCheckError("extra family without del Pezzo structure: " +
                                  to_string(rec.ws));
        if (rec.ws.degree() % 6 != 0)
            throw CrossCheckError("extra family degree not divisible by 6: " + to_string(rec.ws));
        if (rec.sing_dim != 2)
            throw CrossCheckError("extra family with singular locus dimension " +
                                  std::to_string(rec.sing_dim) + ": " + to_string(rec.ws));
        verify_palindrome(rec.ws);
    }
}

void verify_analysis(const FamilyRecord& rec) {
    verify_palindrome(rec.ws);
    if (rec.association && !hodge_correspondence_holds(rec.ws, rec.association->index))
        throw CrossCheckError("Hodge correspondence fails for " + to_string(rec.ws));
}

void verify_strata_bookkeeping(const WeightSystem& ws, const SingularityReport& report) {
    const Int ambient_dim = static_cast<Int>(ws.size()) - 2;  // dimension of X
    for (const auto& s : report.strata)
        if (s.on_X &&
            s.locus_dim + static_cast<Int>(s.transverse.residues.size()) != ambient_dim)
            throw CrossCheckError("stratum dimension bookkeeping fails at r = " +
                                  std::to_string(s.r) + " for " + to_string(ws));
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
    CLI::App app{"census of quasi-smooth weighted Fano fourfolds of K3 type"};
    app.require_subcommand(1);

    std::string format_text = "csv";
    std::string out_path;
    int jobs = 1;
    bool verify = false;
    std::string spec;
    Int dmax = 0;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "output format: csv, json or md")
            ->check(CLI::IsMember({"csv", "json", "md"}));
        cmd->add_option("--out", out_path, "write to this file instead of stdout");
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--verify", verify, "run the cross-checks");
    };

    CLI::App* k3 = app.add_subcommand("k3", "weighted K3 surface census");
    k3->require_subcommand(1);
    CLI::App* k3_enum = k3->add_subcommand("enumerate", "the quasi-smooth K3 hypersurfaces");
    add_common(k3_enum);

    CLI::App* fk3 = app.add_subcommand("fk3", "Fano fourfold censuses");
    fk3->require_subcommand(1);
    CLI::App* fk3_enum = fk3->add_subcommand("enumerate", "fourfolds with dim sing <= 1");
    add_common(fk3_enum);
    CLI::App* fk3_brute = fk3->add_subcommand("brute", "direct sweep, no K3 detour");
    fk3_brute->add_option("--dmax", dmax, "largest degree to sweep")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(fk3_brute);
    CLI::App* fk3_extra =
        fk3->add_subcommand("extra", "families with two-dimensional singular locus");
    add_common(fk3_extra);

    CLI::App* analyze = app.add_subcommand("analyze", "full record for one weight system");
    analyze->add_option("spec", spec, "weights and degree as w0,w1,...,w5:d")->required();
    add_common(analyze);

    CLI::App* check = app.add_subcommand("check", "predicate-by-predicate report");
    check->add_option("spec", spec, "weights and degree as w0,w1,...,w5:d")->required();
    add_common(check);

    CLI::App* singularities = app.add_subcommand("singularities", "orbifold strata table");
    singularities->add_option("spec", spec, "weights and degree as w0,w1,...,w5:d")->required();
    add_common(singularities);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        const CatalogFormat fmt = parse_format(format_text);

        if (k3_enum->parsed()) {
            const auto k3s = enumerate_k3_surfaces();
            if (verify)
                verify_k3_census(k3s);
            write_output(emit_k3_catalog(k3s, fmt), out_path);
            return kExitSuccess;
        }
        if (fk3_enum->parsed()) {
            const auto records = enumerate_fk3_fourfolds(jobs);
            if (verify)
                verify_fourfold_census(records, jobs);
            write_output(emit_family_catalog(records, fmt), out_path);
            return kExitSuccess;
        }
        if (fk3_brute->parsed()) {
            const auto list = brute_force_census(dmax, jobs);
            if (verify)
                verify_brute_against_census(list, dmax, jobs);
            write_output(emit_weight_list(list, fmt), out_path);
            return kExitSuccess;
        }
        if (fk3_extra->parsed()) {
            const auto records = enumerate_extra_families();
            if (verify)
                verify_extra_families(records);
            write_output(emit_family_catalog(records, fmt), out_path);
            return kExitSuccess;
        }
        if (analyze->parsed()) {
            const WeightSystem ws = parse_weight_spec(spec);
            const FamilyRecord rec = analyze_family(ws);
            if (verify)
                verify_analysis(rec);
            write_output(emit_family_detail(rec, fmt), out_path);
            return kExitSuccess;
        }
        if (check->parsed()) {
            const WeightSystem ws = parse_weight_spec(spec);
            const auto checks = check_family(ws);
            write_output(emit_check_report(ws, checks, fmt), out_path);
            const bool all_passed =
                std::all_of(checks.begin(), checks.end(),
                            [](const PredicateCheck& c) { return c.passed; });
            return all_passed ? kExitSuccess : kExitPredicate;
        }
        if (singularities->parsed()) {
            const WeightSystem ws = parse_weight_spec(spec);
            if (!is_well_formed_hypersurface(ws))
                throw PredicateError("well_formed_hypersurface",
                                     "gcd conditions fail for " + to_string(ws));
            const QuasiSmoothVerdict qs = is_quasi_smooth_not_cone(ws);
            if (!qs)
                throw PredicateError("quasi_smooth", describe(*qs.failure));
            const SingularityReport report = classify_hypersurface(ws);
            if (verify)
                verify_strata_bookkeeping(ws, report);
            write_output(emit_strata_report(ws, report, fmt), out_path);
            return kExitSuccess;
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PredicateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPredicate;
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check violation: " << e.what() << '\n';
        return kExitCrossCheck;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kExitCrossCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace fk3
