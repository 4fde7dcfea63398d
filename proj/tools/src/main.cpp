// pgiso: construct, compare and catalog spread/star designs over PG(n-1,2).
//
// Exit codes: 0 success (and "true" verdicts), 1 "false" verdicts from the
// check subcommands, 2 usage or validation errors.

#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgiso/catalog.hpp"
#include "pgiso/design_io.hpp"
#include "pgiso/fixtures.hpp"
#include "pgiso/isomorphism.hpp"
#include "pgiso/signature.hpp"

namespace {

using namespace pgiso;

Design load_design(const std::string& arg) {
    if (is_fixture(arg)) return fixture_design(arg);
    std::ifstream in(arg, std::ios::binary);
    if (!in)
        throw std::runtime_error("'" + arg + "' is neither a bundled fixture nor a readable file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_design(buf.str());
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

nlohmann::json matrix_to_json(const GF2Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::function<void(double)> progress_printer(std::mutex& mu, std::string& last) {
    return [&mu, &last](double percent) {
        const std::string rendered = format_percent(percent);
        std::lock_guard<std::mutex> lock(mu);
        if (rendered == last) return;
        last = rendered;
        std::cerr << "percent done: " << rendered << "\n";
    };
}

struct CheckArgs {
    std::string a;
    std::string b;
    bool all_iecs = false;
    bool progress = false;
    bool parallel = false;
    int threads = 0;
    bool json = false;
};

int run_check_equiv(const CheckArgs& args) {
    const Design da = load_design(args.a);
    const Design db = load_design(args.b);
    if (design_kind(da) != design_kind(db))
        throw std::runtime_error("cannot compare a spread with a star");
    bool equal = false;
    if (const Spread* sa = std::get_if<Spread>(&da))
        equal = check_spread_equivalence(*sa, std::get<Spread>(db));
    else
        equal = check_star_equivalence(std::get<Star>(da), std::get<Star>(db));
    if (args.json) {
        nlohmann::json j;
        j["equivalent"] = equal;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "equivalent: " << (equal ? "true" : "false") << "\n";
    }
    return equal ? 0 : 1;
}

int run_check_iso(const CheckArgs& args) {
    const Design da = load_design(args.a);
    const Design db = load_design(args.b);
    if (design_kind(da) != design_kind(db))
        throw std::runtime_error("cannot compare a spread with a star");

    SearchOptions options;
    options.find_all = args.all_iecs;
    options.parallel = args.parallel;
    options.threads = args.threads;
    std::mutex progress_mutex;
    std::string last_percent;
    if (args.progress) options.progress = progress_printer(progress_mutex, last_percent);

    IsoResult result;
    if (const Spread* sa = std::get_if<Spread>(&da))
        result = check_spread_isomorphism(*sa, std::get<Spread>(db), options);
    else
        result = check_star_isomorphism(std::get<Star>(da), std::get<Star>(db), options);

    if (args.json) {
        nlohmann::json j;
        j["isomorphic"] = result.result;
        if (!result.message.empty()) j["message"] = result.message;
        nlohmann::json iecs = nlohmann::json::array();
        for (const Collineation& c : result.collineations) iecs.push_back(matrix_to_json(c.matrix()));
        j["iecs"] = std::move(iecs);
        j["stats"] = {{"candidates", result.stats.candidates},
                      {"equivalence_checks", result.stats.equivalence_checks},
                      {"accepted", result.stats.accepted}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "isomorphic: " << (result.result ? "true" : "false") << "\n";
        if (!result.message.empty()) std::cout << result.message << "\n";
        std::cout << "IECs: " << result.collineations.size() << "\n";
        for (const Collineation& c : result.collineations) std::cout << "\n" << c.to_text();
    }
    return result.result ? 0 : 1;
}

std::string render_ranked(const std::string& name, const CriterionResult& cr) {
    std::string line = name + ": V = " + cr.value.to_string() + " (" +
                       cr.value.to_decimal_string(2) + "), p = (";
    for (std::size_t i = 0; i < cr.proportions.size(); ++i) {
        if (i) line += ", ";
        line += cr.proportions[i].to_string();
    }
    line += ")";
    return line;
}

std::string render_catalog(const std::vector<CatalogEntry>& entries,
                           const std::string& seed_name, std::uint64_t budget,
                           std::uint64_t rng_seed) {
    std::ostringstream out;
    out << "# catalog: " << entries.size() << (entries.size() == 1 ? " class" : " classes")
        << ", seed " << seed_name << ", budget " << budget << ", rng-seed " << rng_seed
        << "\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const CatalogEntry& e = entries[i];
        out << "\nentry " << (i + 1) << "\n";
        out << "V: " << e.representative.v_value.to_string() << " ("
            << e.representative.v_value.to_decimal_string(2) << ")\n";
        out << "p:";
        for (const Rational& p : e.representative.p_values) out << " " << p.to_string();
        out << "\n";
        out << "found: " << e.found_count << "\n";
        out << "values seen:";
        for (const Rational& v : e.seen_values) out << " " << v.to_string();
        out << "\n";
        out << "signature:\n";
        for (const Bitstring& b : e.signature) out << b.to_string() << "\n";
        out << render_design(Design(std::get<Spread>(e.representative.design)));
        if (!(e.min_v.v_value == e.representative.v_value)) {
            out << "min-V member: V = " << e.min_v.v_value.to_string() << " ("
                << e.min_v.v_value.to_decimal_string(2) << ")\n";
            out << render_design(Design(std::get<Spread>(e.min_v.design)));
        }
    }
    return out.str();
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const CatalogEntry& e : entries) {
        nlohmann::json j;
        j["V"] = e.representative.v_value.to_string();
        nlohmann::json ps = nlohmann::json::array();
        for (const Rational& p : e.representative.p_values) ps.push_back(p.to_string());
        j["p"] = std::move(ps);
        j["found"] = e.found_count;
        nlohmann::json seen = nlohmann::json::array();
        for (const Rational& v : e.seen_values) seen.push_back(v.to_string());
        j["values_seen"] = std::move(seen);
        nlohmann::json sig = nlohmann::json::array();
        for (const Bitstring& b : e.signature) sig.push_back(b.to_string());
        j["signature"] = std::move(sig);
        j["design"] = nlohmann::json::parse(
            render_design_json(Design(std::get<Spread>(e.representative.design))));
        j["min_v"] = {{"V", e.min_v.v_value.to_string()},
                      {"design", nlohmann::json::parse(render_design_json(
                                     Design(std::get<Spread>(e.min_v.design))))}};
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spreads, covering stars and design isomorphism over PG(n-1,2)"};
    app.require_subcommand(1);

    // construct spread / construct star
    auto* construct = app.add_subcommand("construct", "build a design and print it");
    construct->require_subcommand(1);

    int cs_n = 0, cs_t = 0;
    std::string cs_poly, cs_out;
    bool cs_json = false;
    auto* cspread = construct->add_subcommand("spread", "cyclic spread of PG(n-1,2)");
    cspread->add_option("--n", cs_n, "geometry dimension n")->required();
    cspread->add_option("--t", cs_t, "flat dimension t (t divides n)")->required();
    cspread->add_option("--poly", cs_poly,
                        "primitive polynomial bits, constant term first (x^4+x+1 is 11001)");
    cspread->add_option("--out", cs_out, "output file (default stdout)");
    cspread->add_flag("--json", cs_json, "emit JSON instead of the text format");

    std::string cstar_spread, cstar_out;
    std::vector<std::string> cstar_nucleus;
    bool cstar_json = false;
    auto* cstar = construct->add_subcommand("star", "star from a spread and a nucleus");
    cstar->add_option("--spread", cstar_spread, "spread fixture name or file")->required();
    cstar
        ->add_option("--nucleus", cstar_nucleus,
                     "nucleus basis labels in the star geometry (one per dimension added)")
        ->required();
    cstar->add_option("--out", cstar_out, "output file (default stdout)");
    cstar->add_flag("--json", cstar_json, "emit JSON instead of the text format");

    // check equiv / check iso
    auto* check = app.add_subcommand("check", "compare two designs");
    check->require_subcommand(1);
    CheckArgs eq_args, iso_args;
    auto* cequiv = check->add_subcommand("equiv", "rearrangement equivalence");
    cequiv->add_option("A", eq_args.a, "first design (fixture or file)")->required();
    cequiv->add_option("B", eq_args.b, "second design (fixture or file)")->required();
    cequiv->add_flag("--json", eq_args.json, "emit JSON");
    auto* ciso = check->add_subcommand("iso", "isomorphism (collineation search)");
    ciso->add_option("A", iso_args.a, "first design (fixture or file)")->required();
    ciso->add_option("B", iso_args.b, "second design (fixture or file)")->required();
    ciso->add_flag("--all-iecs", iso_args.all_iecs, "enumerate every IEC (default: first only)");
    ciso->add_flag("--progress", iso_args.progress, "print 'percent done' lines to stderr");
    ciso->add_flag("--parallel", iso_args.parallel, "parallel search");
    ciso->add_option("--threads", iso_args.threads,
                     "worker threads for --parallel (default: PGISO_THREADS or hardware)");
    ciso->add_flag("--json", iso_args.json, "emit JSON");

    // star-to-spread
    std::string sts_file, sts_out;
    bool sts_json = false;
    auto* sts = app.add_subcommand("star-to-spread", "reduced spread and standardizing map");
    sts->add_option("STAR", sts_file, "star fixture name or file")->required();
    sts->add_option("--out", sts_out, "output file (default stdout)");
    sts->add_flag("--json", sts_json, "emit JSON");

    // bitstrings
    std::string bits_file;
    auto* bits = app.add_subcommand("bitstrings", "signature dump (sorted flat bitstrings)");
    bits->add_option("DESIGN", bits_file, "design fixture name or file")->required();

    // rank
    std::vector<std::string> rank_files;
    bool rank_json = false;
    auto* rank = app.add_subcommand("rank", "V criterion values");
    rank->add_option("DESIGN", rank_files, "design fixture names or files")->required();
    rank->add_flag("--json", rank_json, "emit JSON");

    // catalog
    std::string cat_seed, cat_out;
    std::uint64_t cat_budget = 0, cat_rng_seed = 0;
    bool cat_json = false;
    auto* cat = app.add_subcommand("catalog", "random-permutation catalog of spread classes");
    cat->add_option("--seed", cat_seed, "seed spread fixture name or file")->required();
    cat->add_option("--budget", cat_budget, "number of random permutations")->required();
    cat->add_option("--rng-seed", cat_rng_seed, "base seed for the permutation substreams");
    cat->add_option("--out", cat_out, "output file (default stdout)");
    cat->add_flag("--json", cat_json, "emit JSON");

    // fixtures
    auto* fixtures = app.add_subcommand("fixtures", "bundled reference designs");
    fixtures->require_subcommand(1);
    auto* flist = fixtures->add_subcommand("list", "list fixture names");
    std::string fshow_name;
    bool fshow_json = false;
    auto* fshow = fixtures->add_subcommand("show", "print one fixture");
    fshow->add_option("NAME", fshow_name, "fixture name")->required();
    fshow->add_flag("--json", fshow_json, "emit JSON");

    try {
        app.parse(argc, argv);

        if (cspread->parsed()) {
            const Spread d = cs_poly.empty()
                                 ? cyclic_spread(cs_n, cs_t)
                                 : cyclic_spread(cs_n, cs_t, PrimitivePoly::parse(cs_poly));
            write_output(cs_json ? render_design_json(Design(d)) + "\n" : render_design(Design(d)),
                         cs_out);
            return 0;
        }
        if (cstar->parsed()) {
            const Design base = load_design(cstar_spread);
            const Spread* psi = std::get_if<Spread>(&base);
            if (!psi) throw std::runtime_error("--spread must name a spread design");
            const int n = psi->n + static_cast<int>(cstar_nucleus.size());
            std::vector<Point> nucleus_basis;
            for (const std::string& label : cstar_nucleus)
                nucleus_basis.push_back(label_to_point(label, n));
            const Star star = build_star(*psi, nucleus_basis);
            write_output(
                cstar_json ? render_design_json(Design(star)) + "\n" : render_design(Design(star)),
                cstar_out);
            return 0;
        }
        if (cequiv->parsed()) return run_check_equiv(eq_args);
        if (ciso->parsed()) return run_check_iso(iso_args);
        if (sts->parsed()) {
            const Design d = load_design(sts_file);
            const Star* star = std::get_if<Star>(&d);
            if (!star) throw std::runtime_error("star-to-spread needs a star design");
            const StarDecomposition dec = star_to_spread(*star);
            if (sts_json) {
                nlohmann::json j;
                j["spread"] = nlohmann::json::parse(render_design_json(Design(dec.spread)));
                j["collineation"] = matrix_to_json(dec.collineation.matrix());
                write_output(j.dump() + "\n", sts_out);
            } else {
                std::ostringstream out;
                out << render_design(Design(dec.spread));
                out << "collineation:\n" << dec.collineation.to_text();
                write_output(out.str(), sts_out);
            }
            return 0;
        }
        if (bits->parsed()) {
            const Design d = load_design(bits_file);
            if (const Star* star = std::get_if<Star>(&d)) {
                std::cout << "nucleus: " << Bitstring::of_flat(star->nucleus).to_string() << "\n";
                for (const Bitstring& b : get_bitstrings(star->rays))
                    std::cout << b.to_string() << "\n";
            } else {
                for (const Bitstring& b : get_bitstrings(std::get<Spread>(d).flats))
                    std::cout << b.to_string() << "\n";
            }
            return 0;
        }
        if (rank->parsed()) {
            nlohmann::json jout = nlohmann::json::array();
            for (const std::string& name : rank_files) {
                const Design d = load_design(name);
                const CriterionResult cr = std::holds_alternative<Spread>(d)
                                               ? v_criterion(std::get<Spread>(d))
                                               : v_criterion(std::get<Star>(d));
                if (rank_json) {
                    nlohmann::json j;
                    j["design"] = name;
                    j["V"] = cr.value.to_string();
                    nlohmann::json ps = nlohmann::json::array();
                    for (const Rational& p : cr.proportions) ps.push_back(p.to_string());
                    j["p"] = std::move(ps);
                    jout.push_back(std::move(j));
                } else {
                    std::cout << render_ranked(name, cr) << "\n";
                }
            }
            if (rank_json) std::cout << jout.dump() << "\n";
            return 0;
        }
        if (cat->parsed()) {
            const Design d = load_design(cat_seed);
            const Spread* seed = std::get_if<Spread>(&d);
            if (!seed) throw std::runtime_error("catalog seeds must be spreads");
            CatalogOptions options;
            options.budget = cat_budget;
            options.rng_seed = cat_rng_seed;
            const std::vector<CatalogEntry> entries = catalog_search(*seed, options);
            write_output(cat_json ? catalog_to_json(entries).dump() + "\n"
                                  : render_catalog(entries, cat_seed, cat_budget, cat_rng_seed),
                         cat_out);
            return 0;
        }
        if (flist->parsed()) {
            for (std::string_view name : fixture_names()) std::cout << name << "\n";
            return 0;
        }
        if (fshow->parsed()) {
            if (fshow_json)
                std::cout << render_design_json(fixture_design(fshow_name)) << "\n";
            else
                std::cout << fixture_text(fshow_name);
            return 0;
        }
        return 2;  // unreachable: require_subcommand guarantees one branch
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
