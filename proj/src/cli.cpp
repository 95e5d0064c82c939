#include "fc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fc/characterize.hpp"
#include "fc/classify.hpp"
#include "fc/covering.hpp"
#include "fc/detail/mask.hpp"
#include "fc/format.hpp"
#include "fc/irreducible.hpp"
#include "fc/iso.hpp"
#include "fc/linear.hpp"
#include "fc/search.hpp"

namespace fc {

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PartitionList parse_partition(const std::string& text) {
    PartitionList l;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        l.push_back(std::stoi(item));
    if (l.empty()) throw std::runtime_error("empty partition list");
    return l;
}

WeightFn weights_from_json_file(const std::string& path, int n) {
    auto j = nlohmann::json::parse(read_text_file(path));
    auto w = j.get<std::vector<std::uint64_t>>();
    if (static_cast<int>(w.size()) != n)
        throw std::runtime_error("weight vector length must equal the universe size");
    return WeightFn(std::move(w));
}

CharacterizeOptions options_with_progress(bool verbose) {
    CharacterizeOptions opts;
    if (verbose) {
        auto start = std::chrono::steady_clock::now();
        opts.progress = [start](const std::string& msg) {
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
            std::cerr << "[" << static_cast<long>(secs.count()) << "s] " << msg << "\n";
        };
    }
    return opts;
}

int cmd_classify(const std::string& family_text, std::optional<int> universe,
                 const std::string& out_path, std::uint64_t cap) {
    Family fam = parse_family(family_text, universe);
    ClassifyOptions opts;
    if (cap) opts.max_iterations = cap;
    FCStatus status = classify(fam, opts);
    std::string json = certificate_to_json(status);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << json;
    }
    std::cout << (status.is_fc() ? "FC" : "nonFC") << " " << print_family(fam) << "\n";
    if (out_path.empty()) std::cout << json;
    return exit_true;
}

int cmd_verify(const std::string& cert_path) {
    FCStatus status = certificate_from_json(read_text_file(cert_path));
    bool ok = status.is_fc() ? verify_fc(status.fc_certificate())
                             : verify_nonfc(status.nonfc_certificate());
    std::cout << (ok ? "valid" : "INVALID") << " " << (status.is_fc() ? "FC" : "nonFC")
              << " certificate for "
              << print_family(status.is_fc() ? status.fc_certificate().family
                                             : status.nonfc_certificate().family)
              << "\n";
    return ok ? exit_true : exit_false;
}

int cmd_enumerate(int n, const std::string& partition_text, bool irreducible_only,
                  const std::string& chars_dir) {
    PartitionList l = parse_partition(partition_text);
    if (static_cast<int>(l.size()) > n + 1)
        throw std::runtime_error("partition list longer than n+1");
    l.resize(static_cast<std::size_t>(n) + 1, 0);

    IncPredicate pred = pred_true();
    if (irreducible_only) pred = pred_and(pred, pred_irreducible());
    Collection fcs;
    if (!chars_dir.empty()) {
        Characterization chars = load_characterization(chars_dir);
        if (!verify_characterization(chars))
            throw std::runtime_error("characterization certificates do not verify");
        std::vector<Family> fams;
        for (const FCCertificate& c : chars.minimal_fc) fams.push_back(c.family);
        fcs = Collection(std::move(fams));
        pred = pred_and(pred, pred_not_fc_covered(fcs));
    }

    auto perms = all_permutations(n);
    auto upd = [&](const Collection& c, const PartitionList& cur) {
        auto sets = subsets_of_size(n, static_cast<int>(cur.size()) - 1);
        return iso_base(filtered_product(c, sets, pred), perms);
    };
    Collection base = enum_rec(l, Collection({Family(n)}), upd);
    for (const Family& f : base) std::cout << print_family(f) << "\n";
    std::cout << "# " << base.size() << " families\n";
    return exit_true;
}

int cmd_characterize(int n, const std::string& out_dir, bool extended, bool with_stats,
                     bool verbose) {
    if (n >= 6 && !extended)
        throw std::runtime_error("n = 6 is the extended target; pass --extended to run it");
    auto start = std::chrono::steady_clock::now();
    CharacterizeOptions opts = options_with_progress(verbose);
    Characterization chars = find_characteristic(n, opts);
    std::vector<StatsRow> rows;
    if (with_stats) rows = stats(n, chars, opts);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    save_characterization(chars, out_dir, with_stats ? &rows : nullptr, secs);
    std::cout << "n=" << n << ": " << chars.minimal_fc.size() << " minimal FC, "
              << chars.maximal_nonfc.size() << " maximal nonFC ("
              << chars.fc_examined << " FC / " << chars.nonfc_examined
              << " nonFC families classified)\n";
    return exit_true;
}

int cmd_cover_check(int n, const std::string& chars_dir, bool verbose) {
    Characterization chars = load_characterization(chars_dir);
    if (chars.n != n) throw std::runtime_error("characterization directory is for another n");
    if (!verify_characterization(chars)) {
        std::cout << "certificates: FAILED\n";
        return exit_false;
    }
    std::cout << "certificates: ok\n";
    bool semi = verify_semi_uniform(n, chars);
    std::cout << "semi-uniform lists: " << (semi ? "ok" : "FAILED") << "\n";
    if (!semi) return exit_false;
    bool total = verify_total_coverage(n, chars);
    std::cout << "total coverage: " << (total ? "ok" : "FAILED") << "\n";
    if (verbose)
        std::cout << "region lists: " << count_region_lists(n, chars.lf_lists) << "\n";
    return total ? exit_true : exit_false;
}

int cmd_stats(int n, const std::string& chars_dir, const std::string& out_path, bool verbose) {
    Characterization chars = load_characterization(chars_dir);
    if (chars.n != n) throw std::runtime_error("characterization directory is for another n");
    if (!verify_characterization(chars))
        throw std::runtime_error("characterization certificates do not verify");
    auto rows = stats(n, chars, options_with_progress(verbose));
    std::string csv = stats_to_csv(rows);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << csv;
    }
    return exit_true;
}

int cmd_export_lp(const std::string& family_text, std::optional<int> universe,
                  const std::string& weights_path, const std::string& out_path) {
    Family fam = parse_family(family_text, universe);
    WeightFn w = weights_from_json_file(weights_path, fam.universe_size());
    export_lp_file(fam, w, out_path);
    std::cout << "wrote " << out_path << "\n";
    return exit_true;
}

int cmd_expand(const std::string& cert_path, int d) {
    FCStatus status = certificate_from_json(read_text_file(cert_path));
    if (status.is_fc())
        throw std::runtime_error("expand-counterexample needs a nonFC certificate");
    const NonFCCertificate& cert = status.nonfc_certificate();
    if (!verify_nonfc(cert)) {
        std::cout << "certificate does not verify\n";
        return exit_false;
    }
    int used_d = d > 0 ? d : find_sufficient_d(cert);
    Family fd = expand_counterexample(cert, used_d);
    bool ok = check_counterexample(cert.family, fd);
    std::cout << "d=" << used_d << " |F^d|=" << fd.size() << " universe="
              << fd.universe_size() << " check=" << (ok ? "pass" : "FAIL") << "\n";
    std::cout << print_family(fd) << "\n";
    return ok ? exit_true : exit_false;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"FC-family toolkit: decide Frankl-completeness, emit and check certificates, "
                 "enumerate families, and regenerate characteristic collections"};
    app.require_subcommand(1);

    std::string family_text, cert_path, out_path, out_dir, chars_dir, weights_path, partition_text;
    int n = 0, d = 0;
    std::optional<int> universe;
    std::uint64_t cap = 0;
    bool irreducible_only = false, extended = false, with_stats = false, verbose = false;

    auto* classify_cmd = app.add_subcommand("classify", "decide the FC status of a family");
    classify_cmd->add_option("family", family_text, "family literal, e.g. {{0,1},{2}}")
        ->required();
    classify_cmd->add_option("--n", universe, "universe size (default: max element + 1)");
    classify_cmd->add_option("--out", out_path, "write the certificate JSON here");
    classify_cmd->add_option("--cap", cap, "iteration cap (default 10000)");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
    verify_cmd->add_option("cert", cert_path, "certificate JSON path")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "iso-base of L-partitioned families");
    enum_cmd->add_option("--n", n, "universe size")->required();
    enum_cmd->add_option("--partition", partition_text, "comma-separated counts, e.g. 0,0,2,1")
        ->required();
    enum_cmd->add_flag("--irreducible", irreducible_only, "only irreducible families");
    enum_cmd->add_option("--not-covered-by", chars_dir,
                         "skip families FC-covered by this characterization directory");

    auto* char_cmd = app.add_subcommand("characterize", "find minimal FC / maximal nonFC families");
    char_cmd->add_option("--n", n, "universe size (1..6)")->required();
    char_cmd->add_option("--out", out_dir, "output directory")->required();
    char_cmd->add_flag("--extended", extended, "allow the long n=6 run");
    char_cmd->add_flag("--stats", with_stats, "also compute stats.csv");
    char_cmd->add_flag("-v,--verbose", verbose, "progress to stderr");

    auto* cover_cmd = app.add_subcommand("cover-check", "verify a characterization covers everything");
    cover_cmd->add_option("--n", n, "universe size")->required();
    cover_cmd->add_option("--chars", chars_dir, "characterization directory")->required();
    cover_cmd->add_flag("-v,--verbose", verbose, "print region size");

    auto* stats_cmd = app.add_subcommand("stats", "per-partition statistics CSV");
    stats_cmd->add_option("--n", n, "universe size")->required();
    stats_cmd->add_option("--chars", chars_dir, "characterization directory")->required();
    stats_cmd->add_option("--out", out_path, "CSV output path (default stdout)");
    stats_cmd->add_flag("-v,--verbose", verbose, "progress to stderr");

    auto* lp_cmd = app.add_subcommand("export-lp", "write the 0-1 LP encoding");
    lp_cmd->add_option("family", family_text, "family literal")->required();
    lp_cmd->add_option("--n", universe, "universe size");
    lp_cmd->add_option("--weights", weights_path, "weight vector JSON file")->required();
    lp_cmd->add_option("--out", out_path, "LP file path")->required();

    auto* expand_cmd = app.add_subcommand("expand-counterexample",
                                          "build the explicit counterexample family");
    expand_cmd->add_option("cert", cert_path, "nonFC certificate JSON path")->required();
    expand_cmd->add_option("--d", d, "replication factor (default: smallest sufficient)");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_true : exit_usage;
    }

    try {
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(family_text, universe, out_path, cap);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(cert_path);
        if (app.got_subcommand(enum_cmd))
            return cmd_enumerate(n, partition_text, irreducible_only, chars_dir);
        if (app.got_subcommand(char_cmd))
            return cmd_characterize(n, out_dir, extended, with_stats, verbose);
        if (app.got_subcommand(cover_cmd)) return cmd_cover_check(n, chars_dir, verbose);
        if (app.got_subcommand(stats_cmd)) return cmd_stats(n, chars_dir, out_path, verbose);
        if (app.got_subcommand(lp_cmd))
            return cmd_export_lp(family_text, universe, weights_path, out_path);
        if (app.got_subcommand(expand_cmd)) return cmd_expand(cert_path, d);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return exit_cap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace fc
