#include <sstream>

#include "CLI11.hpp"
#include "wittflag/cli.hpp"

namespace wf {

namespace {

std::vector<int> parse_blocks(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty() || v < 1)
            throw std::invalid_argument("--blocks must be comma-separated positive integers, got '" + text + "'");
        out.push_back(v);
    }
    return out;
}

std::string one_line(std::string s) {
    for (auto& c : s)
        if (c == '\n') c = ' ';
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

int usage(std::ostream& err, const std::string& msg) {
    err << "flagwitt: " << one_line(msg) << "\n";
    return 1;
}

int report(const std::vector<SuiteItem>& items, const std::string& format, std::ostream& out) {
    int failed = 0;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        failed += !it.pass;
        if (format == "json")
            arr.push_back({{"name", it.name}, {"result", it.pass ? "PASS" : "FAIL"}, {"detail", it.detail}});
        else
            out << (it.pass ? "PASS " : "FAIL ") << it.name << ": " << it.detail << "\n";
    }
    if (format == "json")
        out << nlohmann::ordered_json{{"items", arr}, {"passed", items.size() - failed}, {"failed", failed}}.dump(2) << "\n";
    else
        out << "summary: " << items.size() - failed << " passed, " << failed << " failed\n";
    return failed ? 2 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Witt rings of complex flag varieties of ordinary type", "flagwitt"};
    app.require_subcommand(1, 1);

    std::string type, blocks_text, format = "text", suite;
    int m = 0, max_size = -1, max_n = 8;
    bool serial = false, rep_ring = false;

    auto* compute = app.add_subcommand("compute", "Witt ring presentation and ranks for one parameter set");
    compute->add_option("--type", type, "A, B, C or D")->required();
    compute->add_option("--m", m, "size of the m-block (types B, C, D)");
    compute->add_option("--blocks", blocks_text, "comma-separated block sizes n_1,...,n_l");
    compute->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    compute->add_flag("--rep-ring", rep_ring, "print the monomial *-ring of the centraliser instead (types A, B, C)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "examples, lemmas, series, appendix, tables or all")->required();
    verify->add_option("--max-size", max_size, "size bound of the suite's parameter sweep");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* table = app.add_subcommand("table", "presentations for all parameter tuples up to a size");
    table->add_option("--type", type, "A, B, C or D")->required();
    table->add_option("--max-n", max_n, "largest n (default 8, at most 10)");
    table->add_flag("--serial", serial, "single-threaded reference path");

    auto* selfcheck = app.add_subcommand("selfcheck", "quick consistency checks");
    selfcheck->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return usage(err, e.what());
    }

    try {
        if (compute->parsed()) {
            std::vector<int> blocks = parse_blocks(blocks_text);
            WittType t = parse_witt_type(type);
            if (rep_ring) {
                if (t == WittType::D) return usage(err, "--rep-ring supports types A, B and C");
                RepType rt = t == WittType::A ? RepType::A : t == WittType::B ? RepType::B : RepType::C;
                out << to_json(build_repring(rt, m, blocks)).dump(2) << "\n";
                return 0;
            }
            WittPresentation p = wf::compute(t, m, blocks);
            if (format == "json")
                out << to_json(p).dump(2) << "\n";
            else
                out << to_text(p);
            return p.checks.all() ? 0 : 2;
        }
        if (verify->parsed()) {
            if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
                return usage(err, "unknown suite '" + suite + "'");
            return report(run_suite(suite, max_size), format, out);
        }
        if (table->parsed()) {
            WittType t = parse_witt_type(type);
            if (max_n < 1) return usage(err, "--max-n must be positive");
            if (max_n > kMaxTableN)
                return usage(err, "--max-n " + std::to_string(max_n) + " exceeds " + std::to_string(kMaxTableN) +
                                      "; split the range or use compute for single tuples");
            TableResult r = make_table(t, max_n, !serial);
            for (const auto& line : r.lines) out << line << "\n";
            out << nlohmann::ordered_json{{"summary", {{"type", to_string(t)}, {"max_n", max_n}, {"rows", r.rows}, {"check_failures", r.failures}, {"additive_only", r.additive}}}}.dump()
                << "\n";
            return r.failures ? 2 : 0;
        }
        if (selfcheck->parsed()) {
            std::vector<SuiteItem> items = worked_example_checks();
            for (auto& v : {appendix_checks(8), lemma_checks(4), series_checks(3, 2, 4)}) items.insert(items.end(), v.begin(), v.end());
            return report(items, format, out);
        }
    } catch (const WittError& e) {
        return usage(err, e.what());
    } catch (const StarError& e) {
        return usage(err, e.what());
    } catch (const std::invalid_argument& e) {
        return usage(err, e.what());
    } catch (const std::exception& e) {
        err << "flagwitt: internal error: " << one_line(e.what()) << "\n";
        return 2;
    }
    return 1;
}

}  // namespace wf
