#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "wittflag/cli.hpp"

using namespace wf;

namespace {

struct Criterion {
    const char* title;
    double budget_s;
    std::vector<SuiteItem> (*run)();
};

std::vector<SuiteItem> regularity() { return family_regularity_checks(5, 4, kFamilyTotal, kFamilyTotal); }
std::vector<SuiteItem> reductions() { return family_reduction_checks(5, 4, kFamilyTotal, kFamilyTotal); }
std::vector<SuiteItem> series() { return series_checks(6, 4, 8); }
std::vector<SuiteItem> appendix() { return appendix_checks(12); }
std::vector<SuiteItem> rank_tables() { return rank_table_checks(7); }
std::vector<SuiteItem> classification() { return classification_checks(6, 6); }
std::vector<SuiteItem> lemmas() { return lemma_checks(8); }

const Criterion kCriteria[] = {
    {"worked examples reproduce exactly", 1, worked_example_checks},
    {"regularity and quotient dimension", 120, regularity},
    {"surplus reductions substitute back", 120, reductions},
    {"series kernel vanishes under psi", 60, series},
    {"exterior ranks closed form versus expansion", 1, appendix},
    {"rank tables versus exterior ranks", 60, rank_tables},
    {"Tate classification of monomial star rings", 60, classification},
    {"constructed lemma witnesses", 1, lemmas},
    {"sanity anchors", 1, anchor_checks},
};

int run_one(int c) {
    const Criterion& cr = kCriteria[c - 1];
    auto t0 = std::chrono::steady_clock::now();
    auto items = cr.run();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int failed = 0;
    for (const auto& it : items) failed += !it.pass;
    bool pass = failed == 0 && !items.empty() && s <= cr.budget_s;
    std::cout << "CRITERION " << c << " " << (pass ? "PASS" : "FAIL") << " " << cr.title << " (" << items.size() - failed
              << "/" << items.size() << " items, " << s << " s of " << cr.budget_s << " s)\n";
    for (const auto& it : items)
        if (!it.pass) std::cout << "  FAIL " << it.name << ": " << it.detail << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int criterion = 0;
    app.add_option("--criterion", criterion, "1..9; all when omitted")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);
    int rc = 0;
    for (int c = 1; c <= 9; ++c)
        if (criterion == 0 || criterion == c) rc |= run_one(c);
    return rc;
}
