#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittflag/star_monomial.hpp"
#include "wittflag/witt.hpp"

namespace wf {

// serialization
nlohmann::ordered_json to_json(const WittPresentation& p);
std::string to_text(const WittPresentation& p);
nlohmann::ordered_json to_json(const StarRing& r);

// verification suites
struct SuiteItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& suite_names();  // without "all"
// max_size < 0 selects the suite default.
std::vector<SuiteItem> run_suite(const std::string& suite, int max_size = -1);

// Families are enumerated as block multisets with total size <= kFamilyTotal.
constexpr int kFamilyTotal = 14;

std::vector<SuiteItem> worked_example_checks();
std::vector<SuiteItem> family_regularity_checks(int mu_half, int nu_half, int mu_total, int nu_total);
std::vector<SuiteItem> family_reduction_checks(int mu_half, int nu_half, int mu_total, int nu_total);
std::vector<SuiteItem> series_checks(int max_k, int max_half, int s_bound);
std::vector<SuiteItem> appendix_checks(int max_size);
std::vector<SuiteItem> rank_table_checks(int max_n);
std::vector<SuiteItem> classification_checks(int degree_bound, int max_total);
std::vector<SuiteItem> lemma_checks(int degree_bound);
std::vector<SuiteItem> anchor_checks();

// parameter enumeration
struct Params {
    int m = 0;
    std::vector<int> blocks;
};

std::vector<std::vector<int>> partitions(int n, int max_part = -1);  // non-increasing parts
std::vector<Params> table_params(WittType t, int max_n);
std::vector<Params> mu_tuples(int max_half, int max_total);
std::vector<Params> side_tuples(int max_half, int max_total);  // (m, blocks) for nu/xi

// batch tables
struct TableResult {
    std::vector<std::string> lines;  // one JSON object per tuple, in enumeration order
    int rows = 0;
    int failures = 0;
    int additive = 0;
};

constexpr int kMaxTableN = 10;

TableResult make_table(WittType t, int max_n, bool parallel);
// Applies f to each index in [0, n), in parallel when requested; results land in place.
void for_each_index(int n, bool parallel, const std::function<void(int)>& f);

// Entry point; returns the process exit code (0 ok, 1 usage, 2 check failure).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wf
