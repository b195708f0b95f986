#include <exception>

#include "wittflag/cli.hpp"

namespace wf {

std::vector<std::vector<int>> partitions(int n, int max_part) {
    if (max_part < 0 || max_part > n) max_part = n;
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int first = max_part; first >= 1; --first)
        for (auto& rest : partitions(n - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

namespace {

int half_sum(const std::vector<int>& b) {
    int h = 0;
    for (int x : b) h += x / 2;
    return h;
}

}  // namespace

std::vector<Params> table_params(WittType t, int max_n) {
    std::vector<Params> out;
    for (int n = 1; n <= max_n; ++n) {
        if (t == WittType::A) {
            for (auto& b : partitions(n))
                if (b.size() >= 2) out.push_back({0, b});
            continue;
        }
        for (int m = 0; m <= n; ++m) {
            if (t == WittType::D && m == 1) continue;
            for (auto& b : partitions(n - m)) out.push_back({m, b});
        }
    }
    return out;
}

std::vector<Params> mu_tuples(int max_half, int max_total) {
    std::vector<Params> out;
    for (int n = 1; n <= max_total; ++n)
        for (auto& b : partitions(n))
            if (half_sum(b) <= max_half) out.push_back({0, b});
    return out;
}

std::vector<Params> side_tuples(int max_half, int max_total) {
    std::vector<Params> out;
    for (int n = 1; n <= max_total; ++n)
        for (int m = 1; m <= n; ++m)
            for (auto& b : partitions(n - m))
                if (m / 2 + half_sum(b) <= max_half) out.push_back({m, b});
    return out;
}

void for_each_index(int n, bool parallel, const std::function<void(int)>& f) {
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) {
        try {
            f(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

TableResult make_table(WittType t, int max_n, bool parallel) {
    if (max_n > kMaxTableN)
        throw std::invalid_argument("--max-n " + std::to_string(max_n) + " exceeds " + std::to_string(kMaxTableN) +
                                    "; split the range or use compute for single tuples");
    auto params = table_params(t, max_n);
    int n = static_cast<int>(params.size());
    TableResult r;
    r.lines.resize(n);
    std::vector<int> failed(n, 0), additive(n, 0);
    for_each_index(n, parallel, [&](int i) {
        const auto& p = params[i];
        nlohmann::ordered_json row;
        try {
            WittPresentation w = compute(t, p.m, p.blocks);
            row = to_json(w);
            failed[i] = !w.checks.all();
            additive[i] = w.structure == Structure::AdditiveOnly;
        } catch (const std::exception& e) {
            row = {{"type", to_string(t)}, {"params", {{"m", p.m}, {"blocks", p.blocks}}}, {"error", e.what()}};
            failed[i] = 1;
        }
        r.lines[i] = row.dump();
    });
    r.rows = n;
    for (int i = 0; i < n; ++i) {
        r.failures += failed[i];
        r.additive += additive[i];
    }
    return r;
}

}  // namespace wf
