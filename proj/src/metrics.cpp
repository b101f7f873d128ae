#include "faultforge/robustness/metrics.hpp"

#include "faultforge/error.hpp"

#include <algorithm>

namespace faultforge::robustness {

long long AttackFunction::cumulative(int n) const {
    long long sum = 0;
    for (int j = 1; j <= n; ++j)
        sum += at(j);
    return sum;
}

bool is_prefix_or_equal(const Attack& a, const Attack& b) {
    if (a.size() > b.size())
        return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

bool is_proper_prefix(const Attack& a, const Attack& b) {
    return a.size() < b.size() && is_prefix_or_equal(a, b);
}

std::vector<Attack> minimal_attacks(const std::vector<Attack>& e) {
    std::vector<Attack> out;
    for (const auto& a : e) {
        bool redundant = false;
        for (const auto& b : e) {
            if (is_proper_prefix(b, a)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            out.push_back(a);
    }
    return out;
}

HotspotTable hotspots_of_attacks(const std::vector<Attack>& attacks, int mu) {
    HotspotTable table;
    table.mu = mu;
    for (const auto& a : attacks) {
        int order = static_cast<int>(a.size());
        if (order > mu)
            continue;
        for (const auto& occ : a) {
            auto& row = table.rows[occ.ip];
            if (row.orders.empty())
                row.orders.assign(static_cast<std::size_t>(mu) + 1, 0);
            row.orders[static_cast<std::size_t>(order)]++;
            row.total++;
        }
    }
    return table;
}

HotspotTable hotspots(const explorer::AttackAnalysis& analysis) {
    std::vector<Attack> all;
    for (const auto& input : analysis.inputs)
        all.insert(all.end(), input.attacks.begin(), input.attacks.end());
    return hotspots_of_attacks(all, analysis.max_order);
}

AttackFunction vuln_row(const explorer::InputAnalysis& input) {
    return AttackFunction{input.vuln};
}

AttackFunction vuln(const explorer::AttackAnalysis& analysis,
                    const explorer::InitialState& init) {
    const explorer::InputAnalysis* input = analysis.find_input(init);
    if (!input)
        throw InvalidArgument("initial state is not part of the analysis");
    return vuln_row(*input);
}

int robustness_level(const AttackFunction& f) {
    for (int j = 1; j <= f.mu(); ++j)
        if (f.at(j) != 0)
            return j - 1;
    return f.mu();
}

ComparisonVerdict compare_robustness(const std::vector<AttackFunction>& hardened,
                                     const std::vector<AttackFunction>& baseline) {
    if (hardened.size() != baseline.size())
        throw InvalidArgument("robustness comparison needs the same input set");
    ComparisonVerdict v;
    for (std::size_t i = 0; i < hardened.size(); ++i) {
        if (hardened[i].mu() != baseline[i].mu())
            throw InvalidArgument("robustness comparison needs the same max order");
        long long cum_new = 0;
        long long cum_old = 0;
        for (int n = 1; n <= baseline[i].mu(); ++n) {
            cum_new += hardened[i].at(n);
            cum_old += baseline[i].at(n);
            if (cum_new > cum_old) {
                v.holds = false;
                v.first_failure = ComparisonFailure{i, n, cum_new, cum_old};
                return v;
            }
        }
    }
    return v;
}

ComparisonVerdict compare_robustness(const explorer::AttackAnalysis& hardened,
                                     const explorer::AttackAnalysis& baseline) {
    std::vector<AttackFunction> fn;
    std::vector<AttackFunction> fo;
    for (const auto& input : hardened.inputs)
        fn.push_back(vuln_row(input));
    for (const auto& input : baseline.inputs)
        fo.push_back(vuln_row(input));
    return compare_robustness(fn, fo);
}

} // namespace faultforge::robustness
