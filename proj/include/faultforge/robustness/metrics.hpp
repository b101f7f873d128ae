#pragma once

#include "faultforge/explorer/explore.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace faultforge::robustness {

using explorer::Attack;

// Attack counts per order 0..mu for one input. f(0) is always 0: zero-fault
// traces are nominal by construction.
struct AttackFunction {
    std::vector<long long> counts;

    int mu() const { return static_cast<int>(counts.size()) - 1; }
    long long at(int n) const { return counts.at(static_cast<std::size_t>(n)); }
    long long cumulative(int n) const;
};

// Occurrence counts of one injection point across successful attacks,
// bucketed by attack order.
struct HotspotRow {
    std::vector<long long> orders;
    long long total = 0;
};

struct HotspotTable {
    std::map<std::string, HotspotRow> rows;
    int mu = 0;
};

struct ComparisonFailure {
    std::size_t input_index = 0;
    int order = 0;
    long long hardened_cumulative = 0;
    long long baseline_cumulative = 0;
};

// Result of the cumulative-sum robustness comparison. The relation is
// partial: an incomparable pair reports holds=false with the witness and the
// caller tests the other direction if needed.
struct ComparisonVerdict {
    bool holds = true;
    std::optional<ComparisonFailure> first_failure;
};

bool is_proper_prefix(const Attack& a, const Attack& b);
bool is_prefix_or_equal(const Attack& a, const Attack& b);

// Smallest subset of E that represents every attack of E by a prefix: keeps
// exactly the attacks with no proper prefix inside E.
std::vector<Attack> minimal_attacks(const std::vector<Attack>& e);

// count(ip, k) = occurrences of ip summed over the attacks of order k.
HotspotTable hotspots_of_attacks(const std::vector<Attack>& attacks, int mu);
HotspotTable hotspots(const explorer::AttackAnalysis& analysis);

// Attack function of one input of the analysis. Throws on unknown input.
AttackFunction vuln(const explorer::AttackAnalysis& analysis,
                    const explorer::InitialState& init);
AttackFunction vuln_row(const explorer::InputAnalysis& input);

// Largest mu' such that f(j) = 0 for all j in 1..mu'. Equal to f.mu() means
// robust up to the whole explored order.
int robustness_level(const AttackFunction& f);

// Cumulative comparison of a hardened program's attack functions against the
// baseline, per input and per order 1..mu. Throws on mismatched input counts
// or orders.
ComparisonVerdict compare_robustness(const std::vector<AttackFunction>& hardened,
                                     const std::vector<AttackFunction>& baseline);
ComparisonVerdict compare_robustness(const explorer::AttackAnalysis& hardened,
                                     const explorer::AttackAnalysis& baseline);

} // namespace faultforge::robustness
