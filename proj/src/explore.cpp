#include "faultforge/explorer/explore.hpp"

#include "faultforge/error.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace faultforge::explorer {

using faults::FaultDecision;
using faults::FaultModelTag;

namespace {

// One node of the DFS decision path. choice 0 is "no fault"; for load sites
// choice k > 0 injects payloads[k-1], for test/join sites choice 1 activates.
struct PathNode {
    int choice = 0;
    int num_choices = 1;
    std::vector<Int> payloads;
};

class InputExplorer {
  public:
    InputExplorer(const mini_ir::Program& p, const std::string& entry, const Oracle& oracle,
                  const ExploreOptions& opts)
        : program_(p), entry_(entry), oracle_(oracle), opts_(opts) {}

    InputAnalysis run(const InitialState& init) {
        InputAnalysis ia;
        ia.init = init;
        ia.vuln.assign(static_cast<std::size_t>(opts_.max_order) + 1, 0);

        ExecOptions eo;
        eo.models = opts_.models;
        eo.step_limit = opts_.step_limit;
        eo.site_filter = opts_.site_filter;

        std::vector<PathNode> path;
        bool first = true;
        while (true) {
            // Replay the committed prefix; extend with inactive decisions,
            // recording every new site with its legal alternatives.
            std::size_t cursor = 0;
            int budget_used = 0;
            for (const auto& node : path)
                if (node.choice > 0)
                    ++budget_used;
            std::size_t prefix_len = path.size();

            DecisionFn decide = [&](const SiteEvent& ev) -> FaultDecision {
                FaultDecision d;
                if (cursor < prefix_len) {
                    const PathNode& node = path[cursor++];
                    if (node.choice > 0) {
                        d.active = true;
                        if (ev.model == FaultModelTag::Dlm)
                            d.payload = node.payloads[static_cast<std::size_t>(node.choice) - 1];
                    }
                    return d;
                }
                // New site beyond the prefix: take the nominal branch and
                // remember what else could have been chosen here.
                PathNode node;
                node.choice = 0;
                if (budget_used < opts_.max_order) {
                    if (ev.model == FaultModelTag::Dlm) {
                        node.payloads = *ev.payloads;
                        node.num_choices = 1 + static_cast<int>(node.payloads.size());
                    } else {
                        node.num_choices = 2;
                    }
                } else {
                    node.num_choices = 1;
                }
                path.push_back(std::move(node));
                ++cursor;
                return d;
            };

            Trace t = execute(program_, entry_, init, eo, decide);
            classify(ia, t, first);
            first = false;

            // Backtrack to the deepest node with an untried alternative.
            while (!path.empty() && path.back().choice + 1 >= path.back().num_choices)
                path.pop_back();
            if (path.empty())
                break;
            ++path.back().choice;
        }

        std::sort(ia.attacks.begin(), ia.attacks.end(), [](const Attack& a, const Attack& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return ia;
    }

  private:
    void classify(InputAnalysis& ia, Trace& t, bool is_first) {
        ++ia.explored_paths;
        if (is_first) {
            // The all-inactive leaf is explored first: the golden run.
            ia.nominal_trace = t;
        }
        if (t.status == TraceStatus::StepLimit) {
            ++ia.count_step_limit;
            return;
        }
        if (t.fault_count() == 0)
            return; // nominal class, counted via explored_paths
        switch (t.status) {
        case TraceStatus::Detected:
            ++ia.count_detected;
            return;
        case TraceStatus::Trap:
            ++ia.count_trapped;
            ++ia.count_failed;
            return;
        case TraceStatus::NominalExit: {
            if (oracle_.evaluate(t)) {
                ia.vuln[static_cast<std::size_t>(t.fault_count())]++;
                ia.attacks.push_back(t.plan);
            } else {
                ++ia.count_failed;
            }
            return;
        }
        default:
            return;
        }
    }

    const mini_ir::Program& program_;
    const std::string& entry_;
    const Oracle& oracle_;
    const ExploreOptions& opts_;
};

} // namespace

const InputAnalysis* AttackAnalysis::find_input(const InitialState& init) const {
    for (const auto& ia : inputs)
        if (ia.init == init)
            return &ia;
    return nullptr;
}

AttackAnalysis explore(const mini_ir::Program& p, const std::string& entry, const InputSet& inputs,
                       const Oracle& oracle, const ExploreOptions& opts) {
    if (opts.max_order < 0)
        throw InvalidArgument("max order must be >= 0");
    if (opts.step_limit <= 0)
        throw InvalidArgument("step limit must be positive");
    inputs.validate();

    AttackAnalysis out;
    out.entry = entry;
    out.models = opts.models;
    out.max_order = opts.max_order;
    out.oracle = oracle;
    out.inputs.resize(inputs.states.size());

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || inputs.states.size() == 1) {
        for (std::size_t i = 0; i < inputs.states.size(); ++i) {
            InputExplorer ex(p, entry, oracle, opts);
            out.inputs[i] = ex.run(inputs.states[i]);
        }
    } else {
        // Inputs are independent; results land in their slot so the output
        // is identical for any job count.
        std::vector<std::thread> pool;
        std::size_t next = 0;
        std::mutex mu;
        auto worker = [&]() {
            while (true) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= inputs.states.size())
                        return;
                    i = next++;
                }
                InputExplorer ex(p, entry, oracle, opts);
                out.inputs[i] = ex.run(inputs.states[i]);
            }
        };
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& ia : out.inputs) {
        out.explored_paths += ia.explored_paths;
        out.total_attacks += static_cast<long long>(ia.attacks.size());
        if (ia.count_step_limit > 0)
            out.complete = false;
    }
    return out;
}

} // namespace faultforge::explorer
