#include "magiclab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magiclab {

PartitionInstance PartitionInstance::from_sizes(std::vector<int> sizes) {
    if (sizes.empty()) throw std::invalid_argument("need at least one part");
    for (int p : sizes)
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
    std::sort(sizes.begin(), sizes.end());
    PartitionInstance inst;
    inst.k = static_cast<int>(sizes.size());
    inst.n = std::accumulate(sizes.begin(), sizes.end(), 0);
    inst.sizes = std::move(sizes);
    return inst;
}

long long PartitionInstance::target() const {
    return static_cast<long long>(n) * (n + 1) / 2 / k;
}

CheckResult necessary_mod(const PartitionInstance& inst) {
    // The common target n(n+1)/(2k) must be an integer.  n(n+1)/2 is always
    // integral, so this reduces to k | n(n+1)/2.
    long long total = static_cast<long long>(inst.n) * (inst.n + 1) / 2;
    return {total % inst.k == 0, "mod"};
}

CheckResult necessary_prefix(const PartitionInstance& inst) {
    // compare k * (sum of P_j largest labels) >= j * n(n+1)/2, avoiding division
    long long total2 = static_cast<long long>(inst.n) * (inst.n + 1);  // 2 * binom
    long long prefix = 0;
    for (int j = 1; j <= inst.k; ++j) {
        prefix += inst.sizes[j - 1];  // smallest parts are the binding ones
        // sum of the `prefix` largest labels: n + (n-1) + ... + (n-prefix+1)
        long long top = prefix * (2LL * inst.n - prefix + 1) / 2;
        if (2 * inst.k * top < j * total2) return {false, "prefix"};
    }
    return {true, "prefix"};
}

namespace {

struct PartState {
    int size;      // prescribed size
    int left;      // slots still open
    long long need;  // remaining sum needed
    std::vector<int> members;
};

// Assign labels in descending order; prune with per-part min/max achievable
// sums over the remaining labels {1..x}.
bool assign_label(int x, std::vector<PartState>& parts) {
    if (x == 0) return true;
    int tried_empty_size = -1;
    for (auto& p : parts) {
        if (p.left == 0) continue;
        if (p.need < x) continue;
        if (p.members.empty()) {  // symmetry breaking among equal-size parts
            if (p.size == tried_empty_size) continue;
            tried_empty_size = p.size;
        }
        p.members.push_back(x);
        --p.left;
        p.need -= x;
        bool ok = true;
        for (const auto& q : parts) {
            if (q.left == 0) {
                if (q.need != 0) { ok = false; break; }
                continue;
            }
            // remaining labels are 1..x-1
            long long lo = static_cast<long long>(q.left) * (q.left + 1) / 2;
            long long hi = static_cast<long long>(q.left) * (2 * (x - 1) - q.left + 1) / 2;
            if (q.need < lo || q.need > hi) { ok = false; break; }
        }
        if (ok && assign_label(x - 1, parts)) return true;
        p.members.pop_back();
        ++p.left;
        p.need += x;
    }
    return false;
}

}  // namespace

PartitionResult solve_partition(const std::vector<int>& sizes, int cap) {
    PartitionInstance inst = PartitionInstance::from_sizes(sizes);
    if (inst.n > cap) throw std::invalid_argument("partition instance exceeds cap");
    PartitionResult out;
    if (!necessary_mod(inst).pass) {
        out.status = PartitionResult::Status::infeasible_mod;
        return out;
    }
    if (!necessary_prefix(inst).pass) {
        out.status = PartitionResult::Status::infeasible_prefix;
        return out;
    }
    long long target = inst.target();
    std::vector<PartState> parts(inst.k);
    for (int i = 0; i < inst.k; ++i)
        parts[i] = {inst.sizes[i], inst.sizes[i], target, {}};
    if (!assign_label(inst.n, parts)) {
        out.status = PartitionResult::Status::exhausted;
        return out;
    }
    out.status = PartitionResult::Status::solved;
    // map solved parts (sorted sizes) back to the caller's size order
    std::vector<int> used(inst.k, 0);
    for (int size : sizes) {
        for (int i = 0; i < inst.k; ++i) {
            if (used[i] || parts[i].size != size) continue;
            used[i] = 1;
            auto members = parts[i].members;
            std::sort(members.begin(), members.end());
            out.parts.push_back(std::move(members));
            break;
        }
    }
    return out;
}

std::string PartitionResult::tag() const {
    switch (status) {
        case Status::solved: return "solved";
        case Status::infeasible_mod: return "mod";
        case Status::infeasible_prefix: return "prefix";
        default: return "exhausted";
    }
}

std::string PartitionResult::to_string() const {
    if (status != Status::solved) return "INFEASIBLE " + tag() + "\n";
    std::ostringstream s;
    for (const auto& part : parts) {
        s << part.size() << ":";
        for (int x : part) s << " " << x;
        s << "\n";
    }
    return s.str();
}

BlowUpLabelingResult blow_up_labeling(const Graph& base, const std::vector<int>& sizes) {
    if (!base.is_regular())
        throw std::invalid_argument("blow-up base must be regular");
    if (static_cast<int>(sizes.size()) != base.n())
        throw std::invalid_argument("one block size per base vertex required");
    BlowUpLabelingResult out;
    PartitionResult pr = solve_partition(sizes);
    if (!pr.solved()) {
        out.tag = "partition." + pr.tag();
        return out;
    }
    out.feasible = true;
    out.tag = "blowup.equal-sum";
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    out.labeling.values.reserve(total);
    for (const auto& part : pr.parts)
        for (int x : part) out.labeling.values.push_back(x);
    return out;
}

}  // namespace magiclab
