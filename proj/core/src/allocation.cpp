#include "adcmimo/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adcmimo/rng.hpp"

namespace adcmimo {

GaParams GaParams::defaults_for(std::size_t n) {
    GaParams ga;
    if (n >= 12) {
        ga.k = 400;
    } else {
        ga.k = 64;
    }
    ga.l = 4;
    ga.t = 0.001;
    return ga;
}

std::string to_string(HaltReason r) {
    switch (r) {
        case HaltReason::threshold: return "threshold";
        case HaltReason::exhausted_iterations: return "exhausted-iterations";
        case HaltReason::exhaustive: return "exhaustive";
        case HaltReason::population_exhausted: return "population-exhausted";
    }
    return "exhaustive";
}

double adc_power(int b, const PowerModel& pm) {
    if (b < 1) throw BadResolutionError("resolution must be >= 1");
    return pm.c * pm.f_s * std::exp2(double(b));
}

double total_power(const BitAllocation& b, const PowerModel& pm) {
    double total = 0.0;
    for (int bi : b.bits) total += adc_power(bi, pm);
    return total;
}

std::vector<BitAllocation> enumerate_bset(std::size_t n, const PowerModel& pm) {
    if (n < 1) throw DimensionError("n must be >= 1");
    const double unit = pm.c * pm.f_s;
    if (unit * 2.0 * double(n) > pm.p_adc) {
        throw BudgetTooSmallError("all-1 allocation exceeds the power budget");
    }
    std::vector<BitAllocation> out;
    std::vector<int> cur(n, 1);
    // depth-first lexicographic walk with a running power total
    auto rec = [&](auto&& self, std::size_t i, double used) -> void {
        if (i == n) {
            out.push_back(BitAllocation{cur});
            return;
        }
        const double remaining_min = unit * 2.0 * double(n - i - 1);
        for (int b = 1; b <= 4; ++b) {
            const double p = used + unit * std::exp2(double(b));
            if (p + remaining_min > pm.p_adc) break;
            cur[i] = b;
            self(self, i + 1, p);
        }
        cur[i] = 1;
    };
    rec(rec, 0, 0.0);
    return out;
}

SearchOutcome full_search(const ChannelMatrix& h, double p_u, double sigma2,
                          const PowerModel& pm) {
    const std::vector<BitAllocation> bset = enumerate_bset(h.n(), pm);
    double best_j = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < bset.size(); ++i) {
        const double j = cost_j(h, bset[i], p_u, sigma2);
        if (j < best_j) {
            best_j = j;
            best_i = i;
        }
    }
    return SearchOutcome{bset[best_i], best_j, bset.size(),
                         HaltReason::exhaustive};
}

namespace {

/// Complement set with O(1) uniform removal and index lookup.
class ComplementSet {
public:
    ComplementSet(std::size_t universe) : pos_(universe, kNone) {}

    void insert(std::size_t idx) {
        pos_[idx] = members_.size();
        members_.push_back(idx);
    }
    bool contains(std::size_t idx) const { return pos_[idx] != kNone; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    void remove(std::size_t idx) {
        const std::size_t p = pos_[idx];
        const std::size_t last = members_.back();
        members_[p] = last;
        pos_[last] = p;
        members_.pop_back();
        pos_[idx] = kNone;
    }

    std::size_t draw(Rng& rng) const { return members_[rng.below(members_.size())]; }

private:
    static constexpr std::size_t kNone = std::size_t(-1);
    std::vector<std::size_t> members_;
    std::vector<std::size_t> pos_;
};

std::size_t index_of(const std::vector<BitAllocation>& bset,
                     const BitAllocation& b) {
    const auto it = std::lower_bound(bset.begin(), bset.end(), b);
    return std::size_t(it - bset.begin());
}

/// Decrement the largest bit (first such index) until within budget.
void repair_to_budget(BitAllocation& b, const PowerModel& pm) {
    while (total_power(b, pm) > pm.p_adc) {
        std::size_t arg = 0;
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b.bits[i] > b.bits[arg]) arg = i;
        b.bits[arg] -= 1;
    }
}

} // namespace

SearchOutcome ga_search(const ChannelMatrix& h, double p_u, double sigma2,
                        const PowerModel& pm, const GaParams& ga) {
    const std::size_t n = h.n();
    const std::vector<BitAllocation> bset = enumerate_bset(n, pm);
    if (ga.k < 2 || ga.k > bset.size()) {
        throw ConfigError("initial population size must be in [2, |B_set|]");
    }
    if (!(ga.t > 0.0)) throw ConfigError("fitness threshold must be > 0");

    Rng rng(ga.seed);

    std::vector<std::size_t> ch; // population, insertion order
    std::vector<bool> in_ch(bset.size(), false);
    ComplementSet cset(bset.size());
    for (std::size_t i = 0; i < bset.size(); ++i) cset.insert(i);

    double best_j = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    std::size_t evaluations = 0;

    // evaluates one member; true when the threshold halt fires
    auto admit = [&](std::size_t idx) {
        cset.remove(idx);
        in_ch[idx] = true;
        ch.push_back(idx);
        const double j = cost_j(h, bset[idx], p_u, sigma2);
        ++evaluations;
        if (j < best_j || (j == best_j && bset[idx] < bset[best_i])) {
            best_j = j;
            best_i = idx;
        }
        return best_j <= ga.t;
    };

    auto outcome = [&](HaltReason r) {
        return SearchOutcome{bset[best_i], best_j, evaluations, r};
    };

    // all-2 anchor plus k-1 distinct uniform draws
    const std::size_t anchor = index_of(bset, BitAllocation::uniform(n, 2));
    if (admit(anchor)) return outcome(HaltReason::threshold);
    while (ch.size() < ga.k) {
        if (admit(cset.draw(rng))) return outcome(HaltReason::threshold);
    }

    for (std::size_t iter = 0; iter < ga.l; ++iter) {
        // disjoint random parent pairs
        std::vector<std::size_t> order = ch;
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[rng.below(i)]);
        }
        const std::size_t pairs = order.size() / 2;
        for (std::size_t p = 0; p < pairs; ++p) {
            std::size_t new_idx = std::size_t(-1);
            if (rng.bernoulli(ga.p_cross)) {
                const BitAllocation& pa = bset[order[2 * p]];
                const BitAllocation& pb = bset[order[2 * p + 1]];
                BitAllocation child = pa;
                if (n >= 2) {
                    const std::size_t cut = 1 + rng.below(n - 1);
                    for (std::size_t g = cut; g < n; ++g)
                        child.bits[g] = pb.bits[g];
                }
                for (std::size_t g = 0; g < n; ++g) {
                    if (rng.bernoulli(ga.p_mut)) {
                        child.bits[g] = 1 + int(rng.below(4));
                    }
                }
                repair_to_budget(child, pm);
                const std::size_t idx = index_of(bset, child);
                if (!in_ch[idx]) new_idx = idx;
            }
            if (new_idx == std::size_t(-1)) {
                if (cset.empty()) return outcome(HaltReason::population_exhausted);
                new_idx = cset.draw(rng);
            }
            if (admit(new_idx)) return outcome(HaltReason::threshold);
        }
    }
    return outcome(HaltReason::exhausted_iterations);
}

} // namespace adcmimo
