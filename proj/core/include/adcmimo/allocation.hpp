#ifndef ADCMIMO_ALLOCATION_HPP_
#define ADCMIMO_ALLOCATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "adcmimo/combiner.hpp"

namespace adcmimo {

/// ADC power model p(b) = c * f_s * 2^b per path.
struct PowerModel {
    double c = 1.0;   // power per conversion step
    double f_s = 1.0; // sampling rate
    double p_adc;     // total budget

    /// Budget of uniform 2-bit ADCs on all n paths: c * n * f_s * 2^2.
    static PowerModel default_budget(std::size_t n, double c = 1.0,
                                     double f_s = 1.0) {
        return PowerModel{c, f_s, c * double(n) * f_s * 4.0};
    }
};

double adc_power(int b, const PowerModel& pm);
double total_power(const BitAllocation& b, const PowerModel& pm);

/// All allocations in {1..4}^n within the power budget, lexicographic.
/// Throws BudgetTooSmallError if even the all-1 allocation is infeasible.
std::vector<BitAllocation> enumerate_bset(std::size_t n, const PowerModel& pm);

struct GaParams {
    std::size_t k = 64;   // initial population size
    std::size_t l = 4;    // max iterations
    double t = 0.001;     // fitness threshold
    double p_cross = 0.9; // crossover probability
    double p_mut = 0.1;   // per-gene mutation probability
    std::uint64_t seed = 0;

    static GaParams defaults_for(std::size_t n);
};

enum class HaltReason {
    threshold,
    exhausted_iterations,
    exhaustive,
    population_exhausted
};

std::string to_string(HaltReason r);

struct SearchOutcome {
    BitAllocation b_star;
    double j_star;
    std::size_t evaluations;
    HaltReason halted_by;
};

/// Exhaustive minimization of J over the feasible set; ties broken toward
/// the lexicographically smallest allocation.
SearchOutcome full_search(const ChannelMatrix& h, double p_u, double sigma2,
                          const PowerModel& pm);

/// Population search: seeded with the all-2 allocation plus k-1 distinct
/// uniform draws, grown by floor(|Ch|/2) members per iteration via
/// crossover/mutation with feasibility repair, falling back to uniform
/// draws from the complement set. Deterministic per GaParams::seed.
SearchOutcome ga_search(const ChannelMatrix& h, double p_u, double sigma2,
                        const PowerModel& pm, const GaParams& ga);

} // namespace adcmimo

#endif // ADCMIMO_ALLOCATION_HPP_
