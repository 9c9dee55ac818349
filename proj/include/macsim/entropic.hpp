#ifndef MACSIM_ENTROPIC_HPP
#define MACSIM_ENTROPIC_HPP

#include <optional>

#include "macsim/lp.hpp"
#include "macsim/probability.hpp"

namespace macsim {

// Smoothing ball selector. The state variant smooths under an average-TV
// constraint weighted by the given input; the channel variant constrains
// every row.
struct SmoothingSpec {
    double epsilon = 0.0;
    bool channel_variant = true;
    std::optional<Pmf> input;  // state variant only

    static SmoothingSpec channel(double eps) { return SmoothingSpec{eps, true, std::nullopt}; }
    static SmoothingSpec state(double eps, Pmf in) {
        return SmoothingSpec{eps, false, std::move(in)};
    }
    void validate(const Channel& w) const;
};

struct SmoothedResult {
    double value = 0.0;        // bits
    Channel smoothed_channel;  // optimizer p'
    Pmf reference;             // optimizer reference over outputs
    lp::Status lp_status = lp::Status::optimal;
};

// log2 max_{x in supp(p)} p(x)/q(x); requires supp(p) within supp(q).
double dmax(const Pmf& p, const Pmf& q);

// log2 sum_y max_x w(y|x); channel form maxes over all inputs,
// state form over the support of the input.
double imax_channel(const Channel& w);
double imax_state(const Channel& w, const Pmf& input);

// Linear program for the smoothed quantity; exact at epsilon = 0.
SmoothedResult smooth_imax(const Channel& w, const SmoothingSpec& spec);

// Shannon mutual information of a two-axis joint, bits.
double mutual_information(const Joint& j);

struct CapacityResult {
    double value = 0.0;
    Pmf argmax_input;
    int iterations = 0;
    bool converged = true;
};

// Alternating-maximization (capacity) fixed point over input distributions.
CapacityResult max_mutual_information(const Channel& w);

double binary_entropy(double p);
double shannon_entropy(const Pmf& p);

}  // namespace macsim

#endif
