#include "macsim/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace macsim {

namespace {

// admissible rows: all inputs (channel variant) or supp(input) (state variant)
std::vector<int> admissible_rows(const Channel& w, const SmoothingSpec& spec) {
    std::vector<int> rows;
    for (int i = 0; i < w.num_inputs(); ++i) {
        if (spec.channel_variant || spec.input->in_support(i)) rows.push_back(i);
    }
    return rows;
}

}  // namespace

void SmoothingSpec::validate(const Channel& w) const {
    if (epsilon < 0.0 || epsilon >= 1.0) {
        throw std::invalid_argument("SmoothingSpec: epsilon must lie in [0,1)");
    }
    if (!channel_variant) {
        if (!input) throw std::invalid_argument("SmoothingSpec: state variant needs an input");
        if (input->alphabet() != w.input_alphabet()) {
            throw std::invalid_argument("SmoothingSpec: input alphabet does not match channel");
        }
    }
}

double dmax(const Pmf& p, const Pmf& q) {
    if (p.alphabet() != q.alphabet()) {
        throw std::invalid_argument("dmax: alphabet mismatch");
    }
    double worst = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] <= kSupportCutoff) continue;
        if (q[i] <= kSupportCutoff) {
            throw std::invalid_argument("dmax: support violation at symbol '" +
                                        p.alphabet()[i] + "'");
        }
        worst = std::max(worst, p[i] / q[i]);
    }
    return worst > 0.0 ? std::log2(worst) : 0.0;
}

double imax_channel(const Channel& w) {
    double total = 0.0;
    for (int j = 0; j < w.num_outputs(); ++j) {
        double m = 0.0;
        for (int i = 0; i < w.num_inputs(); ++i) m = std::max(m, w.row(i)[j]);
        total += m;
    }
    return std::log2(total);
}

double imax_state(const Channel& w, const Pmf& input) {
    if (input.alphabet() != w.input_alphabet()) {
        throw std::invalid_argument("imax_state: input alphabet mismatch");
    }
    double total = 0.0;
    for (int j = 0; j < w.num_outputs(); ++j) {
        double m = 0.0;
        for (int i = 0; i < w.num_inputs(); ++i) {
            if (input.in_support(i)) m = std::max(m, w.row(i)[j]);
        }
        total += m;
    }
    return std::log2(total);
}

// Variables: p'(y|x) for admissible x, t(y|x) >= (p'-p)_+, and the output
// envelope m(y).  Since both p and p' are row-stochastic,
// sum_y |p'-p| = 2 sum_y (p'-p)_+, so one-sided slacks linearize the TV ball.
SmoothedResult smooth_imax(const Channel& w, const SmoothingSpec& spec) {
    spec.validate(w);
    auto adm = admissible_rows(w, spec);
    if (adm.empty()) throw std::invalid_argument("smooth_imax: no admissible inputs");
    int na = static_cast<int>(adm.size());
    int ny = w.num_outputs();

    int p_base = 0;
    int t_base = na * ny;
    int m_base = 2 * na * ny;
    int nv = 2 * na * ny + ny;
    lp::Problem lp;
    lp.num_vars = nv;
    lp.objective.assign(nv, 0.0);
    for (int j = 0; j < ny; ++j) lp.objective[m_base + j] = 1.0;

    for (int a = 0; a < na; ++a) {
        std::vector<double> row(nv, 0.0);
        for (int j = 0; j < ny; ++j) row[p_base + a * ny + j] = 1.0;
        lp.add_row(std::move(row), lp::Sense::eq, 1.0);
    }
    for (int a = 0; a < na; ++a) {
        const auto& orig = w.row(adm[a]);
        for (int j = 0; j < ny; ++j) {
            std::vector<double> row(nv, 0.0);
            row[p_base + a * ny + j] = 1.0;
            row[t_base + a * ny + j] = -1.0;
            lp.add_row(std::move(row), lp::Sense::le, orig[j]);
        }
    }
    if (spec.channel_variant) {
        for (int a = 0; a < na; ++a) {
            std::vector<double> row(nv, 0.0);
            for (int j = 0; j < ny; ++j) row[t_base + a * ny + j] = 1.0;
            lp.add_row(std::move(row), lp::Sense::le, spec.epsilon);
        }
    } else {
        std::vector<double> row(nv, 0.0);
        for (int a = 0; a < na; ++a) {
            double weight = (*spec.input)[adm[a]];
            for (int j = 0; j < ny; ++j) row[t_base + a * ny + j] = weight;
        }
        lp.add_row(std::move(row), lp::Sense::le, spec.epsilon);
    }
    for (int a = 0; a < na; ++a) {
        for (int j = 0; j < ny; ++j) {
            std::vector<double> row(nv, 0.0);
            row[p_base + a * ny + j] = 1.0;
            row[m_base + j] = -1.0;
            lp.add_row(std::move(row), lp::Sense::le, 0.0);
        }
    }

    lp::Solution sol = lp::solve(lp);
    SmoothedResult out;
    out.lp_status = sol.status;
    if (sol.status != lp::Status::optimal) {
        out.smoothed_channel = w;
        out.reference = Pmf::uniform(w.output_alphabet());
        out.value = imax_channel(w);
        return out;
    }

    std::vector<double> mstar(ny);
    double total = 0.0;
    for (int j = 0; j < ny; ++j) {
        mstar[j] = std::max(sol.x[m_base + j], 0.0);
        total += mstar[j];
    }
    out.value = std::log2(total);

    std::vector<double> ref(ny);
    for (int j = 0; j < ny; ++j) ref[j] = mstar[j] / total;
    out.reference = Pmf(w.output_alphabet(), std::move(ref), true);

    std::vector<std::vector<double>> rows(w.num_inputs());
    for (int i = 0; i < w.num_inputs(); ++i) rows[i] = out.reference.probs();
    for (int a = 0; a < na; ++a) {
        std::vector<double> r(ny);
        double s = 0.0;
        for (int j = 0; j < ny; ++j) {
            r[j] = std::max(sol.x[p_base + a * ny + j], 0.0);
            s += r[j];
        }
        for (int j = 0; j < ny; ++j) r[j] /= s;
        rows[adm[a]] = std::move(r);
    }
    out.smoothed_channel = Channel(w.input_alphabet(), w.output_alphabet(), std::move(rows));

    // self-certify: ball membership and value recomputation
    double ball;
    if (spec.channel_variant) {
        ball = channel_tv(out.smoothed_channel, w, TvMode::max());
    } else {
        ball = 0.0;
        for (int a = 0; a < na; ++a) {
            ball += (*spec.input)[adm[a]] *
                    tv_distance(out.smoothed_channel.row(adm[a]), w.row(adm[a]));
        }
    }
    double check = 0.0;
    for (int j = 0; j < ny; ++j) {
        double m = 0.0;
        for (int a = 0; a < na; ++a) m = std::max(m, out.smoothed_channel.row(adm[a])[j]);
        check += m;
    }
    if (ball > spec.epsilon + 1e-7 || std::fabs(std::log2(check) - out.value) > 1e-7) {
        out.lp_status = lp::Status::numerical;
    }
    return out;
}

double mutual_information(const Joint& j) {
    if (j.num_axes() != 2) throw std::invalid_argument("mutual_information: need a two-axis joint");
    int na = j.axis_size(0), nb = j.axis_size(1);
    std::vector<double> pa(na, 0.0), pb(nb, 0.0);
    const auto& p = j.probs();
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) {
            pa[a] += p[a * nb + b];
            pb[b] += p[a * nb + b];
        }
    }
    double total = 0.0;
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) {
            double v = p[a * nb + b];
            if (v > kSupportCutoff) total += v * std::log2(v / (pa[a] * pb[b]));
        }
    }
    return std::max(total, 0.0);
}

CapacityResult max_mutual_information(const Channel& w) {
    int nx = w.num_inputs(), ny = w.num_outputs();
    std::vector<double> p(nx, 1.0 / nx);
    CapacityResult res;
    double prev = -1.0;
    const int cap = 10000;
    int it = 0;
    for (it = 0; it < cap; ++it) {
        std::vector<double> q(ny, 0.0);
        for (int i = 0; i < nx; ++i) {
            for (int j = 0; j < ny; ++j) q[j] += p[i] * w.row(i)[j];
        }
        std::vector<double> d(nx, 0.0);
        double lower = 0.0, upper = 0.0;
        for (int i = 0; i < nx; ++i) {
            for (int j = 0; j < ny; ++j) {
                double v = w.row(i)[j];
                if (v > kSupportCutoff && q[j] > 0.0) d[i] += v * std::log2(v / q[j]);
            }
            lower += p[i] * d[i];
            upper = std::max(upper, d[i]);
        }
        res.value = lower;
        if (upper - lower < 1e-10 || (it > 0 && std::fabs(lower - prev) < 1e-9)) {
            ++it;
            break;
        }
        prev = lower;
        double norm = 0.0;
        for (int i = 0; i < nx; ++i) {
            p[i] *= std::exp2(d[i]);
            norm += p[i];
        }
        for (int i = 0; i < nx; ++i) p[i] /= norm;
    }
    res.iterations = it;
    res.converged = it < cap;
    res.argmax_input = Pmf(w.input_alphabet(), std::move(p), true);
    res.value = std::max(res.value, 0.0);
    return res;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double shannon_entropy(const Pmf& p) {
    double h = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] > kSupportCutoff) h -= p[i] * std::log2(p[i]);
    }
    return h;
}

}  // namespace macsim
