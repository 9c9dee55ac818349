#include "macsim/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace macsim {

namespace {

std::vector<int> sorted_permutation(const std::vector<std::string>& labels,
                                    const char* what) {
    std::vector<int> perm(labels.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return labels[a] < labels[b]; });
    for (size_t i = 1; i < perm.size(); ++i) {
        if (labels[perm[i - 1]] == labels[perm[i]]) {
            throw std::invalid_argument(std::string(what) + ": duplicate label '" +
                                        labels[perm[i]] + "'");
        }
    }
    return perm;
}

void check_entries(const std::vector<double>& v, const std::vector<std::string>& labels,
                   const char* what) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] >= 0.0) || !std::isfinite(v[i])) {
            throw std::invalid_argument(std::string(what) + ": entry for '" + labels[i] +
                                        "' is negative or non-finite");
        }
    }
}

double checked_sum(const std::vector<double>& v, const char* what, bool normalize) {
    double s = std::accumulate(v.begin(), v.end(), 0.0);
    if (!normalize && std::fabs(s - 1.0) > kSumTol) {
        throw std::invalid_argument(std::string(what) + ": probabilities sum to " +
                                    std::to_string(s) + ", expected 1 within 1e-9");
    }
    if (normalize && s <= 0.0) {
        throw std::invalid_argument(std::string(what) + ": cannot normalize zero mass");
    }
    return s;
}

}  // namespace

Pmf::Pmf(std::vector<std::string> alphabet, std::vector<double> probs, bool normalize) {
    if (alphabet.size() != probs.size() || alphabet.empty()) {
        throw std::invalid_argument("Pmf: alphabet/probs size mismatch or empty");
    }
    check_entries(probs, alphabet, "Pmf");
    double s = checked_sum(probs, "Pmf", normalize);
    auto perm = sorted_permutation(alphabet, "Pmf");
    alphabet_.reserve(perm.size());
    probs_.reserve(perm.size());
    for (int i : perm) {
        alphabet_.push_back(alphabet[i]);
        probs_.push_back(normalize ? probs[i] / s : probs[i]);
    }
}

Pmf Pmf::uniform(std::vector<std::string> alphabet) {
    std::vector<double> p(alphabet.size(), 1.0 / static_cast<double>(alphabet.size()));
    return Pmf(std::move(alphabet), std::move(p));
}

Pmf Pmf::point_mass(std::vector<std::string> alphabet, const std::string& atom) {
    std::vector<double> p(alphabet.size(), 0.0);
    bool found = false;
    for (size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i] == atom) {
            p[i] = 1.0;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("Pmf::point_mass: atom '" + atom + "' not in alphabet");
    return Pmf(std::move(alphabet), std::move(p));
}

int Pmf::index_of(const std::string& label) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), label);
    if (it == alphabet_.end() || *it != label) {
        throw std::invalid_argument("Pmf: label '" + label + "' not in alphabet");
    }
    return static_cast<int>(it - alphabet_.begin());
}

Channel::Channel(std::vector<std::string> input_alphabet,
                 std::vector<std::string> output_alphabet,
                 std::vector<std::vector<double>> rows, bool normalize) {
    if (rows.size() != input_alphabet.size() || input_alphabet.empty() ||
        output_alphabet.empty()) {
        throw std::invalid_argument("Channel: row count does not match input alphabet");
    }
    auto in_perm = sorted_permutation(input_alphabet, "Channel input");
    auto out_perm = sorted_permutation(output_alphabet, "Channel output");
    input_alphabet_.reserve(in_perm.size());
    for (int i : in_perm) input_alphabet_.push_back(input_alphabet[i]);
    output_alphabet_.reserve(out_perm.size());
    for (int j : out_perm) output_alphabet_.push_back(output_alphabet[j]);
    rows_.reserve(rows.size());
    for (int i : in_perm) {
        const auto& r = rows[i];
        if (r.size() != output_alphabet.size()) {
            throw std::invalid_argument("Channel: row for input '" + input_alphabet[i] +
                                        "' has wrong length");
        }
        check_entries(r, output_alphabet, "Channel row");
        double s = checked_sum(r, ("Channel row '" + input_alphabet[i] + "'").c_str(),
                               normalize);
        std::vector<double> sorted_row;
        sorted_row.reserve(r.size());
        for (int j : out_perm) sorted_row.push_back(normalize ? r[j] / s : r[j]);
        rows_.push_back(std::move(sorted_row));
    }
}

Channel Channel::identity(std::vector<std::string> alphabet) {
    int n = static_cast<int>(alphabet.size());
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1.0;
    return Channel(alphabet, alphabet, std::move(rows));
}

Channel Channel::constant(std::vector<std::string> input_alphabet, Pmf output) {
    std::vector<std::vector<double>> rows(input_alphabet.size(), output.probs());
    return Channel(std::move(input_alphabet), output.alphabet(), std::move(rows));
}

int Channel::input_index(const std::string& label) const {
    auto it = std::lower_bound(input_alphabet_.begin(), input_alphabet_.end(), label);
    if (it == input_alphabet_.end() || *it != label) {
        throw std::invalid_argument("Channel: input label '" + label + "' not found");
    }
    return static_cast<int>(it - input_alphabet_.begin());
}

MacChannel::MacChannel(std::vector<std::string> x1_alphabet,
                       std::vector<std::string> x2_alphabet,
                       std::vector<std::string> y_alphabet, std::vector<double> probs,
                       bool normalize) {
    size_t expect = x1_alphabet.size() * x2_alphabet.size() * y_alphabet.size();
    if (probs.size() != expect || expect == 0) {
        throw std::invalid_argument("MacChannel: tensor size mismatch");
    }
    auto p1 = sorted_permutation(x1_alphabet, "MacChannel x1");
    auto p2 = sorted_permutation(x2_alphabet, "MacChannel x2");
    auto py = sorted_permutation(y_alphabet, "MacChannel y");
    int n2v = static_cast<int>(x2_alphabet.size());
    int nyv = static_cast<int>(y_alphabet.size());
    probs_.resize(expect);
    for (size_t a = 0; a < p1.size(); ++a) {
        for (size_t b = 0; b < p2.size(); ++b) {
            std::vector<double> row(nyv);
            for (size_t c = 0; c < py.size(); ++c) {
                row[c] = probs[(p1[a] * n2v + p2[b]) * nyv + py[c]];
            }
            check_entries(row, y_alphabet, "MacChannel row");
            std::string where = "MacChannel row (" + x1_alphabet[p1[a]] + "," +
                                x2_alphabet[p2[b]] + ")";
            double s = checked_sum(row, where.c_str(), normalize);
            for (size_t c = 0; c < py.size(); ++c) {
                probs_[(a * p2.size() + b) * py.size() + c] = normalize ? row[c] / s : row[c];
            }
        }
    }
    x1_.reserve(p1.size());
    for (int i : p1) x1_.push_back(x1_alphabet[i]);
    x2_.reserve(p2.size());
    for (int i : p2) x2_.push_back(x2_alphabet[i]);
    y_.reserve(py.size());
    for (int i : py) y_.push_back(y_alphabet[i]);
}

std::vector<double> MacChannel::row(int i1, int i2) const {
    std::vector<double> r(ny());
    for (int c = 0; c < ny(); ++c) r[c] = prob(i1, i2, c);
    return r;
}

Joint::Joint(std::vector<std::vector<std::string>> axes, std::vector<double> probs,
             bool validate)
    : axes_(std::move(axes)), probs_(std::move(probs)) {
    size_t expect = 1;
    for (const auto& a : axes_) expect *= a.size();
    if (probs_.size() != expect || expect == 0) {
        throw std::invalid_argument("Joint: tensor size mismatch");
    }
    strides_.assign(axes_.size(), 1);
    for (int a = static_cast<int>(axes_.size()) - 2; a >= 0; --a) {
        strides_[a] = strides_[a + 1] * static_cast<int>(axes_[a + 1].size());
    }
    if (validate) {
        double s = 0.0;
        for (double v : probs_) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument("Joint: negative or non-finite entry");
            }
            s += v;
        }
        if (std::fabs(s - 1.0) > kSumTol) {
            throw std::invalid_argument("Joint: total mass " + std::to_string(s) +
                                        " not 1 within 1e-9");
        }
    }
}

double Joint::prob(const std::vector<int>& idx) const {
    int flat = 0;
    for (size_t a = 0; a < idx.size(); ++a) flat += idx[a] * strides_[a];
    return probs_[flat];
}

Joint Joint::marginal(const std::vector<int>& keep_axes) const {
    std::vector<std::vector<std::string>> new_axes;
    for (int a : keep_axes) new_axes.push_back(axes_[a]);
    size_t out_size = 1;
    for (const auto& ax : new_axes) out_size *= ax.size();
    std::vector<double> out(out_size, 0.0);
    int total = static_cast<int>(probs_.size());
    for (int flat = 0; flat < total; ++flat) {
        int out_flat = 0;
        for (int a : keep_axes) {
            int coord = (flat / strides_[a]) % static_cast<int>(axes_[a].size());
            out_flat = out_flat * static_cast<int>(axes_[a].size()) + coord;
        }
        out[out_flat] += probs_[flat];
    }
    return Joint(std::move(new_axes), std::move(out), false);
}

Pmf Joint::marginal_pmf(int axis) const {
    Joint m = marginal({axis});
    return Pmf(m.axes()[0], m.probs(), true);
}

std::string composite_label(const std::string& u1, const std::string& u2) {
    if (u1.find('|') != std::string::npos || u2.find('|') != std::string::npos) {
        throw std::invalid_argument("composite_label: labels may not contain '|'");
    }
    return u1 + "|" + u2;
}

Channel flatten_decoder(const std::vector<std::string>& u1_alphabet,
                        const std::vector<std::string>& u2_alphabet,
                        const std::vector<std::string>& y_alphabet,
                        const std::vector<std::vector<double>>& rows_rowmajor) {
    if (rows_rowmajor.size() != u1_alphabet.size() * u2_alphabet.size()) {
        throw std::invalid_argument("flatten_decoder: row count mismatch");
    }
    std::vector<std::string> labels;
    labels.reserve(rows_rowmajor.size());
    for (const auto& u1 : u1_alphabet) {
        for (const auto& u2 : u2_alphabet) labels.push_back(composite_label(u1, u2));
    }
    return Channel(std::move(labels), y_alphabet, rows_rowmajor);
}

std::vector<std::vector<int>> decoder_index_map(const Channel& decoder,
                                                const std::vector<std::string>& u1_alphabet,
                                                const std::vector<std::string>& u2_alphabet) {
    std::vector<std::vector<int>> idx(u1_alphabet.size(),
                                      std::vector<int>(u2_alphabet.size()));
    for (size_t a = 0; a < u1_alphabet.size(); ++a) {
        for (size_t b = 0; b < u2_alphabet.size(); ++b) {
            idx[a][b] = decoder.input_index(composite_label(u1_alphabet[a], u2_alphabet[b]));
        }
    }
    return idx;
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: length mismatch");
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
    return 0.5 * s;
}

double tv_distance(const Pmf& p, const Pmf& q) {
    if (p.alphabet() != q.alphabet()) {
        for (size_t i = 0; i < std::min(p.alphabet().size(), q.alphabet().size()); ++i) {
            if (p.alphabet()[i] != q.alphabet()[i]) {
                throw std::invalid_argument("tv_distance: alphabet mismatch at '" +
                                            p.alphabet()[i] + "' vs '" + q.alphabet()[i] +
                                            "'");
            }
        }
        throw std::invalid_argument("tv_distance: alphabet size mismatch");
    }
    return tv_distance(p.probs(), q.probs());
}

double channel_tv(const Channel& a, const Channel& b, const TvMode& mode) {
    if (a.input_alphabet() != b.input_alphabet() ||
        a.output_alphabet() != b.output_alphabet()) {
        throw std::invalid_argument("channel_tv: channels do not share alphabets");
    }
    if (mode.max_mode) {
        double worst = 0.0;
        for (int i = 0; i < a.num_inputs(); ++i) {
            worst = std::max(worst, tv_distance(a.row(i), b.row(i)));
        }
        return worst;
    }
    if (!mode.input || mode.input->alphabet() != a.input_alphabet()) {
        throw std::invalid_argument("channel_tv: average mode needs input over the shared alphabet");
    }
    double acc = 0.0;
    for (int i = 0; i < a.num_inputs(); ++i) {
        double w = (*mode.input)[i];
        if (w > 0.0) acc += w * tv_distance(a.row(i), b.row(i));
    }
    return acc;
}

Pmf push_forward(const Channel& w, const Pmf& p) {
    if (w.input_alphabet() != p.alphabet()) {
        throw std::invalid_argument("push_forward: input alphabet mismatch");
    }
    std::vector<double> out(w.num_outputs(), 0.0);
    for (int i = 0; i < w.num_inputs(); ++i) {
        for (int j = 0; j < w.num_outputs(); ++j) out[j] += p[i] * w.row(i)[j];
    }
    return Pmf(w.output_alphabet(), std::move(out), true);
}

MacChannel compose_decomposition(const Decomposition& d) {
    const auto& u1 = d.aux1.output_alphabet();
    const auto& u2 = d.aux2.output_alphabet();
    auto idx = decoder_index_map(d.decoder, u1, u2);
    int n1 = d.aux1.num_inputs(), n2 = d.aux2.num_inputs(),
        ny = d.decoder.num_outputs();
    std::vector<double> probs(static_cast<size_t>(n1) * n2 * ny, 0.0);
    for (int i1 = 0; i1 < n1; ++i1) {
        for (int i2 = 0; i2 < n2; ++i2) {
            for (size_t a = 0; a < u1.size(); ++a) {
                double w1 = d.aux1.row(i1)[a];
                if (w1 <= 0.0) continue;
                for (size_t b = 0; b < u2.size(); ++b) {
                    double w = w1 * d.aux2.row(i2)[b];
                    if (w <= 0.0) continue;
                    const auto& dec = d.decoder.row(idx[a][b]);
                    for (int c = 0; c < ny; ++c) {
                        probs[(i1 * n2 + i2) * ny + c] += w * dec[c];
                    }
                }
            }
        }
    }
    return MacChannel(d.aux1.input_alphabet(), d.aux2.input_alphabet(),
                      d.decoder.output_alphabet(), std::move(probs), true);
}

Joint mac_joint(const Pmf& q1, const Pmf& q2, const MacChannel& m) {
    if (q1.alphabet() != m.x1_alphabet() || q2.alphabet() != m.x2_alphabet()) {
        throw std::invalid_argument("mac_joint: input alphabets do not match the MAC");
    }
    std::vector<double> probs(static_cast<size_t>(m.n1()) * m.n2() * m.ny());
    for (int i1 = 0; i1 < m.n1(); ++i1) {
        for (int i2 = 0; i2 < m.n2(); ++i2) {
            for (int c = 0; c < m.ny(); ++c) {
                probs[(i1 * m.n2() + i2) * m.ny() + c] = q1[i1] * q2[i2] * m.prob(i1, i2, c);
            }
        }
    }
    return Joint({m.x1_alphabet(), m.x2_alphabet(), m.y_alphabet()}, std::move(probs));
}

Joint induced_joint(const Pmf& q1, const Pmf& q2, const Decomposition& d) {
    return mac_joint(q1, q2, compose_decomposition(d));
}

double mac_tv(const MacChannel& a, const MacChannel& b, ResidualMode mode, const Pmf* q1,
              const Pmf* q2) {
    if (a.x1_alphabet() != b.x1_alphabet() || a.x2_alphabet() != b.x2_alphabet() ||
        a.y_alphabet() != b.y_alphabet()) {
        throw std::invalid_argument("mac_tv: MACs do not share alphabets");
    }
    double acc = 0.0;
    for (int i1 = 0; i1 < a.n1(); ++i1) {
        for (int i2 = 0; i2 < a.n2(); ++i2) {
            double d = tv_distance(a.row(i1, i2), b.row(i1, i2));
            if (mode == ResidualMode::max) {
                acc = std::max(acc, d);
            } else {
                if (!q1 || !q2) {
                    throw std::invalid_argument("mac_tv: average mode needs both inputs");
                }
                acc += (*q1)[i1] * (*q2)[i2] * d;
            }
        }
    }
    return acc;
}

}  // namespace macsim
