#ifndef MACSIM_PROBABILITY_HPP
#define MACSIM_PROBABILITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace macsim {

inline constexpr double kSumTol = 1e-9;      // absolute tolerance on probability sums
inline constexpr double kSupportCutoff = 1e-15;  // entries below this count as zero

// Finite probability vector over a lexicographically sorted label alphabet.
class Pmf {
public:
    Pmf() = default;
    Pmf(std::vector<std::string> alphabet, std::vector<double> probs, bool normalize = false);

    static Pmf uniform(std::vector<std::string> alphabet);
    static Pmf point_mass(std::vector<std::string> alphabet, const std::string& atom);

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::vector<double>& probs() const { return probs_; }
    int size() const { return static_cast<int>(probs_.size()); }
    double operator[](int i) const { return probs_[i]; }
    double prob(const std::string& label) const { return probs_[index_of(label)]; }
    int index_of(const std::string& label) const;  // throws if absent
    bool in_support(int i) const { return probs_[i] > kSupportCutoff; }

private:
    std::vector<std::string> alphabet_;
    std::vector<double> probs_;
};

// Row-stochastic conditional distribution p(out|in); one row per input symbol.
class Channel {
public:
    Channel() = default;
    Channel(std::vector<std::string> input_alphabet, std::vector<std::string> output_alphabet,
            std::vector<std::vector<double>> rows, bool normalize = false);

    static Channel identity(std::vector<std::string> alphabet);
    static Channel constant(std::vector<std::string> input_alphabet, Pmf output);

    const std::vector<std::string>& input_alphabet() const { return input_alphabet_; }
    const std::vector<std::string>& output_alphabet() const { return output_alphabet_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    int num_inputs() const { return static_cast<int>(rows_.size()); }
    int num_outputs() const { return static_cast<int>(output_alphabet_.size()); }
    const std::vector<double>& row(int i) const { return rows_[i]; }
    Pmf row_pmf(int i) const { return Pmf(output_alphabet_, rows_[i]); }
    int input_index(const std::string& label) const;

private:
    std::vector<std::string> input_alphabet_;
    std::vector<std::string> output_alphabet_;
    std::vector<std::vector<double>> rows_;
};

// p(y|x1,x2) indexed by input pairs.
class MacChannel {
public:
    MacChannel() = default;
    MacChannel(std::vector<std::string> x1_alphabet, std::vector<std::string> x2_alphabet,
               std::vector<std::string> y_alphabet, std::vector<double> probs,
               bool normalize = false);  // probs row-major over (x1, x2, y)

    const std::vector<std::string>& x1_alphabet() const { return x1_; }
    const std::vector<std::string>& x2_alphabet() const { return x2_; }
    const std::vector<std::string>& y_alphabet() const { return y_; }
    int n1() const { return static_cast<int>(x1_.size()); }
    int n2() const { return static_cast<int>(x2_.size()); }
    int ny() const { return static_cast<int>(y_.size()); }
    double prob(int i1, int i2, int iy) const { return probs_[(i1 * n2() + i2) * ny() + iy]; }
    std::vector<double> row(int i1, int i2) const;
    const std::vector<double>& flat() const { return probs_; }

private:
    std::vector<std::string> x1_, x2_, y_;
    std::vector<double> probs_;
};

// Dense joint distribution over an ordered list of alphabets.
class Joint {
public:
    Joint() = default;
    Joint(std::vector<std::vector<std::string>> axes, std::vector<double> probs,
          bool validate = true);

    const std::vector<std::vector<std::string>>& axes() const { return axes_; }
    const std::vector<double>& probs() const { return probs_; }
    int num_axes() const { return static_cast<int>(axes_.size()); }
    int axis_size(int a) const { return static_cast<int>(axes_[a].size()); }

    double prob(const std::vector<int>& idx) const;
    Joint marginal(const std::vector<int>& keep_axes) const;
    Pmf marginal_pmf(int axis) const;

private:
    std::vector<std::vector<std::string>> axes_;
    std::vector<double> probs_;
    std::vector<int> strides_;
};

// Auxiliary-channel factorization of a MAC: (X1,X2) -> (U1,U2) -> Y.
// The decoder is a flattened channel whose inputs are "<u1>|<u2>" labels.
enum class ResidualMode { average, max };

struct Decomposition {
    Channel aux1;     // p(u1|x1)
    Channel aux2;     // p(u2|x2)
    Channel decoder;  // p(y|u1,u2), composite input labels
    double residual = 0.0;
    ResidualMode residual_mode = ResidualMode::average;
};

std::string composite_label(const std::string& u1, const std::string& u2);
Channel flatten_decoder(const std::vector<std::string>& u1_alphabet,
                        const std::vector<std::string>& u2_alphabet,
                        const std::vector<std::string>& y_alphabet,
                        const std::vector<std::vector<double>>& rows_rowmajor);
// decoder row index for (u1 index, u2 index), precomputed lookup
std::vector<std::vector<int>> decoder_index_map(const Channel& decoder,
                                                const std::vector<std::string>& u1_alphabet,
                                                const std::vector<std::string>& u2_alphabet);

double tv_distance(const Pmf& p, const Pmf& q);
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

struct TvMode {
    bool max_mode = true;
    std::optional<Pmf> input;  // required in average mode
    static TvMode max() { return TvMode{true, std::nullopt}; }
    static TvMode average(Pmf in) { return TvMode{false, std::move(in)}; }
};

double channel_tv(const Channel& a, const Channel& b, const TvMode& mode);

// Output distribution of a channel fed with p.
Pmf push_forward(const Channel& w, const Pmf& p);

// q1(x1) q2(x2) sum_{u1,u2} p(u1|x1) p(u2|x2) p(y|u1,u2), dense over (X1,X2,Y).
Joint induced_joint(const Pmf& q1, const Pmf& q2, const Decomposition& d);
// q1(x1) q2(x2) m(y|x1,x2)
Joint mac_joint(const Pmf& q1, const Pmf& q2, const MacChannel& m);
// p(y|x1,x2) = sum_{u1,u2} p(u1|x1) p(u2|x2) p(y|u1,u2)
MacChannel compose_decomposition(const Decomposition& d);
// total variation between two MACs under a mode (average needs q1 x q2)
double mac_tv(const MacChannel& a, const MacChannel& b, ResidualMode mode,
              const Pmf* q1 = nullptr, const Pmf* q2 = nullptr);

}  // namespace macsim

#endif
