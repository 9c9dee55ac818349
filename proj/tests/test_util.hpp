#ifndef MACSIM_TEST_UTIL_HPP
#define MACSIM_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "macsim/probability.hpp"
#include "macsim/rng.hpp"

namespace macsim::testutil {

inline std::vector<std::string> make_labels(const std::string& prefix, int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::string num = std::to_string(i);
        if (n > 10 && num.size() < 2) num = "0" + num;
        out.push_back(prefix + num);
    }
    return out;
}

inline std::vector<double> random_simplex(int n, Rng& rng) {
    // Dirichlet(1): normalized exponentials
    std::vector<double> v(n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = rng.next_double();
        v[i] = -std::log(1.0 - u) + 1e-12;
        s += v[i];
    }
    for (int i = 0; i < n; ++i) v[i] /= s;
    return v;
}

inline Pmf random_pmf(const std::string& prefix, int n, Rng& rng) {
    return Pmf(make_labels(prefix, n), random_simplex(n, rng), true);
}

inline Channel random_channel(const std::string& in_prefix, int nin,
                              const std::string& out_prefix, int nout, Rng& rng) {
    std::vector<std::vector<double>> rows;
    rows.reserve(nin);
    for (int i = 0; i < nin; ++i) rows.push_back(random_simplex(nout, rng));
    return Channel(make_labels(in_prefix, nin), make_labels(out_prefix, nout),
                   std::move(rows), true);
}

inline MacChannel random_mac(int n1, int n2, int ny, Rng& rng) {
    std::vector<double> probs;
    probs.reserve(n1 * n2 * ny);
    for (int i = 0; i < n1 * n2; ++i) {
        auto row = random_simplex(ny, rng);
        probs.insert(probs.end(), row.begin(), row.end());
    }
    return MacChannel(make_labels("a", n1), make_labels("b", n2), make_labels("y", ny),
                      std::move(probs), true);
}

inline Channel bsc(double flip) {
    return Channel({"0", "1"}, {"0", "1"},
                   {{1.0 - flip, flip}, {flip, 1.0 - flip}});
}

// XOR MAC over binary inputs
inline MacChannel xor_mac() {
    std::vector<double> probs = {
        // (0,0): y=0 ; (0,1): y=1 ; (1,0): y=1 ; (1,1): y=0
        1, 0, 0, 1, 0, 1, 1, 0,
    };
    return MacChannel({"0", "1"}, {"0", "1"}, {"0", "1"}, std::move(probs));
}

inline Decomposition xor_decomposition() {
    Decomposition d;
    d.aux1 = Channel::identity({"0", "1"});
    d.aux2 = Channel::identity({"0", "1"});
    d.decoder = flatten_decoder({"0", "1"}, {"0", "1"}, {"0", "1"},
                                {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
    d.residual = 0.0;
    return d;
}

}  // namespace macsim::testutil

#endif
