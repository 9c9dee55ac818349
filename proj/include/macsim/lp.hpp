#ifndef MACSIM_LP_HPP
#define MACSIM_LP_HPP

#include <vector>

namespace macsim::lp {

enum class Sense { le, eq, ge };
enum class Status { optimal, infeasible, unbounded, numerical };

// minimize c.x subject to A x (<=,=,>=) b, x >= 0, dense rows.
struct Problem {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<Sense> senses;

    void add_row(std::vector<double> a, Sense s, double b) {
        rows.push_back(std::move(a));
        senses.push_back(s);
        rhs.push_back(b);
    }
};

struct Solution {
    Status status = Status::numerical;
    double objective = 0.0;
    std::vector<double> x;
    int iterations = 0;
};

// Two-phase dense simplex. Dantzig pricing with lowest-index tie breaks,
// permanent switch to Bland's rule if the objective stalls.
Solution solve(const Problem& p);

}  // namespace macsim::lp

#endif
