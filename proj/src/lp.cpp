#include "macsim/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace macsim::lp {

namespace {

constexpr double kEps = 1e-9;
constexpr double kPivotEps = 1e-10;

class Simplex {
public:
    explicit Simplex(const Problem& p) : n_struct_(p.num_vars) {
        if (static_cast<int>(p.objective.size()) != p.num_vars) {
            throw std::invalid_argument("lp: objective length mismatch");
        }
        m_ = static_cast<int>(p.rows.size());
        int n_slack = 0;
        for (Sense s : p.senses) {
            if (s != Sense::eq) ++n_slack;
        }
        n_real_ = n_struct_ + n_slack;          // structural + slack/surplus
        width_ = n_real_ + m_;                  // room for up to m_ artificials
        T_.assign(m_, std::vector<double>(width_, 0.0));
        b_.assign(m_, 0.0);
        basis_.assign(m_, -1);

        int slack_at = n_struct_;
        for (int i = 0; i < m_; ++i) {
            if (static_cast<int>(p.rows[i].size()) != p.num_vars) {
                throw std::invalid_argument("lp: row length mismatch");
            }
            double sign = p.rhs[i] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < n_struct_; ++j) T_[i][j] = sign * p.rows[i][j];
            b_[i] = sign * p.rhs[i];
            Sense s = p.senses[i];
            if (sign < 0.0) {
                if (s == Sense::le) s = Sense::ge;
                else if (s == Sense::ge) s = Sense::le;
            }
            if (s != Sense::eq) {
                T_[i][slack_at] = (s == Sense::le) ? 1.0 : -1.0;
                if (s == Sense::le) basis_[i] = slack_at;
                ++slack_at;
            }
        }
        n_art_ = 0;
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < 0) {
                int col = n_real_ + n_art_++;
                T_[i][col] = 1.0;
                basis_[i] = col;
            }
        }
        n_total_ = n_real_ + n_art_;
        cost_ = p.objective;
        cost_.resize(n_total_, 0.0);
    }

    Solution run() {
        Solution sol;
        if (n_art_ > 0) {
            std::vector<double> phase1(n_total_, 0.0);
            for (int j = n_real_; j < n_total_; ++j) phase1[j] = 1.0;
            in_phase2_ = false;
            build_objective(phase1);
            if (!iterate(sol)) return sol;
            if (obj_value() > 1e-7) {
                sol.status = Status::infeasible;
                return sol;
            }
            expel_artificials();
        }
        in_phase2_ = true;
        build_objective(cost_);
        if (!iterate(sol)) return sol;
        sol.status = Status::optimal;
        sol.objective = obj_value();
        sol.x.assign(n_struct_, 0.0);
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_struct_) sol.x[basis_[i]] = b_[i];
        }
        sol.iterations = static_cast<int>(iterations_);
        return sol;
    }

private:
    void build_objective(const std::vector<double>& c) {
        z_.assign(n_total_, 0.0);
        z_rhs_ = 0.0;
        for (int j = 0; j < n_total_; ++j) z_[j] = c[j];
        for (int i = 0; i < m_; ++i) {
            double cb = c[basis_[i]];
            if (cb == 0.0) continue;
            const double* row = T_[i].data();
            for (int j = 0; j < n_total_; ++j) z_[j] -= cb * row[j];
            z_rhs_ -= cb * b_[i];
        }
    }

    double obj_value() const { return -z_rhs_; }

    bool usable(int j) const { return !in_phase2_ || j < n_real_; }

    bool iterate(Solution& sol) {
        bool bland = false;
        int stall = 0;
        double last_obj = obj_value();
        long cap = 200L * (m_ + n_total_) + 5000;
        while (true) {
            if (++iterations_ > cap) {
                sol.status = Status::numerical;
                return false;
            }
            int enter = -1;
            if (bland) {
                for (int j = 0; j < n_total_; ++j) {
                    if (usable(j) && z_[j] < -kEps) {
                        enter = j;
                        break;
                    }
                }
            } else {
                double best = -kEps;
                for (int j = 0; j < n_total_; ++j) {
                    if (usable(j) && z_[j] < best) {
                        best = z_[j];
                        enter = j;
                    }
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m_; ++i) {
                double a = T_[i][enter];
                if (a > kPivotEps) {
                    double ratio = b_[i] / a;
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 &&
                         (leave < 0 || basis_[i] < basis_[leave]))) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) {
                sol.status = Status::unbounded;
                return false;
            }
            pivot(leave, enter);
            double obj = obj_value();
            if (obj < last_obj - 1e-12) {
                last_obj = obj;
                stall = 0;
            } else if (!bland && ++stall > 2 * (m_ + 16)) {
                bland = true;
            }
        }
    }

    void pivot(int r, int c) {
        double inv = 1.0 / T_[r][c];
        double* prow = T_[r].data();
        for (int j = 0; j < n_total_; ++j) prow[j] *= inv;
        b_[r] *= inv;
        prow[c] = 1.0;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            double f = T_[i][c];
            if (std::fabs(f) < 1e-14) continue;
            double* row = T_[i].data();
            for (int j = 0; j < n_total_; ++j) row[j] -= f * prow[j];
            b_[i] -= f * b_[r];
            row[c] = 0.0;
            if (b_[i] < 0.0 && b_[i] > -1e-11) b_[i] = 0.0;
        }
        double f = z_[c];
        if (f != 0.0) {
            for (int j = 0; j < n_total_; ++j) z_[j] -= f * prow[j];
            z_rhs_ -= f * b_[r];
            z_[c] = 0.0;
        }
        basis_[r] = c;
    }

    // pivot basic artificials out after phase 1; redundant rows keep a
    // zero-valued artificial which phase 2 never re-prices
    void expel_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_real_) continue;
            int c = -1;
            for (int j = 0; j < n_real_; ++j) {
                if (std::fabs(T_[i][j]) > 1e-7) {
                    c = j;
                    break;
                }
            }
            if (c >= 0) pivot(i, c);
        }
    }

    int m_ = 0, n_struct_ = 0, n_real_ = 0, n_art_ = 0, n_total_ = 0, width_ = 0;
    bool in_phase2_ = false;
    long iterations_ = 0;
    std::vector<std::vector<double>> T_;
    std::vector<double> b_;
    std::vector<double> z_;
    double z_rhs_ = 0.0;
    std::vector<double> cost_;
    std::vector<int> basis_;
};

}  // namespace

Solution solve(const Problem& p) {
    Simplex s(p);
    Solution sol = s.run();
    if (sol.status != Status::optimal) return sol;
    for (size_t i = 0; i < p.rows.size(); ++i) {
        double lhs = 0.0, scale = 1.0;
        for (int j = 0; j < p.num_vars; ++j) {
            lhs += p.rows[i][j] * sol.x[j];
            scale = std::max(scale, std::fabs(p.rows[i][j]));
        }
        double resid = lhs - p.rhs[i];
        double tol = 1e-7 * scale * std::max(1.0, std::fabs(p.rhs[i]));
        bool ok = (p.senses[i] == Sense::le && resid <= tol) ||
                  (p.senses[i] == Sense::ge && resid >= -tol) ||
                  (p.senses[i] == Sense::eq && std::fabs(resid) <= tol);
        if (!ok) {
            sol.status = Status::numerical;
            return sol;
        }
    }
    return sol;
}

}  // namespace macsim::lp
