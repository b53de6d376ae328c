#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

namespace pwrank {

// Rank-score generator a(k) = phi(k/(N+1)). phi must be square integrable
// on (0,1); that part of the contract is documented, not machine-checked.
struct ScoreFunction {
    enum class Kind { Wilcoxon, VanDerWaerden, Custom };

    Kind kind = Kind::Wilcoxon;
    // Score-scale constant of phi when analytically known
    // (Wilcoxon: 1/12, van der Waerden: 1). Custom functions estimate it
    // from data instead.
    std::optional<double> exact_sigma2;
    std::function<double(double)> custom;

    static ScoreFunction wilcoxon();
    static ScoreFunction van_der_waerden();
    static ScoreFunction make_custom(std::function<double(double)> phi,
                                     std::optional<double> sigma2 = std::nullopt);

    // Evaluates phi at u in (0,1).
    double phi(double u) const;
    std::string name() const;
};

// Scores a(k) = phi(k/(N+1)), k = 1..N.
Eigen::VectorXd score_vector(const ScoreFunction& sf, int n);

// Subtracts the mean; output sums to zero.
Eigen::VectorXd center_scores(const Eigen::VectorXd& a);

// Sample variance of the score vector with divisor N-1 (the classical
// two-sample rank-scale estimate; data-independent given the scores).
double classical_scale(const Eigen::VectorXd& a);

}  // namespace pwrank
