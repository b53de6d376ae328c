#include "pwrank/scores.hpp"

#include <cmath>
#include <utility>

#include "pwrank/errors.hpp"
#include "pwrank/normal.hpp"

namespace pwrank {

ScoreFunction ScoreFunction::wilcoxon() {
    ScoreFunction sf;
    sf.kind = Kind::Wilcoxon;
    sf.exact_sigma2 = 1.0 / 12.0;
    return sf;
}

ScoreFunction ScoreFunction::van_der_waerden() {
    ScoreFunction sf;
    sf.kind = Kind::VanDerWaerden;
    sf.exact_sigma2 = 1.0;
    return sf;
}

ScoreFunction ScoreFunction::make_custom(std::function<double(double)> phi,
                                         std::optional<double> sigma2) {
    ScoreFunction sf;
    sf.kind = Kind::Custom;
    sf.custom = std::move(phi);
    sf.exact_sigma2 = sigma2;
    return sf;
}

double ScoreFunction::phi(double u) const {
    switch (kind) {
        case Kind::Wilcoxon:
            return u;
        case Kind::VanDerWaerden:
            return inverse_normal_cdf(u);
        case Kind::Custom: {
            double v = custom(u);
            if (!std::isfinite(v))
                throw NumericalError("score_non_finite",
                                     "custom score function returned a non-finite value");
            return v;
        }
    }
    return 0.0;
}

std::string ScoreFunction::name() const {
    switch (kind) {
        case Kind::Wilcoxon:
            return "wilcoxon";
        case Kind::VanDerWaerden:
            return "vdw";
        case Kind::Custom:
            return "custom";
    }
    return "?";
}

Eigen::VectorXd score_vector(const ScoreFunction& sf, int n) {
    if (n < 1) throw InputError("bad_score_length", "score vector length must be >= 1");
    Eigen::VectorXd a(n);
    for (int k = 1; k <= n; ++k)
        a[k - 1] = sf.phi(static_cast<double>(k) / (n + 1));
    return a;
}

Eigen::VectorXd center_scores(const Eigen::VectorXd& a) {
    return a.array() - a.mean();
}

double classical_scale(const Eigen::VectorXd& a) {
    const auto n = a.size();
    if (n < 2)
        throw InputError("bad_score_length", "classical scale needs at least 2 scores");
    const double mean = a.mean();
    return (a.array() - mean).square().sum() / static_cast<double>(n - 1);
}

}  // namespace pwrank
