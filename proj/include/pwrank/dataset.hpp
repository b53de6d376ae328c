#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pwrank/errors.hpp"
#include "pwrank/scores.hpp"

namespace pwrank {

enum class Sided { TwoSided, OneSided };
enum class RefKind { MVN, MVT };
enum class ScaleMode { Weighted, PerPair, Classical };
enum class Family { AllPairs, Control };
// In control mode, which pair set backs the weighted scale: the control
// pairs only (the default) or all g(g-1)/2 pairs.
enum class ControlScale { ControlPairs, AllPairs };

// One-way or covariance-adjusted layout: responses, group labels mapped to
// contiguous indices in first-appearance order, and an N x p covariate
// matrix (p = 0 means one-way). Immutable after construction; safe to share
// across threads.
class Dataset {
public:
    Dataset(Eigen::VectorXd responses, std::vector<int> groups,
            Eigen::MatrixXd covariates, std::vector<std::string> group_labels);

    int n_obs() const { return static_cast<int>(responses_.size()); }
    int n_groups() const { return static_cast<int>(group_sizes_.size()); }
    int n_covariates() const { return static_cast<int>(covariates_.cols()); }

    const Eigen::VectorXd& responses() const { return responses_; }
    const std::vector<int>& groups() const { return groups_; }
    const Eigen::MatrixXd& covariates() const { return covariates_; }
    const std::vector<int>& group_sizes() const { return group_sizes_; }
    int group_size(int g) const { return group_sizes_.at(g); }
    // Row indices of group g in original file order.
    const std::vector<int>& rows_of(int g) const { return rows_.at(g); }
    const std::vector<std::string>& group_labels() const { return labels_; }

private:
    Eigen::VectorXd responses_;
    std::vector<int> groups_;  // 0-based contiguous indices
    Eigen::MatrixXd covariates_;
    std::vector<int> group_sizes_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::string> labels_;
};

struct AnalysisConfig {
    ScoreFunction score_function = ScoreFunction::wilcoxon();
    Family family = Family::AllPairs;
    int control_group = -1;  // 0-based mapped index, Family::Control only
    Sided sided = Sided::TwoSided;
    double alpha = 0.05;
    RefKind reference = RefKind::MVT;
    ScaleMode scale_mode = ScaleMode::Weighted;
    ControlScale control_scale = ControlScale::ControlPairs;
    int mc_quantile_draws = 100000;
    std::uint64_t rng_seed = 202406ull;
    int threads = 1;
};

struct CsvSchema {
    std::string response;
    std::string group;
    std::vector<std::string> covariates;
};

// RFC-4180 CSV with a header row. Numeric response/covariate columns,
// group column of any scalar type. Groups are relabeled to contiguous
// indices in first-appearance order.
Dataset parse_csv(std::istream& in, const CsvSchema& schema);

// Serializes back to CSV with the given column names (round-trips up to
// group relabeling).
std::string to_csv(const Dataset& ds, const CsvSchema& schema);

// Structural checks: group sizes vs p, per-pair design rank, config
// consistency. Returns all violations; warnings do not invalidate.
std::vector<Diagnostic> validate(const Dataset& ds, const AnalysisConfig& cfg);

}  // namespace pwrank
