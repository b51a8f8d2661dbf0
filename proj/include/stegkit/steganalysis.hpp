#pragma once

// Histogram-based stego detection: a pairs-of-values chi-square statistic
// plus three shape scores (comb alternation, total variation, interior empty
// bins), a threshold classifier, and Youden-J threshold calibration.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stegkit/histogram.hpp"
#include "stegkit/image.hpp"

namespace stegkit {

// Inputs below these limits carry too little statistical mass to score.
inline constexpr int kMinOccupiedLevels = 3;
inline constexpr std::size_t kMinPixels = 1024;

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
};

// Over gray pairs (2k, 2k+1) with combined count s > 0 and expected e = s/2:
// sum of (count - e)^2 / e for both members; dof counts included pairs.
// LSB replacement moves mass only within a pair, so full-capacity embedding
// drives the statistic down toward its dof; natural images score far above.
ChiSquare pov_chi_square(const Histogram& h);

// Fraction of interior levels of the occupied range where the first
// difference strictly changes sign. Monotone histograms score 0, a perfect
// alternation of peaks and valleys scores 1. Needs an occupied span >= 3.
double comb_score(const Histogram& h);

// Total variation of the normalized histogram over all 256 levels.
double discontinuity_score(const Histogram& h);

// Fraction of levels strictly inside the occupied range with zero count.
// Needs an occupied span >= 2; a span of exactly 2 has no interior and
// scores 0.
double empty_bin_ratio(const Histogram& h);

struct ScoreVector {
  double chi_square = 0.0;
  int chi_square_dof = 0;
  double comb = 0.0;
  double discontinuity = 0.0;
  double empty_bin_ratio = 0.0;
};

enum class CombinationRule { any_score_triggers, majority, weighted };

// Trigger directions: chi_square triggers at score <= threshold (embedding
// suppresses it); the other three trigger at score >= threshold.
struct Thresholds {
  double chi_square = 0.0;
  double comb = 0.0;
  double discontinuity = 0.0;
  double empty_bin_ratio = 0.0;
  CombinationRule rule = CombinationRule::any_score_triggers;
  // Per-score weights for the weighted rule, in the order chi_square, comb,
  // discontinuity, empty_bin_ratio. The weighted rule fires when the summed
  // weight of triggered scores exceeds half the total weight; majority is
  // the same with unit weights (at least 3 of 4).
  std::array<double, 4> weights{1.0, 1.0, 1.0, 1.0};
};

// Calibrated on the bundled synthetic corpus; recalibrate for real data.
Thresholds default_thresholds();

enum class Verdict { clean, suspected_stego, degenerate_input };

struct DetectionReport {
  ScoreVector scores;
  Verdict verdict = Verdict::clean;
  std::vector<std::string> triggered;
  Thresholds thresholds;
};

// Degenerate inputs (fewer than kMinOccupiedLevels occupied levels or fewer
// than kMinPixels pixels) get verdict degenerate_input and never trigger.
// Scores whose span precondition fails on such inputs are reported as 0.
DetectionReport detect(const GrayImage& img, const Thresholds& th);

struct RocPoint {
  double threshold = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
};

struct ScoreCalibration {
  double threshold = 0.0;
  double youden_j = 0.0;
  double accuracy = 0.0;
  std::vector<RocPoint> roc;
};

struct CalibrationResult {
  Thresholds thresholds;
  ScoreCalibration chi_square;
  ScoreCalibration comb;
  ScoreCalibration discontinuity;
  ScoreCalibration empty_bin_ratio;
};

// Threshold selection for one score from labeled values. Candidates are
// the distinct observed values; picks the one maximizing Youden's J
// (ties broken toward the lower threshold). low_triggers selects the
// trigger direction (true for chi_square).
ScoreCalibration calibrate_score(std::span<const double> cover_scores,
                                 std::span<const double> stego_scores,
                                 bool low_triggers);

// Scores every image, skips degenerate ones, and calibrates each score.
// Throws DegenerateInputError when either class is empty or all-degenerate.
CalibrationResult calibrate(std::span<const GrayImage> covers,
                            std::span<const GrayImage> stegos);

std::string to_string(Verdict v);
std::string to_string(CombinationRule r);
CombinationRule combination_rule_from_string(const std::string& s);

}  // namespace stegkit
