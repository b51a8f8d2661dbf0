#include "stegkit/steganalysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "stegkit/errors.hpp"

namespace stegkit {
namespace {

int occupied_level_count(const Histogram& h) {
  int occupied = 0;
  for (auto c : h.counts) {
    if (c > 0) ++occupied;
  }
  return occupied;
}

bool triggers(double score, double threshold, bool low_triggers) {
  return low_triggers ? score <= threshold : score >= threshold;
}

struct ScoreRef {
  const char* name;
  double value;
  double threshold;
  bool low_triggers;
};

}  // namespace

ChiSquare pov_chi_square(const Histogram& h) {
  if (h.total == 0) {
    throw DegenerateInputError("chi-square needs a non-empty histogram");
  }
  ChiSquare result;
  for (int k = 0; k < 128; ++k) {
    const double even = static_cast<double>(h.counts[2 * k]);
    const double odd = static_cast<double>(h.counts[2 * k + 1]);
    const double sum = even + odd;
    if (sum == 0.0) continue;
    const double expected = sum / 2.0;
    const double d_even = even - expected;
    const double d_odd = odd - expected;
    result.statistic += (d_even * d_even + d_odd * d_odd) / expected;
    ++result.dof;
  }
  return result;
}

double comb_score(const Histogram& h) {
  const auto [lo, hi] = occupied_range(h);
  if (hi - lo + 1 < 3) {
    throw DegenerateInputError(
        "comb score needs an occupied range spanning at least 3 levels");
  }
  int interior = 0;
  int reversals = 0;
  for (int k = lo + 1; k <= hi - 1; ++k) {
    const auto before =
        static_cast<std::int64_t>(h.counts[k]) - static_cast<std::int64_t>(h.counts[k - 1]);
    const auto after =
        static_cast<std::int64_t>(h.counts[k + 1]) - static_cast<std::int64_t>(h.counts[k]);
    ++interior;
    if ((before > 0 && after < 0) || (before < 0 && after > 0)) ++reversals;
  }
  return static_cast<double>(reversals) / static_cast<double>(interior);
}

double discontinuity_score(const Histogram& h) {
  const auto p = normalize(h);
  double tv = 0.0;
  for (int k = 0; k < 255; ++k) {
    tv += std::abs(p[k + 1] - p[k]);
  }
  return tv;
}

double empty_bin_ratio(const Histogram& h) {
  const auto [lo, hi] = occupied_range(h);
  if (hi - lo + 1 < 2) {
    throw DegenerateInputError(
        "empty-bin ratio needs an occupied range spanning at least 2 levels");
  }
  const int interior = hi - lo - 1;
  if (interior == 0) return 0.0;
  int empty = 0;
  for (int k = lo + 1; k <= hi - 1; ++k) {
    if (h.counts[k] == 0) ++empty;
  }
  return static_cast<double>(empty) / static_cast<double>(interior);
}

Thresholds default_thresholds() {
  // Frozen from `calibrate` on the bundled synthetic corpus (tests/support,
  // seeds 1..20, full-capacity 1-plane embedding).
  Thresholds th;
  th.chi_square = 250.0;
  th.comb = 0.80;
  th.discontinuity = 0.075;
  th.empty_bin_ratio = 0.10;
  th.rule = CombinationRule::any_score_triggers;
  return th;
}

DetectionReport detect(const GrayImage& img, const Thresholds& th) {
  DetectionReport report;
  report.thresholds = th;

  const Histogram h = compute_histogram(img);
  const auto [lo, hi] = occupied_range(h);
  const int span = hi - lo + 1;

  const ChiSquare chi = pov_chi_square(h);
  report.scores.chi_square = chi.statistic;
  report.scores.chi_square_dof = chi.dof;
  report.scores.discontinuity = discontinuity_score(h);
  report.scores.comb = span >= 3 ? comb_score(h) : 0.0;
  report.scores.empty_bin_ratio = span >= 2 ? empty_bin_ratio(h) : 0.0;

  if (img.pixel_count() < kMinPixels ||
      occupied_level_count(h) < kMinOccupiedLevels) {
    report.verdict = Verdict::degenerate_input;
    return report;
  }

  const ScoreRef scores[] = {
      {"chi_square", report.scores.chi_square, th.chi_square, true},
      {"comb", report.scores.comb, th.comb, false},
      {"discontinuity", report.scores.discontinuity, th.discontinuity, false},
      {"empty_bin_ratio", report.scores.empty_bin_ratio, th.empty_bin_ratio,
       false},
  };

  double triggered_weight = 0.0;
  double total_weight = 0.0;
  for (int i = 0; i < 4; ++i) {
    total_weight += th.weights[i];
    if (triggers(scores[i].value, scores[i].threshold,
                 scores[i].low_triggers)) {
      report.triggered.emplace_back(scores[i].name);
      triggered_weight += th.weights[i];
    }
  }

  bool fires = false;
  switch (th.rule) {
    case CombinationRule::any_score_triggers:
      fires = !report.triggered.empty();
      break;
    case CombinationRule::majority:
      fires = report.triggered.size() >= 3;  // more than half of four
      break;
    case CombinationRule::weighted:
      fires = triggered_weight > total_weight / 2.0;
      break;
  }
  report.verdict = fires ? Verdict::suspected_stego : Verdict::clean;
  return report;
}

ScoreCalibration calibrate_score(std::span<const double> cover_scores,
                                 std::span<const double> stego_scores,
                                 bool low_triggers) {
  if (cover_scores.empty() || stego_scores.empty()) {
    throw DegenerateInputError("calibration needs scores from both classes");
  }

  std::set<double> candidates(cover_scores.begin(), cover_scores.end());
  candidates.insert(stego_scores.begin(), stego_scores.end());

  ScoreCalibration cal;
  bool first = true;
  for (double t : candidates) {
    const auto hits = [&](std::span<const double> values) {
      return static_cast<double>(
                 std::count_if(values.begin(), values.end(),
                               [&](double v) { return triggers(v, t, low_triggers); })) /
             static_cast<double>(values.size());
    };
    RocPoint point;
    point.threshold = t;
    point.tpr = hits(stego_scores);
    point.fpr = hits(cover_scores);
    cal.roc.push_back(point);

    const double j = point.tpr - point.fpr;
    if (first || j > cal.youden_j) {  // ties keep the lower threshold
      first = false;
      cal.youden_j = j;
      cal.threshold = t;
      const auto n_stego = static_cast<double>(stego_scores.size());
      const auto n_cover = static_cast<double>(cover_scores.size());
      cal.accuracy = (point.tpr * n_stego + (1.0 - point.fpr) * n_cover) /
                     (n_stego + n_cover);
    }
  }
  return cal;
}

CalibrationResult calibrate(std::span<const GrayImage> covers,
                            std::span<const GrayImage> stegos) {
  if (covers.empty() || stegos.empty()) {
    throw DegenerateInputError("calibration needs non-empty image sets");
  }

  struct Lists {
    std::vector<double> chi, comb, disc, empty;
  };
  auto collect = [](std::span<const GrayImage> images) {
    Lists lists;
    for (const GrayImage& img : images) {
      const Histogram h = compute_histogram(img);
      if (img.pixel_count() < kMinPixels ||
          occupied_level_count(h) < kMinOccupiedLevels) {
        continue;  // degenerate images carry no calibration signal
      }
      lists.chi.push_back(pov_chi_square(h).statistic);
      lists.comb.push_back(comb_score(h));
      lists.disc.push_back(discontinuity_score(h));
      lists.empty.push_back(empty_bin_ratio(h));
    }
    return lists;
  };

  const Lists cover_scores = collect(covers);
  const Lists stego_scores = collect(stegos);
  if (cover_scores.chi.empty() || stego_scores.chi.empty()) {
    throw DegenerateInputError(
        "calibration needs at least one non-degenerate image per class");
  }

  CalibrationResult result;
  result.chi_square = calibrate_score(cover_scores.chi, stego_scores.chi, true);
  result.comb = calibrate_score(cover_scores.comb, stego_scores.comb, false);
  result.discontinuity =
      calibrate_score(cover_scores.disc, stego_scores.disc, false);
  result.empty_bin_ratio =
      calibrate_score(cover_scores.empty, stego_scores.empty, false);

  result.thresholds.chi_square = result.chi_square.threshold;
  result.thresholds.comb = result.comb.threshold;
  result.thresholds.discontinuity = result.discontinuity.threshold;
  result.thresholds.empty_bin_ratio = result.empty_bin_ratio.threshold;
  result.thresholds.rule = CombinationRule::any_score_triggers;
  return result;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::clean:
      return "clean";
    case Verdict::suspected_stego:
      return "suspected-stego";
    case Verdict::degenerate_input:
      return "degenerate-input";
  }
  throw std::logic_error("unknown verdict");
}

std::string to_string(CombinationRule r) {
  switch (r) {
    case CombinationRule::any_score_triggers:
      return "any-score-triggers";
    case CombinationRule::majority:
      return "majority";
    case CombinationRule::weighted:
      return "weighted";
  }
  throw std::logic_error("unknown combination rule");
}

CombinationRule combination_rule_from_string(const std::string& s) {
  if (s == "any-score-triggers") return CombinationRule::any_score_triggers;
  if (s == "majority") return CombinationRule::majority;
  if (s == "weighted") return CombinationRule::weighted;
  throw ParseError("unknown combination rule \"" + s + "\"");
}

}  // namespace stegkit
