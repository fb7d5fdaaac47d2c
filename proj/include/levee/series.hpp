#pragma once

#include <chrono>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace levee {

/// One timestamped level reading, in meters above sea level.
struct Observation {
  std::chrono::sys_days timestamp;
  double level = 0.0;
};

inline std::string format_date(std::chrono::sys_days day) {
  const std::chrono::year_month_day ymd(day);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

class WaterLevelSeries {
 public:
  WaterLevelSeries(std::vector<Observation> observations, double sampling_interval_days = 10.0)
      : observations_(std::move(observations)), sampling_interval_days_(sampling_interval_days) {
    if (observations_.size() < 2) {
      throw std::invalid_argument("water level series needs at least 2 observations");
    }
    if (!(sampling_interval_days_ > 0.0)) {
      throw std::invalid_argument("sampling interval must be positive");
    }
    for (std::size_t i = 0; i < observations_.size(); ++i) {
      if (!std::isfinite(observations_[i].level)) {
        throw std::invalid_argument("level at row " + std::to_string(i) + " is not finite");
      }
      if (i > 0 && observations_[i].timestamp <= observations_[i - 1].timestamp) {
        throw std::invalid_argument("timestamps must be strictly increasing (row " +
                                    std::to_string(i) + ")");
      }
    }
  }

  std::size_t size() const { return observations_.size(); }
  const Observation& operator[](std::size_t i) const { return observations_[i]; }
  const std::vector<Observation>& observations() const { return observations_; }
  double sampling_interval_days() const { return sampling_interval_days_; }

  std::vector<double> levels() const {
    std::vector<double> out;
    out.reserve(observations_.size());
    for (const auto& o : observations_) out.push_back(o.level);
    return out;
  }

 private:
  std::vector<Observation> observations_;
  double sampling_interval_days_;
};

/// Levels minus their arithmetic mean.
struct DeviationSeries {
  std::vector<double> deviations;
  double mean_level = 0.0;
};

inline DeviationSeries deviation_series(std::span<const double> levels) {
  if (levels.empty()) throw std::invalid_argument("deviation series needs data");
  double sum = 0.0;
  for (double v : levels) sum += v;
  const double mean = sum / static_cast<double>(levels.size());
  DeviationSeries out;
  out.mean_level = mean;
  out.deviations.reserve(levels.size());
  for (double v : levels) out.deviations.push_back(v - mean);
  return out;
}

inline DeviationSeries deviation_series(const WaterLevelSeries& series) {
  const auto levels = series.levels();
  return deviation_series(std::span<const double>(levels));
}

struct SeriesSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population form
  double min = 0.0;
  double max = 0.0;
};

inline SeriesSummary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize needs data");
  SeriesSummary s;
  s.count = values.size();
  s.min = values[0];
  s.max = values[0];
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(values.size()));
  return s;
}

}  // namespace levee
