#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace levee {

enum class Family { exponential, weibull, gumbel, frechet };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::exponential: return "exponential";
    case Family::weibull: return "weibull";
    case Family::gumbel: return "gumbel";
    case Family::frechet: return "frechet";
  }
  return "unknown";
}

inline Family family_from_name(std::string_view name) {
  if (name == "exponential" || name == "e") return Family::exponential;
  if (name == "weibull" || name == "w") return Family::weibull;
  if (name == "gumbel" || name == "g") return Family::gumbel;
  if (name == "frechet" || name == "f") return Family::frechet;
  throw std::invalid_argument("unknown distribution family: " + std::string(name));
}

/// Parametric tail model. Exponential and Weibull use the rate form
/// F(x) = 1 - exp(-rate * x^shape) on x > 0 (shape fixed to 1 for the
/// exponential); Gumbel and Frechet use standard location/scale forms.
/// Parameters are validated here so the evaluation functions can assume a
/// well-formed model.
class DistributionModel {
 public:
  static DistributionModel exponential(double rate) {
    require(rate > 0.0 && std::isfinite(rate), "exponential rate must be positive");
    return DistributionModel(Family::exponential, rate, 1.0, 0.0, 1.0);
  }

  static DistributionModel weibull(double rate, double shape) {
    require(rate > 0.0 && std::isfinite(rate), "weibull rate must be positive");
    require(shape > 0.0 && std::isfinite(shape), "weibull shape must be positive");
    return DistributionModel(Family::weibull, rate, shape, 0.0, 1.0);
  }

  static DistributionModel gumbel(double location, double scale) {
    require(std::isfinite(location), "gumbel location must be finite");
    require(scale > 0.0 && std::isfinite(scale), "gumbel scale must be positive");
    return DistributionModel(Family::gumbel, 0.0, 0.0, location, scale);
  }

  static DistributionModel frechet(double shape, double location = 0.0, double scale = 1.0) {
    require(shape > 0.0 && std::isfinite(shape), "frechet shape must be positive");
    require(std::isfinite(location), "frechet location must be finite");
    require(scale > 0.0 && std::isfinite(scale), "frechet scale must be positive");
    return DistributionModel(Family::frechet, 0.0, shape, location, scale);
  }

  Family family() const { return family_; }
  double rate() const { return rate_; }
  double shape() const { return shape_; }
  double location() const { return location_; }
  double scale() const { return scale_; }

  double cdf(double x) const {
    switch (family_) {
      case Family::exponential:
      case Family::weibull:
        if (!(x > 0.0)) return 0.0;
        return -std::expm1(-rate_ * power(x));
      case Family::gumbel:
        return std::exp(-std::exp(-(x - location_) / scale_));
      case Family::frechet:
        if (!(x > location_)) return 0.0;
        return std::exp(-std::pow((x - location_) / scale_, -shape_));
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  // Survival is evaluated in its closed exponent form, never as 1 - cdf;
  // tail probabilities stay meaningful far below double epsilon.
  double survival(double x) const {
    switch (family_) {
      case Family::exponential:
      case Family::weibull:
        if (!(x > 0.0)) return 1.0;
        return std::exp(-rate_ * power(x));
      case Family::gumbel:
        return -std::expm1(-std::exp(-(x - location_) / scale_));
      case Family::frechet:
        if (!(x > location_)) return 1.0;
        return -std::expm1(-std::pow((x - location_) / scale_, -shape_));
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  double pdf(double x) const {
    switch (family_) {
      case Family::exponential:
        if (x < 0.0) return 0.0;
        return rate_ * std::exp(-rate_ * x);
      case Family::weibull: {
        if (x < 0.0) return 0.0;
        if (x == 0.0) {
          if (shape_ > 1.0) return 0.0;
          if (shape_ == 1.0) return rate_;
          return std::numeric_limits<double>::infinity();
        }
        return rate_ * shape_ * std::pow(x, shape_ - 1.0) * std::exp(-rate_ * power(x));
      }
      case Family::gumbel: {
        const double z = (x - location_) / scale_;
        return std::exp(-z - std::exp(-z)) / scale_;
      }
      case Family::frechet: {
        if (!(x > location_)) return 0.0;
        const double z = (x - location_) / scale_;
        return (shape_ / scale_) * std::pow(z, -shape_ - 1.0) * std::exp(-std::pow(z, -shape_));
      }
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  double quantile(double p) const {
    require(p > 0.0 && p < 1.0, "quantile probability must be in (0,1)");
    switch (family_) {
      case Family::exponential:
        return -std::log1p(-p) / rate_;
      case Family::weibull:
        return std::pow(-std::log1p(-p) / rate_, 1.0 / shape_);
      case Family::gumbel:
        return location_ - scale_ * std::log(-std::log(p));
      case Family::frechet:
        return location_ + scale_ * std::pow(-std::log(p), -1.0 / shape_);
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

 private:
  DistributionModel(Family family, double rate, double shape, double location, double scale)
      : family_(family), rate_(rate), shape_(shape), location_(location), scale_(scale) {}

  static void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
  }

  double power(double x) const { return shape_ == 1.0 ? x : std::pow(x, shape_); }

  Family family_;
  double rate_;      // exponential, weibull
  double shape_;     // weibull, frechet
  double location_;  // gumbel, frechet
  double scale_;     // gumbel, frechet
};

/// Sample held sorted; cdf follows the "count of values <= x over n"
/// convention (1 at the sample maximum), quantile is the least value whose
/// cdf strictly exceeds p.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::span<const double> values)
      : sorted_(values.begin(), values.end()) {
    if (sorted_.empty()) throw std::invalid_argument("empirical distribution needs data");
    std::sort(sorted_.begin(), sorted_.end());
  }

  const std::vector<double>& sorted_values() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }
  double min() const { return sorted_.front(); }
  double max() const { return sorted_.back(); }

  double cdf(double x) const {
    const auto count = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
    return static_cast<double>(count) / static_cast<double>(sorted_.size());
  }

  double quantile(double p) const {
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("empirical quantile needs p in [0,1)");
    const double target = p * static_cast<double>(sorted_.size());
    // cdf at a value is constant across its tie block, so the predicate is
    // monotone over the sorted range.
    const auto it = std::partition_point(sorted_.begin(), sorted_.end(), [&](const double& v) {
      const auto count = std::upper_bound(sorted_.begin(), sorted_.end(), v) - sorted_.begin();
      return static_cast<double>(count) <= target;
    });
    return it == sorted_.end() ? sorted_.back() : *it;
  }

 private:
  std::vector<double> sorted_;
};

}  // namespace levee
