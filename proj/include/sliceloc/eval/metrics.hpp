#pragma once

#include <span>
#include <string>

namespace sliceloc::eval {

/// Table-style error summary in millimetres.
struct ErrorMetrics {
  double mean = 0.0;
  double std = 0.0;     // population (divide by N)
  double median = 0.0;  // midpoint of the two central values for even counts
  double max = 0.0;
  int count_gt_10mm = 0;
  int samples = 0;
};

inline constexpr double kLargeErrorMm = 10.0;

double localization_error(int predicted_row, int truth_row, double spacing_mm);

/// Throws ContractError on empty input.
ErrorMetrics compute_metrics(std::span<const double> errors_mm);

/// Two-line block: "Mean,Std,Median,Max,Error > 10mm" and the values.
std::string format_summary(const ErrorMetrics& m);

}  // namespace sliceloc::eval
