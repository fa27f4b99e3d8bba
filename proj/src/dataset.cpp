#include "censurv/dataset.hpp"

#include <cmath>

#include "censurv/error.hpp"

namespace censurv {

SurvivalDataset::SurvivalDataset(std::vector<ObservedSubject> subjects,
                                 std::vector<std::string> covariate_names)
    : subjects_(std::move(subjects)), names_(std::move(covariate_names)) {
  if (subjects_.empty())
    throw_error(ErrorCode::bad_argument, "dataset needs at least one subject");

  p_ = subjects_.front().covariates.size();
  for (std::size_t i = 0; i < subjects_.size(); ++i) {
    const auto& s = subjects_[i];
    if (!(s.time >= 0.0) || !std::isfinite(s.time))
      throw_error(ErrorCode::bad_argument,
                  "subject " + std::to_string(i) + " has invalid time");
    if (s.covariates.size() != p_)
      throw_error(ErrorCode::dimension_mismatch,
                  "subject " + std::to_string(i) + " has " +
                      std::to_string(s.covariates.size()) + " covariates, expected " +
                      std::to_string(p_));
    for (double x : s.covariates)
      if (!std::isfinite(x))
        throw_error(ErrorCode::bad_argument,
                    "subject " + std::to_string(i) + " has a non-finite covariate");
    if (s.event) ++n_events_;
  }

  if (names_.empty()) {
    names_.reserve(p_);
    for (std::size_t j = 0; j < p_; ++j) names_.push_back("x" + std::to_string(j + 1));
  } else if (names_.size() != p_) {
    throw_error(ErrorCode::dimension_mismatch,
                "got " + std::to_string(names_.size()) + " covariate names for p = " +
                    std::to_string(p_));
  }
}

std::vector<double> SurvivalDataset::covariate_column(std::size_t j) const {
  if (j >= p_)
    throw_error(ErrorCode::bad_index,
                "covariate index " + std::to_string(j) + " out of range (p = " +
                    std::to_string(p_) + ")");
  std::vector<double> column;
  column.reserve(subjects_.size());
  for (const auto& s : subjects_) column.push_back(s.covariates[j]);
  return column;
}

SurvivalDataset make_dataset(const std::vector<double>& times,
                             const std::vector<bool>& events,
                             const std::vector<std::vector<double>>& covariate_rows,
                             std::vector<std::string> covariate_names) {
  if (times.size() != events.size() ||
      (!covariate_rows.empty() && covariate_rows.size() != times.size()))
    throw_error(ErrorCode::length_mismatch, "times/events/covariates sizes differ");
  std::vector<ObservedSubject> subjects(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    subjects[i].time = times[i];
    subjects[i].event = events[i];
    if (!covariate_rows.empty()) subjects[i].covariates = covariate_rows[i];
  }
  return SurvivalDataset(std::move(subjects), std::move(covariate_names));
}

}  // namespace censurv
