#ifndef CENSURV_DATASET_HPP
#define CENSURV_DATASET_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace censurv {

/// One subject: follow-up time O = min(T, C), event flag d = 1{T <= C},
/// and a row of covariates measured at the index time.
struct ObservedSubject {
  double time = 0.0;
  bool event = false;
  std::vector<double> covariates;
};

/// Right-censored time-to-event dataset. Immutable after construction;
/// concurrent read access is safe.
class SurvivalDataset {
public:
  /// Validates times (finite, >= 0), covariate dimensions and finiteness.
  /// Covariate names default to x1..xp when not supplied.
  SurvivalDataset(std::vector<ObservedSubject> subjects,
                  std::vector<std::string> covariate_names = {});

  const std::vector<ObservedSubject>& subjects() const { return subjects_; }
  const std::vector<std::string>& covariate_names() const { return names_; }

  std::size_t size() const { return subjects_.size(); }
  std::size_t num_covariates() const { return p_; }
  std::size_t num_events() const { return n_events_; }

  /// Copy of covariate column j. Throws BadIndex.
  std::vector<double> covariate_column(std::size_t j) const;

private:
  std::vector<ObservedSubject> subjects_;
  std::vector<std::string> names_;
  std::size_t p_ = 0;
  std::size_t n_events_ = 0;
};

/// Convenience constructor from parallel arrays (covariates row-major, n x p).
SurvivalDataset make_dataset(const std::vector<double>& times,
                             const std::vector<bool>& events,
                             const std::vector<std::vector<double>>& covariate_rows,
                             std::vector<std::string> covariate_names = {});

}  // namespace censurv

#endif
