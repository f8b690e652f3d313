#ifndef SYZLAB_ERROR_HPP
#define SYZLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace syzlab {

/// Malformed or out-of-contract input (bad polynomial string, non-homogeneous
/// generator, mismatched ranks, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A criterion was asked to run outside the hypotheses of its theorem.
class HypothesisRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed.
class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace syzlab

#endif  // SYZLAB_ERROR_HPP
