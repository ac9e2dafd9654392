#ifndef BQM_ERRORS_HPP_
#define BQM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bqm {

  // Malformed input: bad JSON, unknown vertex, unparsable word.
  struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  // Well-formed input outside the domain of an operation, e.g. a quiver that
  // is not mutation-Dynkin, or a type with no surface model.
  struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
  };

  // An enumeration did not close within its configured budget.
  struct budget_error : domain_error {
    using domain_error::domain_error;
  };

}  // namespace bqm

#endif  // BQM_ERRORS_HPP_
