#ifndef QSPROB_ERRORS_HPP
#define QSPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsprob {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// prob_core
struct NotNormalized : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct DuplicateLabel : Error { using Error::Error; };
struct EmptySpace : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct MissingBranch : Error { using Error::Error; };
struct UndefinedOutcome : Error { using Error::Error; };
struct ImpossibleCondition : Error { using Error::Error; };
struct NotAPartition : Error { using Error::Error; };
struct ImpossibleCell : Error { using Error::Error; };

// quicksort_space / recurrence / splitter
struct TooLarge : Error { using Error::Error; };
struct InvalidRun : Error { using Error::Error; };
struct InvalidInterval : Error { using Error::Error; };
struct RankOutOfInterval : Error { using Error::Error; };
struct BadPair : Error { using Error::Error; };

// simulator
struct DuplicateItems : Error { using Error::Error; };
struct ZeroTrials : Error { using Error::Error; };

}  // namespace qsprob

#endif  // QSPROB_ERRORS_HPP
