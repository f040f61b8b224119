#pragma once

#include <stdexcept>
#include <string>

namespace trinkit {

/// Base of every error raised by the library. The CLI maps these to exit 2
/// (bad input) or exit 1 (a verification invariant fired).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TRINKIT_DEFINE_ERROR(Name)              \
  class Name : public Error {                   \
   public:                                      \
    using Error::Error;                         \
  }

// plane_graph
TRINKIT_DEFINE_ERROR(SchemaError);
TRINKIT_DEFINE_ERROR(NotConnected);
TRINKIT_DEFINE_ERROR(NotPlanarConsistent);
TRINKIT_DEFINE_ERROR(NotBipartite);

// trees / hypertrees / dividing / transitions
TRINKIT_DEFINE_ERROR(CapExceeded);
TRINKIT_DEFINE_ERROR(UnknownRoot);
TRINKIT_DEFINE_ERROR(SameHypertreeRequired);
TRINKIT_DEFINE_ERROR(NoPath);
TRINKIT_DEFINE_ERROR(WrongClass);
TRINKIT_DEFINE_ERROR(IndexMismatch);
TRINKIT_DEFINE_ERROR(SizeMismatch);
TRINKIT_DEFINE_ERROR(NotSpanning);
TRINKIT_DEFINE_ERROR(NotTight);
TRINKIT_DEFINE_ERROR(Stuck);
TRINKIT_DEFINE_ERROR(EulerNotConstant);
TRINKIT_DEFINE_ERROR(NotTreeHuggingReachable);
TRINKIT_DEFINE_ERROR(NotBijective);

// fkt
TRINKIT_DEFINE_ERROR(NotFourRegular);
TRINKIT_DEFINE_ERROR(StarsNotAdjacent);
TRINKIT_DEFINE_ERROR(CountMismatch);
TRINKIT_DEFINE_ERROR(NotSingleLoop);
TRINKIT_DEFINE_ERROR(MappingFailure);

// corpus
TRINKIT_DEFINE_ERROR(UnknownFamily);

#undef TRINKIT_DEFINE_ERROR

/// Default bound on the number of objects any enumeration may produce.
inline constexpr long long kDefaultCap = 1'000'000;

}  // namespace trinkit
