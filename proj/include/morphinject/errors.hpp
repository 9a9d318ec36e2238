#ifndef MORPHINJECT_ERRORS_HPP
#define MORPHINJECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace morphinject {

struct MorphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EncodingError : MorphError { using MorphError::MorphError; };
struct ArgumentError : MorphError { using MorphError::MorphError; };
struct UnjoinableError : MorphError { using MorphError::MorphError; };
struct UnclassifiableError : MorphError { using MorphError::MorphError; };
struct UnsupportedFeaturesError : MorphError { using MorphError::MorphError; };
struct WidthError : MorphError { using MorphError::MorphError; };
struct NoVerbError : MorphError { using MorphError::MorphError; };
struct ParseError : MorphError { using MorphError::MorphError; };
struct ComparisonError : MorphError { using MorphError::MorphError; };

}  // namespace morphinject

#endif
