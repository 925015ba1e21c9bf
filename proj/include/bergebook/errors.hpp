#pragma once
#include <stdexcept>
#include <string>

namespace bergebook {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input validation
struct OutOfRange : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };
struct Duplicate : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// a lemma's hypothesis bound does not hold for this input; caller decides what to do next
struct HypothesisUnmet : Error { using Error::Error; };

// an assembled certificate failed verification; carries a dump of the extraction state
struct ExtractionFailed : Error {
  ExtractionFailed(const std::string& msg, std::string state)
      : Error(msg), state_dump(std::move(state)) {}
  std::string state_dump;
};

}  // namespace bergebook
