#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rnnids {

// Base for every error raised by the toolkit. `name()` is the stable,
// machine-readable error kind reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define RNNIDS_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& message) : Error(#Type, message) {} \
  }

// seqmodel
RNNIDS_DEFINE_ERROR(EmptyCorpus);
RNNIDS_DEFINE_ERROR(ShapeError);
RNNIDS_DEFINE_ERROR(TooShort);
RNNIDS_DEFINE_ERROR(UnknownToken);
RNNIDS_DEFINE_ERROR(InvalidConfig);
RNNIDS_DEFINE_ERROR(ModelFormatError);

class TrainingDiverged : public Error {
 public:
  TrainingDiverged(std::size_t epoch, const std::string& message)
      : Error("TrainingDiverged", message), epoch_(epoch) {}
  std::size_t epoch() const noexcept { return epoch_; }

 private:
  std::size_t epoch_;
};

// simmetrics
RNNIDS_DEFINE_ERROR(EmptyInput);
RNNIDS_DEFINE_ERROR(NotEnoughSequences);
RNNIDS_DEFINE_ERROR(InvalidParams);

// signatures
RNNIDS_DEFINE_ERROR(DfaTooLarge);
RNNIDS_DEFINE_ERROR(GenerationImpossible);

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("ParseError", "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RegexSyntaxError : public Error {
 public:
  RegexSyntaxError(std::size_t position, const std::string& message)
      : Error("RegexSyntaxError", "at offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnrepairableOutput : public Error {
 public:
  UnrepairableOutput(std::string repaired, const RegexSyntaxError& cause)
      : Error("UnrepairableOutput", std::string("still unparsable after repair: ") + cause.what()),
        repaired_(std::move(repaired)), cause_(cause) {}
  const std::string& repaired() const noexcept { return repaired_; }
  const RegexSyntaxError& cause() const noexcept { return cause_; }

 private:
  std::string repaired_;
  RegexSyntaxError cause_;
};

// payloads
RNNIDS_DEFINE_ERROR(EmptyKey);

// dataset
RNNIDS_DEFINE_ERROR(PcapFormatError);

class HostOverlapError : public Error {
 public:
  HostOverlapError(std::vector<std::string> addresses, const std::string& message)
      : Error("HostOverlapError", message), addresses_(std::move(addresses)) {}
  const std::vector<std::string>& addresses() const noexcept { return addresses_; }

 private:
  std::vector<std::string> addresses_;
};

class DatasetFormatError : public Error {
 public:
  DatasetFormatError(std::size_t line, const std::string& message)
      : Error("DatasetFormatError", "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// detector
RNNIDS_DEFINE_ERROR(LeakageError);
RNNIDS_DEFINE_ERROR(DuplicateRule);

#undef RNNIDS_DEFINE_ERROR

}  // namespace rnnids
