#ifndef NPWSD_ERRORS_HPP
#define NPWSD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace npwsd {

// Bad or missing input data (file contents, corpus structure, invariant
// violations). CLI maps this to exit status 2.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
  DataError(const std::string& file, std::size_t line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
};

// Bad command-line usage. CLI maps this to exit status 1.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pipeline stage failure; the message is prefixed with the stage name so
// batch logs show where the run aborted.
class StageError : public DataError {
public:
  StageError(const std::string& stage, const std::string& msg)
      : DataError(stage + ": " + msg), stage_(stage) {}
  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

}  // namespace npwsd

#endif
