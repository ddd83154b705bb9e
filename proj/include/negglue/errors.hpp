#pragma once

#include <stdexcept>
#include <string>

namespace negglue {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyAssembly : public Error {
 public:
  EmptyAssembly() : Error("empty assembly") {}
};

class InvalidScale : public Error {
 public:
  InvalidScale() : Error("scale factor must be >= 1") {}
};

class UnknownGlue : public Error {
 public:
  explicit UnknownGlue(const std::string& name) : Error("unknown glue label: " + name) {}
};

class TooLargeForExact : public Error {
 public:
  TooLargeForExact(std::size_t n, std::size_t limit)
      : Error("exact cut enumeration requested for " + std::to_string(n) +
              " vertices (limit " + std::to_string(limit) + ")") {}
};

class TraceDivergence : public Error {
 public:
  TraceDivergence(std::string trace, std::size_t step, const std::string& why)
      : Error("trace '" + trace + "' diverged at step " + std::to_string(step) + ": " + why),
        trace_(std::move(trace)),
        step_(step) {}
  const std::string& trace() const { return trace_; }
  std::size_t step() const { return step_; }

 private:
  std::string trace_;
  std::size_t step_;
};

class DisconnectedShape : public Error {
 public:
  DisconnectedShape() : Error("shape is not 4-connected") {}
};

class EmptyShape : public Error {
 public:
  EmptyShape() : Error("shape has no cells") {}
};

class InconclusiveVerdict : public Error {
 public:
  explicit InconclusiveVerdict(const std::string& why) : Error("inconclusive: " + why) {}
};

class LoadError : public Error {
 public:
  LoadError(const std::string& where, const std::string& why) : Error(where + ": " + why) {}
};

}  // namespace negglue
