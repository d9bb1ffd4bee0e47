#pragma once

#include <stdexcept>
#include <string>

namespace hourglass {

// 1-based position inside a formula expression or scenario file.
// line is 0 for positions inside standalone formula strings.
struct SourcePos {
  int line = 0;
  int column = 0;
};

namespace detail_errors {

inline std::string at(SourcePos pos, const std::string& message) {
  if (pos.line > 0) {
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
           message;
  }
  if (pos.column > 0) {
    return "column " + std::to_string(pos.column) + ": " + message;
  }
  return message;
}

}  // namespace detail_errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePos pos, const std::string& message)
      : Error(detail_errors::at(pos, message)), pos_(pos) {}

  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

// A formula referenced an atom that is not part of the vocabulary.
class UnknownAtom : public Error {
 public:
  explicit UnknownAtom(std::string name, SourcePos pos = {})
      : Error(detail_errors::at(pos, "unknown atom '" + name + "'")),
        name_(std::move(name)),
        pos_(pos) {}

  const std::string& name() const { return name_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string name_;
  SourcePos pos_;
};

// An operation was asked about a specification name not declared in the
// universe.
class UnknownSpec : public Error {
 public:
  explicit UnknownSpec(std::string name, SourcePos pos = {})
      : Error(detail_errors::at(pos, "unknown specification '" + name + "'")),
        name_(std::move(name)),
        pos_(pos) {}

  const std::string& name() const { return name_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string name_;
  SourcePos pos_;
};

class DuplicateName : public Error {
 public:
  explicit DuplicateName(std::string name, SourcePos pos = {})
      : Error(detail_errors::at(pos, "duplicate name '" + name + "'")),
        name_(std::move(name)),
        pos_(pos) {}

  const std::string& name() const { return name_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string name_;
  SourcePos pos_;
};

// A name was used before its declaring statement (the declaration exists
// later in the same file).
class ForwardReference : public Error {
 public:
  explicit ForwardReference(std::string name, SourcePos pos = {})
      : Error(detail_errors::at(pos, "forward reference to '" + name + "'")),
        name_(std::move(name)),
        pos_(pos) {}

  const std::string& name() const { return name_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string name_;
  SourcePos pos_;
};

// A value or annotation key was assigned twice; assignments never override
// silently.
class DuplicateValue : public Error {
 public:
  explicit DuplicateValue(std::string name, SourcePos pos = {})
      : Error(detail_errors::at(pos, "duplicate assignment for '" + name + "'")),
        name_(std::move(name)),
        pos_(pos) {}

  const std::string& name() const { return name_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string name_;
  SourcePos pos_;
};

// Exhaustive truth-assignment checking is capped; beyond the cap there is no
// complete decision procedure configured.
class VocabularyTooLarge : public Error {
 public:
  VocabularyTooLarge(std::size_t size, std::size_t limit)
      : Error("vocabulary of " + std::to_string(size) +
              " atoms exceeds the exhaustive-check limit of " +
              std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

}  // namespace hourglass
