#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kwclass {

// An input file or directory does not exist. The CLI maps this to exit code 2.
class FileNotFoundError : public std::runtime_error {
public:
    explicit FileNotFoundError(const std::string& path)
        : std::runtime_error("not found: " + path), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Fewer nonzero-count candidates than the requested k. CLI exit code 3.
class InsufficientVocabularyError : public std::runtime_error {
public:
    InsufficientVocabularyError(std::size_t available, std::size_t requested)
        : std::runtime_error("insufficient vocabulary: " + std::to_string(available) +
                             " keyword(s) with nonzero count, need " +
                             std::to_string(requested)),
          available_(available),
          requested_(requested) {}

    std::size_t available() const { return available_; }
    std::size_t requested() const { return requested_; }

private:
    std::size_t available_;
    std::size_t requested_;
};

// A model file violates one of the model invariants. CLI exit code 4.
class ModelValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kwclass
