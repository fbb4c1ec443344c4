#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace genealogy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateIdError : public Error {
public:
    explicit DuplicateIdError(std::string id)
        : Error("duplicate scholar id: " + id), id_(std::move(id)) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class DanglingEdgeError : public Error {
public:
    DanglingEdgeError(std::string missing, const std::string& advisor, const std::string& student)
        : Error("edge " + advisor + " -> " + student + " references unknown id: " + missing),
          missing_(std::move(missing)) {}
    const std::string& missing_id() const noexcept { return missing_; }

private:
    std::string missing_;
};

class CycleError : public Error {
public:
    explicit CycleError(std::vector<std::string> cycle)
        : Error("cycle detected: " + join(cycle)), cycle_(std::move(cycle)) {}
    /// Ids along one offending cycle; the last node has an edge back to the first.
    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
    static std::string join(const std::vector<std::string>& ids) {
        std::string out;
        for (const auto& id : ids) {
            if (!out.empty()) out += " -> ";
            out += id;
        }
        if (!ids.empty()) out += " -> " + ids.front();
        return out;
    }
    std::vector<std::string> cycle_;
};

class UnknownIdError : public Error {
public:
    explicit UnknownIdError(std::string id)
        : Error("unknown scholar id: " + id), id_(std::move(id)) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class EmptySubsetError : public Error {
public:
    EmptySubsetError() : Error("subset J is empty after exclusions") {}
};

class SameNodeError : public Error {
public:
    explicit SameNodeError(const std::string& id)
        : Error("horizontal distance is undefined for a node against itself: " + id) {}
};

class NoLaureatesError : public Error {
public:
    NoLaureatesError() : Error("graph contains no laureates") {}
};

class DegenerateGroupError : public Error {
public:
    using Error::Error;
};

/// Fatal parse problem; always carries the offending file and line.
class ParseError : public Error {
public:
    ParseError(std::string path, std::size_t line, const std::string& reason)
        : Error(path + ":" + std::to_string(line) + ": " + reason),
          path_(std::move(path)), line_(line) {}
    const std::string& path() const noexcept { return path_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

class MalformedRowError : public ParseError {
public:
    MalformedRowError(std::string path, std::size_t line, const std::string& reason)
        : ParseError(std::move(path), line, "malformed row: " + reason) {}
};

class UnknownFieldError : public ParseError {
public:
    UnknownFieldError(std::string path, std::size_t line, const std::string& token)
        : ParseError(std::move(path), line, "unknown field: " + token) {}
};

class BadYearError : public ParseError {
public:
    BadYearError(std::string path, std::size_t line, const std::string& token)
        : ParseError(std::move(path), line, "bad year (integer >= 1901 required): " + token) {}
};

class SelfLoopError : public ParseError {
public:
    SelfLoopError(std::string path, std::size_t line, const std::string& id)
        : ParseError(std::move(path), line, "self loop on id: " + id) {}
};

class IoError : public Error {
public:
    using Error::Error;
};

class EmptySeriesError : public Error {
public:
    EmptySeriesError() : Error("cohort series has no points") {}
};

} // namespace genealogy
